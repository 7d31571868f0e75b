#include "gst/graph.hpp"

#include <algorithm>
#include <queue>

namespace gst {

namespace {

constexpr int kBitMatrixMaxOrder = 2048;

uint64_t edge_key(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<uint64_t>(u) * static_cast<uint64_t>(n + 1) + static_cast<uint64_t>(v);
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    adj_.resize(static_cast<size_t>(n) + 1);
    if (n <= kBitMatrixMaxOrder) {
        row_words_ = (static_cast<size_t>(n) + 64) / 64;
        bits_.assign((static_cast<size_t>(n) + 1) * row_words_, 0);
    }
    for (const Edge& e : edges) {
        if (e.u < 1 || e.v > n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
        if (has_edge(e.u, e.v)) throw std::invalid_argument("parallel edge rejected");
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
        if (!bits_.empty()) {
            bits_[static_cast<size_t>(e.u) * row_words_ + static_cast<size_t>(e.v) / 64] |= 1ull << (e.v % 64);
            bits_[static_cast<size_t>(e.v) * row_words_ + static_cast<size_t>(e.u) / 64] |= 1ull << (e.u % 64);
        } else {
            edge_keys_.insert(edge_key(n_, e.u, e.v));
        }
        ++m_;
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    if (!bits_.empty())
        return (bits_[static_cast<size_t>(u) * row_words_ + static_cast<size_t>(v) / 64] >> (v % 64)) & 1u;
    return edge_keys_.count(edge_key(n_, u, v)) > 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    auto dist = bfs_distances(*this, 1);
    return std::count(dist.begin() + 1, dist.end(), -1) == 0;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (Vertex u = 1; u <= n_; ++u) {
        auto nb = neighbors(u);
        size_t idx = 0;
        for (Vertex v = u + 1; v <= n_; ++v) {
            while (idx < nb.size() && nb[idx] < v) ++idx;
            if (idx < nb.size() && nb[idx] == v) continue;
            comp.emplace_back(u, v);
        }
    }
    return Graph(n_, comp);
}

Graph Graph::induced(std::span<const Vertex> s) const {
    if (s.empty()) throw std::invalid_argument("induced subgraph needs a non-empty vertex set");
    std::vector<int> new_id(static_cast<size_t>(n_) + 1, 0);
    for (size_t i = 0; i < s.size(); ++i) {
        check_vertex(s[i]);
        if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("vertex set must be strictly increasing");
        new_id[static_cast<size_t>(s[i])] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> sub;
    for (Vertex u : s)
        for (Vertex v : neighbors(u))
            if (u < v && new_id[static_cast<size_t>(v)] != 0)
                sub.emplace_back(new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]);
    return Graph(static_cast<int>(s.size()), sub);
}

std::vector<int> bfs_distances(const Graph& g, Vertex r) {
    if (!g.has_vertex(r)) throw std::invalid_argument("bfs root out of range");
    std::vector<int> dist(static_cast<size_t>(g.order()) + 1, -1);
    dist[static_cast<size_t>(r)] = 0;
    std::queue<Vertex> q;
    q.push(r);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbors(u)) {
            if (dist[static_cast<size_t>(v)] == -1) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

bool SpanningTree::tree_shape(int n, std::span<const Edge> edges,
                              std::vector<std::vector<Vertex>>* adj_out) {
    if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n) + 1);
    // union-find catches cycles and duplicate edges together
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : edges) {
        if (e.u < 1 || e.v > n || e.u == e.v) return false;
        int a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    if (adj_out) *adj_out = std::move(adj);
    return true;  // n-1 edges and acyclic imply connected
}

SpanningTree::SpanningTree(int n, std::span<const Edge> edges) {
    auto t = try_build(n, edges);
    if (!t) throw std::invalid_argument("edge set is not a spanning tree");
    *this = std::move(*t);
}

std::optional<SpanningTree> SpanningTree::try_build(int n, std::span<const Edge> edges) {
    SpanningTree t;
    if (!tree_shape(n, edges, &t.adj_)) return std::nullopt;
    t.n_ = n;
    t.edges_.assign(edges.begin(), edges.end());
    std::sort(t.edges_.begin(), t.edges_.end());
    for (auto& list : t.adj_) std::sort(list.begin(), list.end());
    return t;
}

bool SpanningTree::has_edge(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool validate_spanning_tree(const Graph& g, std::span<const Edge> edges) {
    if (!SpanningTree::tree_shape(g.order(), edges, nullptr)) return false;
    for (const Edge& e : edges)
        if (!g.has_edge(e.u, e.v)) return false;
    return true;
}

bool validate_spanning_tree(const Graph& g, const SpanningTree& t) {
    if (t.order() != g.order()) return false;
    for (const Edge& e : t.edges())
        if (!g.has_edge(e.u, e.v)) return false;
    return true;
}

RootedTree::RootedTree(const SpanningTree& t, Vertex root) : root_(root) {
    int n = t.order();
    if (root < 1 || root > n) throw std::invalid_argument("root out of range");
    parent_.assign(static_cast<size_t>(n) + 1, 0);
    children_.resize(static_cast<size_t>(n) + 1);
    depth_.assign(static_cast<size_t>(n) + 1, 0);
    euler_in_.assign(static_cast<size_t>(n) + 1, 0);
    euler_out_.assign(static_cast<size_t>(n) + 1, 0);

    // single iterative traversal computes parents, depths and Euler intervals
    int clock = 0;
    std::vector<std::pair<Vertex, size_t>> stack;
    stack.emplace_back(root, 0);
    euler_in_[static_cast<size_t>(root)] = ++clock;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        auto nb = t.neighbors(v);
        if (idx < nb.size()) {
            Vertex w = nb[idx++];
            if (w == parent_[static_cast<size_t>(v)] || w == root) continue;
            parent_[static_cast<size_t>(w)] = v;
            children_[static_cast<size_t>(v)].push_back(w);
            depth_[static_cast<size_t>(w)] = depth_[static_cast<size_t>(v)] + 1;
            euler_in_[static_cast<size_t>(w)] = ++clock;
            stack.emplace_back(w, 0);
        } else {
            euler_out_[static_cast<size_t>(v)] = ++clock;
            stack.pop_back();
        }
    }
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order) {
    auto o = try_from(std::move(order));
    if (!o) throw std::invalid_argument("not a permutation of 1..n");
    *this = std::move(*o);
}

std::optional<VertexOrdering> VertexOrdering::try_from(std::vector<Vertex> order) {
    int n = static_cast<int>(order.size());
    std::vector<int> position(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        Vertex v = order[static_cast<size_t>(i)];
        if (v < 1 || v > n || position[static_cast<size_t>(v)] != 0) return std::nullopt;
        position[static_cast<size_t>(v)] = i + 1;
    }
    VertexOrdering out;
    out.order_ = std::move(order);
    out.position_ = std::move(position);
    return out;
}

}  // namespace gst
