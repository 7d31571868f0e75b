#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace gst {

/// Vertices are dense 1-based integer ids.
using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph with sorted adjacency lists and
/// O(1) expected edge membership.
class Graph {
public:
    Graph() = default;

    /// Rejects self-loops, parallel edges and out-of-range endpoints.
    /// Connectivity is not enforced here; recognition entry points check it.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.end())) {}

    int order() const { return n_; }
    int size() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    bool connected() const;

    /// Complement on the same vertex set; may be disconnected.
    Graph complement() const;

    /// Induced subgraph on a non-empty, strictly increasing vertex set.
    /// Vertex s[i] becomes vertex i+1 of the result.
    Graph induced(std::span<const Vertex> s) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(Vertex v) const {
        if (!has_vertex(v)) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;  // index 0 unused
    // membership structure: dense bit matrix for small n, hash set of packed pairs otherwise
    std::vector<uint64_t> bits_;
    size_t row_words_ = 0;
    std::unordered_set<uint64_t> edge_keys_;
};

/// Exact shortest-path edge counts from r; unreachable vertices get -1.
/// Result is indexed by vertex id (slot 0 unused).
std::vector<int> bfs_distances(const Graph& g, Vertex r);

/// Edge-set view of a spanning tree over vertices 1..n.
class SpanningTree {
public:
    /// Requires exactly n-1 edges forming a connected acyclic subgraph.
    SpanningTree(int n, std::span<const Edge> edges);
    SpanningTree(int n, std::initializer_list<Edge> edges)
        : SpanningTree(n, std::span<const Edge>(edges.begin(), edges.end())) {}

    /// Checks tree shape without throwing.
    static std::optional<SpanningTree> try_build(int n, std::span<const Edge> edges);

    /// True iff the edges form a spanning tree of n vertices (no graph check).
    static bool tree_shape(int n, std::span<const Edge> edges,
                           std::vector<std::vector<Vertex>>* adj_out = nullptr);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    SpanningTree() = default;

    int n_ = 0;
    std::vector<Edge> edges_;  // sorted
    std::vector<std::vector<Vertex>> adj_;
};

/// True iff the edge set has n-1 edges, all in E(g), and forms a spanning tree.
bool validate_spanning_tree(const Graph& g, std::span<const Edge> edges);
bool validate_spanning_tree(const Graph& g, const SpanningTree& t);

/// Rooted view of a spanning tree: parent map plus Euler intervals so that
/// ancestor queries are two integer comparisons.
class RootedTree {
public:
    RootedTree(const SpanningTree& t, Vertex root);

    Vertex root() const { return root_; }
    int order() const { return static_cast<int>(parent_.size()) - 1; }
    /// 0 for the root.
    Vertex parent(Vertex v) const { return parent_[static_cast<size_t>(v)]; }
    std::span<const Vertex> children(Vertex v) const { return children_[static_cast<size_t>(v)]; }
    int depth(Vertex v) const { return depth_[static_cast<size_t>(v)]; }
    int euler_in(Vertex v) const { return euler_in_[static_cast<size_t>(v)]; }
    int euler_out(Vertex v) const { return euler_out_[static_cast<size_t>(v)]; }

    /// True iff u lies on the path from v to the root (u == v counts).
    bool is_ancestor(Vertex u, Vertex v) const {
        return euler_in_[static_cast<size_t>(u)] <= euler_in_[static_cast<size_t>(v)] &&
               euler_out_[static_cast<size_t>(v)] <= euler_out_[static_cast<size_t>(u)];
    }

private:
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<int> depth_;
    std::vector<int> euler_in_;
    std::vector<int> euler_out_;
};

/// A permutation of 1..n together with its inverse (1-based positions).
class VertexOrdering {
public:
    explicit VertexOrdering(std::vector<Vertex> order);

    /// Permutation check instead of throwing.
    static std::optional<VertexOrdering> try_from(std::vector<Vertex> order);

    int size() const { return static_cast<int>(order_.size()); }
    /// Vertex at 1-based position pos.
    Vertex at(int pos) const { return order_[static_cast<size_t>(pos) - 1]; }
    /// 1-based position of v.
    int position_of(Vertex v) const { return position_[static_cast<size_t>(v)]; }
    const std::vector<Vertex>& order() const { return order_; }

    friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
        return a.order_ == b.order_;
    }

private:
    VertexOrdering() = default;
    std::vector<Vertex> order_;
    std::vector<int> position_;  // indexed by vertex id
};

}  // namespace gst
