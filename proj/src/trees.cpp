#include "gst/trees.hpp"

#include <algorithm>
#include <set>

namespace gst {

namespace {

SpanningTree build_tree(const Graph& g, const VertexOrdering& sigma, bool first_in) {
    int n = g.order();
    if (sigma.size() != n) throw std::invalid_argument("ordering size does not match graph order");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) - 1);
    for (int pos = 2; pos <= n; ++pos) {
        Vertex v = sigma.at(pos);
        Vertex parent = 0;
        int parent_pos = first_in ? n + 1 : 0;
        for (Vertex w : g.neighbors(v)) {
            int p = sigma.position_of(w);
            if (p >= pos) continue;
            if (first_in ? p < parent_pos : p > parent_pos) {
                parent = w;
                parent_pos = p;
            }
        }
        if (parent == 0)
            throw InvalidOrderError("vertex " + std::to_string(v) +
                                    " has no earlier neighbor; not a connected-search order");
        edges.emplace_back(v, parent);
    }
    return SpanningTree(n, edges);
}

}  // namespace

SpanningTree build_f_tree(const Graph& g, const VertexOrdering& sigma) {
    return build_tree(g, sigma, true);
}

SpanningTree build_l_tree(const Graph& g, const VertexOrdering& sigma) {
    return build_tree(g, sigma, false);
}

SpanningTree build_search_tree(const Graph& g, const VertexOrdering& sigma, char side) {
    if (side == 'f' || side == 'F') return build_f_tree(g, sigma);
    if (side == 'l' || side == 'L') return build_l_tree(g, sigma);
    throw std::invalid_argument("side must be 'f' or 'l'");
}

CaterpillarDecomposition decomposition_from_spine(const SpanningTree& t, std::vector<Vertex> spine) {
    int n = t.order();
    std::vector<char> on_spine(static_cast<size_t>(n) + 1, 0);
    for (Vertex v : spine) on_spine[static_cast<size_t>(v)] = 1;
    CaterpillarDecomposition d;
    d.spine = std::move(spine);
    for (Vertex v = 1; v <= n; ++v) {
        if (on_spine[static_cast<size_t>(v)]) continue;
        Vertex attach = 0;
        for (Vertex w : t.neighbors(v))
            if (on_spine[static_cast<size_t>(w)]) attach = w;
        if (attach == 0) throw std::invalid_argument("path does not dominate the tree");
        d.leaves.emplace_back(v, attach);
    }
    std::sort(d.leaves.begin(), d.leaves.end());
    return d;
}

namespace {

// farthest vertex from r in the tree, ties broken by smallest id
std::pair<Vertex, std::vector<Vertex>> farthest_with_parents(const SpanningTree& t, Vertex r) {
    int n = t.order();
    std::vector<int> dist(static_cast<size_t>(n) + 1, -1);
    std::vector<Vertex> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<Vertex> queue{r};
    dist[static_cast<size_t>(r)] = 0;
    size_t head = 0;
    Vertex best = r;
    while (head < queue.size()) {
        Vertex u = queue[head++];
        if (dist[static_cast<size_t>(u)] > dist[static_cast<size_t>(best)] ||
            (dist[static_cast<size_t>(u)] == dist[static_cast<size_t>(best)] && u < best))
            best = u;
        for (Vertex w : t.neighbors(u))
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                parent[static_cast<size_t>(w)] = u;
                queue.push_back(w);
            }
    }
    return {best, parent};
}

bool is_caterpillar(const SpanningTree& t) {
    // removing all leaves must yield a path (or nothing)
    int n = t.order();
    for (Vertex v = 1; v <= n; ++v) {
        int internal_degree = 0;
        for (Vertex w : t.neighbors(v))
            if (t.degree(w) >= 2) ++internal_degree;
        if (t.degree(v) >= 2 && internal_degree > 2) return false;
    }
    return true;
}

}  // namespace

std::vector<CaterpillarDecomposition> caterpillar_decompositions(const SpanningTree& t) {
    std::vector<CaterpillarDecomposition> out;
    if (!is_caterpillar(t)) return out;

    int n = t.order();
    if (n == 1) {
        out.push_back(CaterpillarDecomposition{{1}, {}});
        return out;
    }

    // diameter path by double sweep
    auto [a, ignore] = farthest_with_parents(t, 1);
    auto [b, parent] = farthest_with_parents(t, a);
    std::vector<Vertex> diameter;
    for (Vertex v = b; v != 0; v = parent[static_cast<size_t>(v)]) diameter.push_back(v);
    std::reverse(diameter.begin(), diameter.end());  // runs a .. b

    std::set<std::vector<Vertex>> seen;
    size_t len = diameter.size();
    for (int trim_front = 0; trim_front <= 1; ++trim_front) {
        if (trim_front && (len < 2 || t.degree(diameter.front()) != 1)) continue;
        for (int trim_back = 0; trim_back <= 1; ++trim_back) {
            if (trim_back && (len < 2 || t.degree(diameter.back()) != 1)) continue;
            size_t lo = static_cast<size_t>(trim_front);
            size_t hi = len - static_cast<size_t>(trim_back);
            if (lo >= hi) continue;
            std::vector<Vertex> spine(diameter.begin() + static_cast<long>(lo),
                                      diameter.begin() + static_cast<long>(hi));
            for (int rev = 0; rev <= 1; ++rev) {
                if (rev) std::reverse(spine.begin(), spine.end());
                if (seen.insert(spine).second)
                    out.push_back(decomposition_from_spine(t, spine));
            }
        }
    }
    return out;
}

}  // namespace gst
