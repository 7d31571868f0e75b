#include "gst/oracle.hpp"

#include <algorithm>

#include "gst/trees.hpp"

namespace gst {

namespace {

bool enumerate_rec(LabelState& state, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    if (state.step() == state.graph().order()) return visit(state.visited());
    for (Vertex v : state.candidates()) {
        state.advance(v);
        bool keep_going = enumerate_rec(state, visit);
        state.retract();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

bool for_each_search_order(const Graph& g, SearchKind kind, std::optional<Vertex> start,
                           const std::function<bool(const std::vector<Vertex>&)>& visit) {
    LabelState state(g, kind);
    if (start) {
        if (!g.has_vertex(*start)) throw std::invalid_argument("start vertex out of range");
        state.advance(*start);
        bool keep_going = enumerate_rec(state, visit);
        state.retract();
        return keep_going;
    }
    return enumerate_rec(state, visit);
}

std::vector<VertexOrdering> enumerate_search_orders(const Graph& g, SearchKind kind,
                                                    std::optional<Vertex> start) {
    std::vector<VertexOrdering> out;
    for_each_search_order(g, kind, start, [&](const std::vector<Vertex>& order) {
        out.emplace_back(order);
        return true;
    });
    return out;
}

namespace {

struct OracleRecognizer {
    const Graph& g;
    SearchKind kind;
    bool first_in;
    LabelState state;
    std::vector<Vertex> parent;  // of t under the current root
    std::vector<Vertex> found;

    OracleRecognizer(const Graph& g_, SearchKind kind_, bool first_in_)
        : g(g_), kind(kind_), first_in(first_in_), state(g_, kind_) {}

    // a visited vertex's search-tree parent is fixed the moment it is pinned
    // (discovery for first-in, visit for last-in), so mismatching branches
    // are cut immediately and nothing is lost
    bool discovery_consistent() const {
        for (Vertex w : state.last_discovered())
            if (parent[static_cast<size_t>(w)] != state.first_neighbor(w)) return false;
        return true;
    }

    bool search() {
        if (state.step() == g.order()) {
            found = state.visited();
            return true;
        }
        for (Vertex v : state.candidates()) {
            if (!first_in && state.last_neighbor(v) != parent[static_cast<size_t>(v)]) continue;
            state.advance(v);
            bool ok = !first_in || discovery_consistent();
            if (ok && search()) return true;
            state.retract();
        }
        return false;
    }
};

}  // namespace

std::optional<VertexOrdering> oracle_recognize(const Graph& g, const SpanningTree& t,
                                               SearchKind kind, char side) {
    bool first_in = side == 'f' || side == 'F';
    if (!first_in && side != 'l' && side != 'L') throw std::invalid_argument("side must be 'f' or 'l'");
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");

    OracleRecognizer rec(g, kind, first_in);
    for (Vertex root = 1; root <= g.order(); ++root) {
        RootedTree rooted(t, root);
        rec.parent.assign(static_cast<size_t>(g.order()) + 1, 0);
        for (Vertex v = 1; v <= g.order(); ++v) rec.parent[static_cast<size_t>(v)] = rooted.parent(v);
        rec.state.advance(root);
        bool ok = !first_in || rec.discovery_consistent();
        if (ok && rec.search()) return VertexOrdering(rec.found);
        rec.state.retract();
    }
    return std::nullopt;
}

bool for_each_spanning_tree(const Graph& g, const std::function<bool(const SpanningTree&)>& visit) {
    int n = g.order();
    std::vector<Edge> all = g.edges();
    std::vector<Edge> chosen;
    // classic combination recursion over edges with a union-find cycle filter
    std::vector<int> uf(static_cast<size_t>(n) + 1);
    std::function<int(int)> find = [&](int x) { return uf[static_cast<size_t>(x)] == x ? x : uf[static_cast<size_t>(x)] = find(uf[static_cast<size_t>(x)]); };

    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (static_cast<int>(chosen.size()) == n - 1)
            return visit(SpanningTree(n, chosen));
        if (all.size() - idx < static_cast<size_t>(n - 1) - chosen.size()) return true;
        for (size_t i = idx; i < all.size(); ++i) {
            int a = find(all[i].u), b = find(all[i].v);
            if (a == b) continue;
            std::vector<int> saved = uf;
            uf[static_cast<size_t>(a)] = b;
            chosen.push_back(all[i]);
            bool keep_going = rec(i + 1);
            chosen.pop_back();
            uf = std::move(saved);
            if (!keep_going) return false;
        }
        return true;
    };
    for (int v = 0; v <= n; ++v) uf[static_cast<size_t>(v)] = v;
    if (n == 1) return visit(SpanningTree(1, std::vector<Edge>{}));
    return rec(0);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&](const SpanningTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool is_chordal(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("chordality check expects a connected graph");
    int n = g.order();
    VertexOrdering lbfs = run_search(g, SearchKind::Lbfs, 1);
    // reversed LBFS order; perfect elimination iff each vertex's later
    // neighbors form a clique, which reduces to checking against the
    // earliest of them
    std::vector<int> peo_pos(static_cast<size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) peo_pos[static_cast<size_t>(v)] = n + 1 - lbfs.position_of(v);
    for (Vertex v = 1; v <= n; ++v) {
        Vertex pivot = 0;
        for (Vertex w : g.neighbors(v))
            if (peo_pos[static_cast<size_t>(w)] > peo_pos[static_cast<size_t>(v)] &&
                (pivot == 0 || peo_pos[static_cast<size_t>(w)] < peo_pos[static_cast<size_t>(pivot)]))
                pivot = w;
        if (pivot == 0) continue;
        for (Vertex w : g.neighbors(v))
            if (w != pivot && peo_pos[static_cast<size_t>(w)] > peo_pos[static_cast<size_t>(v)] &&
                !g.has_edge(pivot, w))
                return false;
    }
    return true;
}

namespace {

// Looks for an induced cycle of length >= 5. Paths grow from their minimum
// vertex a; the second path vertex stays smaller than the closing vertex so
// every cycle is produced exactly once.
bool has_long_induced_cycle(const Graph& g) {
    int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> on_path(static_cast<size_t>(n) + 1, 0);

    std::function<bool(Vertex)> extend = [&](Vertex a) -> bool {
        Vertex tail = path.back();
        for (Vertex w : g.neighbors(tail)) {
            if (w <= a || on_path[static_cast<size_t>(w)]) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (g.has_edge(w, a)) {
                if (path.size() + 1 >= 5 && path[1] < w) return true;
                continue;  // closing early would leave a chord in any longer cycle
            }
            path.push_back(w);
            on_path[static_cast<size_t>(w)] = 1;
            bool hit = extend(a);
            on_path[static_cast<size_t>(w)] = 0;
            path.pop_back();
            if (hit) return true;
        }
        return false;
    };

    for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            path = {a, b};
            on_path.assign(static_cast<size_t>(n) + 1, 0);
            on_path[static_cast<size_t>(a)] = on_path[static_cast<size_t>(b)] = 1;
            if (extend(a)) return true;
        }
    }
    return false;
}

}  // namespace

bool is_weakly_chordal_bruteforce(const Graph& g) {
    return !has_long_induced_cycle(g) && !has_long_induced_cycle(g.complement());
}

}  // namespace gst
