#include "gst/split.hpp"

#include <algorithm>
#include <numeric>

#include "gst/trees.hpp"

namespace gst {

std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.order();
    std::vector<Vertex> by_degree(static_cast<size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 1);
    std::sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_degree[static_cast<size_t>(i) - 1]) >= i - 1) h = i;

    SplitPartition p;
    p.in_clique.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < h; ++i) p.in_clique[static_cast<size_t>(by_degree[static_cast<size_t>(i)])] = 1;
    for (Vertex v = 1; v <= n; ++v)
        (p.in_clique[static_cast<size_t>(v)] ? p.clique : p.independent).push_back(v);

    for (Vertex c : p.clique) {
        int inside = 0;
        for (Vertex w : g.neighbors(c)) inside += p.in_clique[static_cast<size_t>(w)];
        if (inside != h - 1) return std::nullopt;
    }
    for (Vertex v : p.independent)
        for (Vertex w : g.neighbors(v))
            if (!p.in_clique[static_cast<size_t>(w)]) return std::nullopt;
    return p;
}

namespace {

// Orders `rest` (whose neighbors are all already placed, positions in `pos`)
// so that picking them in sequence keeps the labels of the requested search
// kind maximal: each comparator sorts by descending final label.
void order_tail_by_kind(const Graph& g, SearchKind kind, const std::vector<int>& pos,
                        std::vector<Vertex>& rest) {
    if (kind == SearchKind::Mcs) {
        std::sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        return;
    }
    bool ldfs = kind == SearchKind::Ldfs;
    std::vector<std::vector<int>> key(static_cast<size_t>(g.order()) + 1);
    for (Vertex v : rest) {
        auto& k = key[static_cast<size_t>(v)];
        for (Vertex w : g.neighbors(v)) k.push_back(pos[static_cast<size_t>(w)]);
        std::sort(k.begin(), k.end());
        if (ldfs) std::reverse(k.begin(), k.end());
    }
    std::sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
        const auto& ka = key[static_cast<size_t>(a)];
        const auto& kb = key[static_cast<size_t>(b)];
        size_t m = std::min(ka.size(), kb.size());
        for (size_t i = 0; i < m; ++i)
            if (ka[i] != kb[i])
                // LBFS label components are n-position: earlier neighbor wins.
                // LDFS keys are descending positions: later neighbor wins.
                return ldfs ? ka[i] > kb[i] : ka[i] < kb[i];
        if (ka.size() != kb.size()) return ka.size() > kb.size();
        return a < b;
    });
}

// The vertex kinds served by the split recognizers verify their witness with
// the requested discipline; an MNS witness is built as an LBFS order, which
// is one of the MNS orders, so the cheaper LBFS check applies at scale.
void verify_witness(const Graph& g, const SpanningTree& t, SearchKind kind, char side,
                    const VertexOrdering& sigma) {
    if (!(build_search_tree(g, sigma, side) == t))
        throw std::logic_error("split recognizer produced a witness with the wrong tree");
    SearchKind check = kind == SearchKind::Mns ? SearchKind::Lbfs : kind;
    if (!validate_order(g, check, sigma))
        throw std::logic_error("split recognizer produced an invalid witness order");
    if (kind == SearchKind::Mns && g.order() <= 64 && !validate_order(g, kind, sigma))
        throw std::logic_error("split recognizer produced an invalid MNS witness");
}

bool split_l_kind(SearchKind kind) {
    return kind == SearchKind::Lbfs || kind == SearchKind::Ldfs || kind == SearchKind::Mcs ||
           kind == SearchKind::Mns;
}

// Checks the three last-in-tree conditions for one candidate spine and, on
// success, emits the witness ordering (spine first, then the leaves in
// label-descending order for the requested kind).
std::optional<VertexOrdering> check_spine(const Graph& g, const SpanningTree& t,
                                          const SplitPartition& p, SearchKind kind,
                                          const std::vector<Vertex>& spine) {
    int n = g.order();
    int k = static_cast<int>(spine.size());
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(spine[static_cast<size_t>(i)])] = i + 1;

    // condition 1: the spine is a path in t containing every clique vertex
    for (int i = 1; i < k; ++i)
        if (!t.has_edge(spine[static_cast<size_t>(i) - 1], spine[static_cast<size_t>(i)]))
            return std::nullopt;
    for (Vertex c : p.clique)
        if (pos[static_cast<size_t>(c)] == 0) return std::nullopt;

    // condition 2: a leaf never has a graph edge past its attachment point
    std::vector<Vertex> leaves;
    for (Vertex w = 1; w <= n; ++w) {
        if (pos[static_cast<size_t>(w)] != 0) continue;
        if (t.degree(w) != 1) return std::nullopt;  // not dominated by the spine
        Vertex attach = t.neighbors(w)[0];
        if (pos[static_cast<size_t>(attach)] == 0) return std::nullopt;
        for (Vertex x : g.neighbors(w))
            if (pos[static_cast<size_t>(x)] > pos[static_cast<size_t>(attach)]) return std::nullopt;
        leaves.push_back(w);
    }

    // condition 3: an independent spine vertex is adjacent to every clique
    // vertex before it, and its remaining neighbors follow it immediately
    std::vector<int> clique_prefix(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i)
        clique_prefix[static_cast<size_t>(i)] =
            clique_prefix[static_cast<size_t>(i) - 1] +
            (p.in_clique[static_cast<size_t>(spine[static_cast<size_t>(i) - 1])] ? 1 : 0);
    for (int i = 1; i <= k; ++i) {
        Vertex v = spine[static_cast<size_t>(i) - 1];
        if (p.in_clique[static_cast<size_t>(v)]) continue;
        int before = 0, max_pos = 0;
        for (Vertex w : g.neighbors(v)) {
            int pw = pos[static_cast<size_t>(w)];
            if (pw == 0) return std::nullopt;  // neighbor off the spine
            if (pw < i) ++before;
            max_pos = std::max(max_pos, pw);
        }
        if (before != clique_prefix[static_cast<size_t>(i) - 1]) return std::nullopt;
        if (max_pos > i + g.degree(v) - before) return std::nullopt;
    }

    std::vector<int> full_pos = pos;
    order_tail_by_kind(g, kind, full_pos, leaves);
    std::vector<Vertex> order = spine;
    order.insert(order.end(), leaves.begin(), leaves.end());
    return VertexOrdering(order);
}

std::vector<Vertex> internal_path(const SpanningTree& t) {
    int n = t.order();
    std::vector<Vertex> internal;
    for (Vertex v = 1; v <= n; ++v)
        if (t.degree(v) >= 2) internal.push_back(v);
    if (internal.empty()) return {};
    auto internal_degree = [&](Vertex v) {
        int d = 0;
        for (Vertex w : t.neighbors(v)) d += t.degree(w) >= 2;
        return d;
    };
    Vertex head = 0;
    for (Vertex v : internal) {
        if (internal_degree(v) > 2) return {};  // not a caterpillar
        if (internal_degree(v) <= 1 && (head == 0 || v < head)) head = v;
    }
    std::vector<Vertex> path{head};
    Vertex prev = 0, cur = head;
    while (true) {
        Vertex next = 0;
        for (Vertex w : t.neighbors(cur))
            if (w != prev && t.degree(w) >= 2) next = w;
        if (next == 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    if (path.size() != internal.size()) return {};  // internal vertices not a single path
    return path;
}

}  // namespace

RecognitionResult recognize_split_l_tree(const Graph& g, const SpanningTree& t, SearchKind kind) {
    auto p = split_partition(g);
    if (!p) throw std::domain_error("graph is not a split graph");
    return recognize_split_l_tree(g, t, kind, *p);
}

RecognitionResult recognize_split_l_tree(const Graph& g, const SpanningTree& t, SearchKind kind,
                                         const SplitPartition& p) {
    if (!split_l_kind(kind)) throw std::invalid_argument("split last-in recognition covers lbfs, ldfs, mcs, mns");
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    int n = g.order();
    RecognitionResult result;

    auto accept = [&](const std::vector<Vertex>& spine) -> bool {
        ++result.roots_tried;
        auto witness = check_spine(g, t, p, kind, spine);
        if (!witness) return false;
        verify_witness(g, t, kind, 'l', *witness);
        result.outcome = Outcome::Yes;
        result.root = witness->at(1);
        result.witness = std::move(*witness);
        return true;
    };

    if (n == 1) {
        accept({1});
        return result;
    }
    if (n == 2) {
        if (!accept({1, 2})) accept({2, 1});
        return result;
    }

    std::vector<Vertex> core = internal_path(t);
    if (core.empty()) {
        result.outcome = Outcome::No;  // not a caterpillar
        return result;
    }

    // Clique vertices that are leaves of t can only sit at a spine end.
    std::vector<char> on_core(static_cast<size_t>(n) + 1, 0);
    for (Vertex v : core) on_core[static_cast<size_t>(v)] = 1;
    std::vector<Vertex> clique_leaves;
    for (Vertex c : p.clique)
        if (!on_core[static_cast<size_t>(c)]) clique_leaves.push_back(c);
    if (clique_leaves.size() > 2) {
        result.outcome = Outcome::No;
        return result;
    }

    for (int rev = 0; rev <= 1; ++rev) {
        std::vector<Vertex> base = core;
        if (rev) std::reverse(base.begin(), base.end());
        Vertex front = base.front(), back = base.back();

        auto attached_at = [&](Vertex leaf, Vertex end) { return t.neighbors(leaf)[0] == end; };

        // head options: bare, a clique leaf, or one independent leaf with
        // degree >= 2 (several such leaves at one end can never work there)
        std::vector<Vertex> head_opts{0};
        for (Vertex c : clique_leaves)
            if (attached_at(c, front)) head_opts.push_back(c);
        std::vector<Vertex> deg2;
        for (Vertex w : t.neighbors(front))
            if (t.degree(w) == 1 && !p.in_clique[static_cast<size_t>(w)] && g.degree(w) >= 2)
                deg2.push_back(w);
        if (deg2.size() == 1) head_opts.push_back(deg2.front());

        std::vector<Vertex> tail_opts{0};
        for (Vertex c : clique_leaves)
            if (attached_at(c, back)) tail_opts.push_back(c);

        for (Vertex head : head_opts) {
            for (Vertex tail : tail_opts) {
                if (head != 0 && head == tail) continue;
                std::vector<Vertex> spine;
                if (head != 0) spine.push_back(head);
                spine.insert(spine.end(), base.begin(), base.end());
                if (tail != 0) spine.push_back(tail);
                if (accept(spine)) return result;
            }
        }
    }
    result.outcome = Outcome::No;
    return result;
}

RecognitionResult recognize_split_f_tree(const Graph& g, const SpanningTree& t, SearchKind kind) {
    auto p = split_partition(g);
    if (!p) throw std::domain_error("graph is not a split graph");
    return recognize_split_f_tree(g, t, kind, *p);
}

RecognitionResult recognize_split_f_tree(const Graph& g, const SpanningTree& t, SearchKind kind,
                                         const SplitPartition& p) {
    if (kind != SearchKind::Bfs && !split_l_kind(kind))
        throw std::invalid_argument("split first-in recognition covers bfs, lbfs, ldfs, mcs, mns");
    RecognitionResult base = recognize_bfs_f_tree(g, t);
    if (!base.recognized() || kind == SearchKind::Bfs) return base;

    // same tree, same root: clique in discovery order, then the independent
    // vertices in label-descending order for the requested kind
    Vertex root = *base.root;
    const VertexOrdering& tau = *base.witness;
    std::vector<Vertex> order{root};
    std::vector<Vertex> clique_rest;
    for (Vertex c : p.clique)
        if (c != root) clique_rest.push_back(c);
    std::sort(clique_rest.begin(), clique_rest.end(),
              [&](Vertex a, Vertex b) { return tau.position_of(a) < tau.position_of(b); });
    order.insert(order.end(), clique_rest.begin(), clique_rest.end());

    std::vector<int> pos(static_cast<size_t>(g.order()) + 1, 0);
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i) + 1;
    std::vector<Vertex> rest;
    for (Vertex v : p.independent)
        if (v != root) rest.push_back(v);
    order_tail_by_kind(g, kind, pos, rest);
    order.insert(order.end(), rest.begin(), rest.end());

    VertexOrdering sigma(order);
    verify_witness(g, t, kind, 'f', sigma);
    base.witness = std::move(sigma);
    return base;
}

}  // namespace gst
