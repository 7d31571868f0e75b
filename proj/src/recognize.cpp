#include "gst/recognize.hpp"

#include <algorithm>
#include <limits>

#include "gst/split.hpp"
#include "gst/trees.hpp"

namespace gst {

namespace {

bool is_first_in(char side) {
    if (side == 'f' || side == 'F') return true;
    if (side == 'l' || side == 'L') return false;
    throw std::invalid_argument("side must be 'f' or 'l'");
}

struct Engine {
    const Graph& g;
    bool first_in;
    SimulationMode mode;
    LabelState state;
    std::vector<Vertex> parent;
    long long allowance;  // remaining node allowance
    long long nodes = 0;
    bool budget_hit = false;
    std::vector<Vertex> found;

    Engine(const Graph& g_, SearchKind kind, bool first_in_, SimulationMode mode_, long long allowance_)
        : g(g_), first_in(first_in_), mode(mode_), state(g_, kind), allowance(allowance_) {}

    bool admissible(Vertex v) const {
        Vertex pinned = first_in ? state.first_neighbor(v) : state.last_neighbor(v);
        return pinned == parent[static_cast<size_t>(v)];
    }

    // after an advance on the first-in side: a vertex discovered by anything
    // but its tree parent can never be visited admissibly, so the branch is dead
    bool discovery_consistent() const {
        for (Vertex w : state.last_discovered())
            if (parent[static_cast<size_t>(w)] != state.first_neighbor(w)) return false;
        return true;
    }

    bool step_into(Vertex v) {
        ++nodes;
        state.advance(v);
        return !first_in || discovery_consistent();
    }

    bool search() {
        if (state.step() == g.order()) {
            found = state.visited();
            return true;
        }
        for (Vertex v : state.candidates()) {
            if (!admissible(v)) continue;
            if (nodes >= allowance) {
                budget_hit = true;
                return false;
            }
            bool ok = step_into(v);
            if (ok && search()) return true;
            state.retract();
            if (mode == SimulationMode::Greedy || budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

ConstrainedSearchResult constrained_search(const Graph& g, const SpanningTree& t, SearchKind kind,
                                           char side, Vertex root, SimulationMode mode, Budget budget) {
    bool first_in = is_first_in(side);
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    if (!g.has_vertex(root)) throw std::invalid_argument("root out of range");

    RootedTree rooted(t, root);
    Engine engine(g, kind, first_in, mode,
                  budget.unlimited() ? std::numeric_limits<long long>::max() : budget.max_nodes);
    engine.parent.assign(static_cast<size_t>(g.order()) + 1, 0);
    for (Vertex v = 1; v <= g.order(); ++v) engine.parent[static_cast<size_t>(v)] = rooted.parent(v);

    ConstrainedSearchResult result;
    bool ok = engine.step_into(root);
    if (ok && engine.search()) {
        result.status = ConstrainedSearchResult::Status::Found;
        result.ordering = VertexOrdering(engine.found);
    } else {
        result.status = engine.budget_hit ? ConstrainedSearchResult::Status::BudgetExceeded
                                          : ConstrainedSearchResult::Status::Exhausted;
    }
    result.nodes_expanded = engine.nodes;
    return result;
}

namespace {

RecognitionResult per_root_simulation(const Graph& g, const SpanningTree& t, SearchKind kind,
                                      char side, SimulationMode mode, Budget budget) {
    RecognitionResult result;
    long long remaining = budget.unlimited() ? std::numeric_limits<long long>::max() : budget.max_nodes;
    for (Vertex root = 1; root <= g.order(); ++root) {
        ++result.roots_tried;
        auto attempt = constrained_search(g, t, kind, side, root, mode, Budget::nodes(remaining));
        result.nodes_expanded += attempt.nodes_expanded;
        remaining -= attempt.nodes_expanded;
        if (attempt.status == ConstrainedSearchResult::Status::Found) {
            result.outcome = Outcome::Yes;
            result.root = root;
            result.witness = std::move(attempt.ordering);
            return result;
        }
        if (attempt.status == ConstrainedSearchResult::Status::BudgetExceeded) {
            result.outcome = Outcome::Inconclusive;
            return result;
        }
    }
    result.outcome = Outcome::No;
    return result;
}

}  // namespace

RecognitionResult recognize_ldfs_l_tree(const Graph& g, const SpanningTree& t) {
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    return per_root_simulation(g, t, SearchKind::Ldfs, 'l', SimulationMode::Greedy,
                               Budget::unlimited_budget());
}

RecognitionResult recognize_dfs_l_tree(const Graph& g, const SpanningTree& t) {
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    RecognitionResult result;
    std::vector<Edge> non_tree;
    for (const Edge& e : g.edges())
        if (!t.has_edge(e.u, e.v)) non_tree.push_back(e);

    for (Vertex root = 1; root <= g.order(); ++root) {
        ++result.roots_tried;
        RootedTree rooted(t, root);
        bool palm = std::all_of(non_tree.begin(), non_tree.end(), [&](const Edge& e) {
            return rooted.is_ancestor(e.u, e.v) || rooted.is_ancestor(e.v, e.u);
        });
        if (!palm) continue;
        auto attempt = constrained_search(g, t, SearchKind::Dfs, 'l', root, SimulationMode::Backtrack);
        result.nodes_expanded += attempt.nodes_expanded;
        if (attempt.status != ConstrainedSearchResult::Status::Found)
            throw std::logic_error("palm condition held but no order was found");
        result.outcome = Outcome::Yes;
        result.root = root;
        result.witness = std::move(attempt.ordering);
        return result;
    }
    result.outcome = Outcome::No;
    return result;
}

RecognitionResult recognize_bfs_f_tree(const Graph& g, const SpanningTree& t, Budget budget) {
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    RecognitionResult result;
    long long remaining = budget.unlimited() ? std::numeric_limits<long long>::max() : budget.max_nodes;
    for (Vertex root = 1; root <= g.order(); ++root) {
        ++result.roots_tried;
        // every neighbor of the root sits one layer down, so all its edges
        // must be tree edges; cheap reject before the full layer filter
        if (g.degree(root) != t.degree(root)) continue;
        RootedTree rooted(t, root);
        std::vector<int> dist = bfs_distances(g, root);
        bool layered = true;
        for (Vertex v = 1; v <= g.order() && layered; ++v)
            layered = rooted.depth(v) == dist[static_cast<size_t>(v)];
        if (!layered) continue;
        auto attempt =
            constrained_search(g, t, SearchKind::Bfs, 'f', root, SimulationMode::Backtrack,
                               Budget::nodes(remaining));
        result.nodes_expanded += attempt.nodes_expanded;
        remaining -= attempt.nodes_expanded;
        if (attempt.status == ConstrainedSearchResult::Status::Found) {
            result.outcome = Outcome::Yes;
            result.root = root;
            result.witness = std::move(attempt.ordering);
            return result;
        }
        if (attempt.status == ConstrainedSearchResult::Status::BudgetExceeded) {
            result.outcome = Outcome::Inconclusive;
            return result;
        }
    }
    result.outcome = Outcome::No;
    return result;
}

RecognitionResult recognize(const Graph& g, const SpanningTree& t, SearchKind kind, char side,
                            Budget budget) {
    bool first_in = is_first_in(side);
    if (!validate_spanning_tree(g, t)) throw std::invalid_argument("not a spanning tree of the graph");
    if (!g.connected()) throw std::invalid_argument("recognition expects a connected graph");

    if (kind != SearchKind::Gen && kind != SearchKind::Dfs) {
        if (auto partition = split_partition(g)) {
            if (first_in) return recognize_split_f_tree(g, t, kind, *partition);
            if (kind != SearchKind::Bfs) return recognize_split_l_tree(g, t, kind, *partition);
        }
    }
    if (first_in && kind == SearchKind::Bfs) return recognize_bfs_f_tree(g, t, budget);
    if (!first_in && kind == SearchKind::Dfs) return recognize_dfs_l_tree(g, t);
    if (!first_in && kind == SearchKind::Ldfs) return recognize_ldfs_l_tree(g, t);
    return per_root_simulation(g, t, kind, side, SimulationMode::Backtrack, budget);
}

}  // namespace gst
