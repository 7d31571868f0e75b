#pragma once

#include "gst/searches.hpp"

namespace gst {

/// Node allowance for the backtracking recognizers. An exhausted budget
/// yields an explicit inconclusive outcome, never a false "no".
struct Budget {
    long long max_nodes = 0;  // <= 0 means unlimited

    bool unlimited() const { return max_nodes <= 0; }
    static Budget unlimited_budget() { return {}; }
    static Budget nodes(long long n) { return {n}; }
};

enum class Outcome { No, Yes, Inconclusive };

struct RecognitionResult {
    Outcome outcome = Outcome::No;
    std::optional<Vertex> root;
    std::optional<VertexOrdering> witness;
    int roots_tried = 0;
    long long nodes_expanded = 0;

    bool recognized() const { return outcome == Outcome::Yes; }
};

enum class SimulationMode { Greedy, Backtrack };

struct ConstrainedSearchResult {
    enum class Status { Found, Exhausted, BudgetExceeded };
    Status status = Status::Exhausted;
    std::optional<VertexOrdering> ordering;
    long long nodes_expanded = 0;
};

/// Simulates the search from root, restricted to steps that keep the queried
/// tree reachable: the admissible set at each step is the intersection of the
/// kind's candidates with the vertices whose pinned first-in/last-in parent
/// equals their parent in t rooted at root. Greedy commits to the smallest
/// admissible vertex and fails on an empty admissible set; Backtrack explores
/// every admissible choice depth-first under the budget. Any returned
/// ordering is a valid order of the kind whose side-tree equals t.
ConstrainedSearchResult constrained_search(const Graph& g, const SpanningTree& t, SearchKind kind,
                                           char side, Vertex root, SimulationMode mode,
                                           Budget budget = Budget::unlimited_budget());

/// Greedy simulation per root; exact for last-in trees of LDFS.
RecognitionResult recognize_ldfs_l_tree(const Graph& g, const SpanningTree& t);

/// Palm condition per root: every non-tree edge must join an
/// ancestor-descendant pair of t rooted there.
RecognitionResult recognize_dfs_l_tree(const Graph& g, const SpanningTree& t);

/// Per-root simulation guarded by the layer filter: a root survives only if
/// every tree depth equals the BFS distance from it.
RecognitionResult recognize_bfs_f_tree(const Graph& g, const SpanningTree& t,
                                       Budget budget = Budget::unlimited_budget());

/// Dispatcher over all (kind, side) combinations. Split graphs route to the
/// linear-time recognizers; the remaining hard combinations run the pruned
/// backtracking engine per root under the budget.
RecognitionResult recognize(const Graph& g, const SpanningTree& t, SearchKind kind, char side,
                            Budget budget = Budget::unlimited_budget());

}  // namespace gst
