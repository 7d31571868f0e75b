#pragma once

#include <functional>

#include "gst/searches.hpp"

namespace gst {

/// Enumerates every valid search order of the kind, branching over all
/// candidates in ascending id order, each order exactly once. The callback
/// returns false to stop early; the function returns false iff it stopped.
/// When start is given only orders beginning there are produced.
bool for_each_search_order(const Graph& g, SearchKind kind, std::optional<Vertex> start,
                           const std::function<bool(const std::vector<Vertex>&)>& visit);

/// Convenience wrapper collecting the full list; intended for small graphs.
std::vector<VertexOrdering> enumerate_search_orders(const Graph& g, SearchKind kind,
                                                    std::optional<Vertex> start = std::nullopt);

/// Definitional decision procedure for search-tree recognition: enumerates
/// search orders and cuts any branch as soon as a vertex's first-in (side
/// 'f') or last-in (side 'l') parent is pinned to something other than its
/// parent in t rooted at the branch's first vertex. Returns the first witness
/// in enumeration order, if any.
std::optional<VertexOrdering> oracle_recognize(const Graph& g, const SpanningTree& t,
                                               SearchKind kind, char side);

/// All spanning trees of g, each exactly once; intended for small graphs.
bool for_each_spanning_tree(const Graph& g, const std::function<bool(const SpanningTree&)>& visit);
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

/// Chordality via the reversed-LBFS perfect elimination order.
bool is_chordal(const Graph& g);

/// True iff neither g nor its complement has an induced cycle of length >= 5.
/// Bounded path-extension search; intended for small graphs.
bool is_weakly_chordal_bruteforce(const Graph& g);

}  // namespace gst
