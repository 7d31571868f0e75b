#pragma once

#include "gst/graph.hpp"

namespace gst {

/// Thrown by the tree builders when some non-first vertex of the ordering has
/// no earlier neighbor, i.e. the ordering is not a connected-search order.
class InvalidOrderError : public std::runtime_error {
public:
    explicit InvalidOrderError(const std::string& what) : std::runtime_error(what) {}
};

/// First-in tree: every non-first vertex is attached to its earliest
/// positioned neighbor in sigma.
SpanningTree build_f_tree(const Graph& g, const VertexOrdering& sigma);

/// Last-in tree: every non-first vertex is attached to its rightmost neighbor
/// occurring before it in sigma.
SpanningTree build_l_tree(const Graph& g, const VertexOrdering& sigma);

SpanningTree build_search_tree(const Graph& g, const VertexOrdering& sigma, char side);

/// A caterpillar view of a tree: a dominating path (the spine) plus the
/// leaves hanging off it.
struct CaterpillarDecomposition {
    std::vector<Vertex> spine;
    std::vector<std::pair<Vertex, Vertex>> leaves;  // (leaf, spine attachment)

    friend bool operator==(const CaterpillarDecomposition&, const CaterpillarDecomposition&) = default;
};

/// Empty iff t is not a caterpillar. Otherwise returns the diameter-path
/// decomposition together with every variant obtained by reclassifying a
/// tree-degree-1 end of the spine as a leaf (at most one trim per end), each
/// in both orientations.
std::vector<CaterpillarDecomposition> caterpillar_decompositions(const SpanningTree& t);

/// Builds the decomposition induced by a given dominating path; throws if the
/// path does not dominate t.
CaterpillarDecomposition decomposition_from_spine(const SpanningTree& t, std::vector<Vertex> spine);

}  // namespace gst
