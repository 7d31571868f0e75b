#pragma once

#include <array>
#include <string>

#include "gst/graph.hpp"

namespace gst {

/// 3-CNF instance; literals are signed 1-based variable indexes.
struct CnfFormula {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Instance of one of the search-tree hardness constructions: the graph, the
/// queried spanning tree, and a role tag per vertex describing which gadget
/// part it plays.
struct ReductionInstance {
    Graph graph;
    SpanningTree tree;
    std::vector<std::string> roles;  // indexed by vertex id, slot 0 empty

    static constexpr const char* kGraphSuffix = ".graph";
    static constexpr const char* kTreeSuffix = ".tree";
    static constexpr const char* kRolesSuffix = ".roles";
};

/// Gadget whose spanning tree is a first-in tree of LBFS iff the formula is
/// satisfiable. Vertex layout: positive literals 1..k, negated literals
/// k+1..2k, per-clause triangles (a_i, c_i, t_i), then r, p, q, u.
ReductionInstance build_lbfs_instance(const CnfFormula& f);

/// Gadget whose spanning tree is a first-in tree of MNS (and MCS) iff the
/// formula is satisfiable. Vertex layout: literals as above, clause vertices
/// c_1..c_l, then r, p, q, a, b, t.
ReductionInstance build_mns_instance(const CnfFormula& f);

/// Exhaustive satisfiability check, up to ~20 variables.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f);

/// One "id role" line per vertex.
std::string format_roles(const ReductionInstance& inst);

}  // namespace gst
