#pragma once

#include <string>
#include <string_view>

#include "gst/graph.hpp"
#include "gst/reductions.hpp"

namespace gst {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Graph file: header "n m", then m lines "u v" with 1-based ids; lines whose
/// first non-blank character is '#' are comments. The loaded graph must be
/// simple and connected.
Graph parse_graph_file(std::string_view text);
std::string format_graph(const Graph& g);

/// Tree file: header "n", then n-1 lines "u v"; must form a spanning tree of
/// the companion graph.
SpanningTree parse_tree_file(std::string_view text, const Graph& g);
std::string format_tree(const SpanningTree& t);

/// DIMACS CNF. Clauses are 0-terminated; a clause with fewer than three
/// literal slots is padded by repeating its first literal, or rejected when
/// strict is set. Clauses with more than three slots are always rejected.
CnfFormula parse_dimacs_cnf(std::string_view text, bool strict = false);
std::string format_dimacs_cnf(const CnfFormula& f);

}  // namespace gst
