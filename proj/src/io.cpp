#include "gst/io.hpp"

#include <charconv>
#include <vector>

namespace gst {

namespace {

struct Lines {
    explicit Lines(std::string_view text) : text_(text) {}

    // next non-comment, non-blank line; false at end of input
    bool next(std::string_view& line, int& line_no) {
        while (pos_ <= text_.size()) {
            size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view candidate = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_no_;
            size_t first = candidate.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;
            if (candidate[first] == '#') continue;
            line = candidate;
            line_no = line_no_;
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_no_ = 0;
};

std::vector<long long> parse_ints(std::string_view line, int line_no, size_t expected) {
    std::vector<long long> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc())
            throw ParseError(line_no, "expected an integer");
        i = static_cast<size_t>(ptr - line.data());
        out.push_back(value);
    }
    if (out.size() != expected)
        throw ParseError(line_no, "expected " + std::to_string(expected) + " integers");
    return out;
}

std::vector<Edge> parse_edge_lines(Lines& lines, long long count, long long n) {
    std::vector<Edge> edges;
    std::unordered_set<uint64_t> seen;
    for (long long i = 0; i < count; ++i) {
        std::string_view line;
        int line_no = 0;
        if (!lines.next(line, line_no))
            throw ParseError(lines.line_no() + 1, "unexpected end of input; expected an edge line");
        auto ints = parse_ints(line, line_no, 2);
        if (ints[0] < 1 || ints[0] > n || ints[1] < 1 || ints[1] > n)
            throw ParseError(line_no, "vertex id out of range");
        if (ints[0] == ints[1]) throw ParseError(line_no, "self-loop");
        Edge e(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
        if (!seen.insert(static_cast<uint64_t>(e.u) * static_cast<uint64_t>(n + 1) +
                         static_cast<uint64_t>(e.v))
                 .second)
            throw ParseError(line_no, "duplicate edge");
        edges.push_back(e);
    }
    return edges;
}

}  // namespace

Graph parse_graph_file(std::string_view text) {
    Lines lines(text);
    std::string_view header;
    int line_no = 0;
    if (!lines.next(header, line_no)) throw ParseError(1, "missing header line \"n m\"");
    auto ints = parse_ints(header, line_no, 2);
    if (ints[0] < 1) throw ParseError(line_no, "vertex count must be positive");
    if (ints[1] < 0) throw ParseError(line_no, "edge count must be non-negative");
    std::vector<Edge> edges = parse_edge_lines(lines, ints[1], ints[0]);
    std::string_view extra;
    if (lines.next(extra, line_no)) throw ParseError(line_no, "trailing content after edge list");

    Graph g(static_cast<int>(ints[0]), edges);
    if (!g.connected()) throw ParseError(lines.line_no(), "graph is not connected");
    return g;
}

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

SpanningTree parse_tree_file(std::string_view text, const Graph& g) {
    Lines lines(text);
    std::string_view header;
    int line_no = 0;
    if (!lines.next(header, line_no)) throw ParseError(1, "missing header line \"n\"");
    auto ints = parse_ints(header, line_no, 1);
    if (ints[0] != g.order())
        throw ParseError(line_no, "tree is over " + std::to_string(ints[0]) +
                                      " vertices but the graph has " + std::to_string(g.order()));
    std::vector<Edge> edges = parse_edge_lines(lines, ints[0] - 1, ints[0]);
    std::string_view extra;
    if (lines.next(extra, line_no)) throw ParseError(line_no, "trailing content after edge list");

    for (const Edge& e : edges)
        if (!g.has_edge(e.u, e.v))
            throw ParseError(lines.line_no(),
                             "tree edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                 " is not an edge of the graph");
    auto t = SpanningTree::try_build(g.order(), edges);
    if (!t) throw ParseError(lines.line_no(), "edge set does not form a spanning tree");
    return std::move(*t);
}

std::string format_tree(const SpanningTree& t) {
    std::string out = std::to_string(t.order()) + "\n";
    for (const Edge& e : t.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

CnfFormula parse_dimacs_cnf(std::string_view text, bool strict) {
    CnfFormula f;
    long long declared_clauses = -1;
    std::vector<int> pending;
    bool header_seen = false;

    Lines lines(text);
    std::string_view line;
    int line_no = 0;
    while (lines.next(line, line_no)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (line[first] == 'c') continue;  // DIMACS comment
        if (line[first] == 'p') {
            if (header_seen) throw ParseError(line_no, "duplicate problem line");
            size_t cnf = line.find("cnf");
            if (cnf == std::string_view::npos) throw ParseError(line_no, "expected \"p cnf k l\"");
            auto ints = parse_ints(line.substr(cnf + 3), line_no, 2);
            if (ints[0] < 1 || ints[0] > 24) throw ParseError(line_no, "variable count out of range");
            if (ints[1] < 0) throw ParseError(line_no, "clause count must be non-negative");
            f.variables = static_cast<int>(ints[0]);
            declared_clauses = ints[1];
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError(line_no, "clause before the problem line");
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            long long lit = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), lit);
            if (ec != std::errc()) throw ParseError(line_no, "expected a literal");
            i = static_cast<size_t>(ptr - line.data());
            if (lit == 0) {
                if (pending.empty()) throw ParseError(line_no, "empty clause");
                if (pending.size() > 3) throw ParseError(line_no, "clause has more than three literals");
                if (pending.size() < 3 && strict)
                    throw ParseError(line_no, "clause has fewer than three literals");
                while (pending.size() < 3) pending.push_back(pending.front());
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                if (std::abs(lit) > f.variables) throw ParseError(line_no, "literal out of range");
                pending.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header_seen) throw ParseError(lines.line_no(), "missing problem line");
    if (!pending.empty()) throw ParseError(lines.line_no(), "unterminated clause");
    if (declared_clauses != static_cast<long long>(f.clauses.size()))
        throw ParseError(lines.line_no(), "clause count does not match the problem line");
    return f;
}

std::string format_dimacs_cnf(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.variables) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out += std::to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

}  // namespace gst
