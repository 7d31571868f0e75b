#include "gst/reductions.hpp"

#include <algorithm>
#include <set>

namespace gst {

namespace {

void check_formula(const CnfFormula& f) {
    if (f.variables < 1) throw std::invalid_argument("formula needs at least one variable");
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > f.variables)
                throw std::invalid_argument("literal out of range");
}

// literal vertex id: x_i -> i, negated x_i -> k + i
Vertex literal_vertex(int k, int lit) { return lit > 0 ? lit : k - lit; }

class EdgeSet {
public:
    void add(Vertex a, Vertex b) { edges_.insert(Edge(a, b)); }
    std::vector<Edge> take() const { return {edges_.begin(), edges_.end()}; }

private:
    std::set<Edge> edges_;
};

void add_literal_clique(EdgeSet& es, int k) {
    // complement of the perfect matching x_i -- not-x_i
    for (Vertex a = 1; a <= 2 * k; ++a)
        for (Vertex b = a + 1; b <= 2 * k; ++b)
            if (b - a != k || a > k) es.add(a, b);
}

}  // namespace

ReductionInstance build_lbfs_instance(const CnfFormula& f) {
    check_formula(f);
    int k = f.variables;
    int l = static_cast<int>(f.clauses.size());
    int n = 2 * k + 3 * l + 4;
    auto a_of = [&](int i) { return 2 * k + 3 * i + 1; };  // i is 0-based
    auto c_of = [&](int i) { return 2 * k + 3 * i + 2; };
    auto t_of = [&](int i) { return 2 * k + 3 * i + 3; };
    Vertex r = 2 * k + 3 * l + 1, p = r + 1, q = r + 2, u = r + 3;

    EdgeSet es;
    add_literal_clique(es, k);
    for (int i = 0; i < l; ++i) {
        es.add(a_of(i), c_of(i));
        es.add(a_of(i), t_of(i));
        es.add(c_of(i), t_of(i));
        for (int lit : f.clauses[static_cast<size_t>(i)]) es.add(c_of(i), literal_vertex(k, lit));
    }
    // r reaches everything but the t_i and u; u everything but the t_i and r
    for (Vertex v = 1; v <= n; ++v) {
        bool is_t = v > 2 * k && v <= 2 * k + 3 * l && (v - 2 * k) % 3 == 0;
        if (!is_t && v != r && v != u) {
            es.add(r, v);
            es.add(u, v);
        }
    }
    for (Vertex v = 1; v <= 2 * k; ++v) {
        es.add(p, v);
        es.add(q, v);
    }
    es.add(p, q);
    for (int i = 0; i < l; ++i) es.add(q, a_of(i));

    std::vector<Edge> tree_edges;
    for (Vertex v = 1; v <= n; ++v) {
        bool is_t = v > 2 * k && v <= 2 * k + 3 * l && (v - 2 * k) % 3 == 0;
        if (!is_t && v != r && v != u) tree_edges.emplace_back(r, v);
    }
    tree_edges.emplace_back(u, p);
    for (int i = 0; i < l; ++i) tree_edges.emplace_back(c_of(i), t_of(i));

    ReductionInstance inst{Graph(n, es.take()), SpanningTree(n, tree_edges), {}};
    inst.roles.resize(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= k; ++i) {
        inst.roles[static_cast<size_t>(i)] = "x" + std::to_string(i);
        inst.roles[static_cast<size_t>(k + i)] = "nx" + std::to_string(i);
    }
    for (int i = 0; i < l; ++i) {
        inst.roles[static_cast<size_t>(a_of(i))] = "a" + std::to_string(i + 1);
        inst.roles[static_cast<size_t>(c_of(i))] = "c" + std::to_string(i + 1);
        inst.roles[static_cast<size_t>(t_of(i))] = "t" + std::to_string(i + 1);
    }
    inst.roles[static_cast<size_t>(r)] = "r";
    inst.roles[static_cast<size_t>(p)] = "p";
    inst.roles[static_cast<size_t>(q)] = "q";
    inst.roles[static_cast<size_t>(u)] = "u";
    return inst;
}

ReductionInstance build_mns_instance(const CnfFormula& f) {
    check_formula(f);
    int k = f.variables;
    int l = static_cast<int>(f.clauses.size());
    int n = 2 * k + l + 6;
    auto c_of = [&](int i) { return 2 * k + i + 1; };  // i is 0-based
    Vertex r = 2 * k + l + 1, p = r + 1, q = r + 2, a = r + 3, b = r + 4, t = r + 5;

    EdgeSet es;
    add_literal_clique(es, k);
    for (int i = 0; i < l; ++i) {
        std::set<Vertex> own;
        for (int lit : f.clauses[static_cast<size_t>(i)]) own.insert(literal_vertex(k, lit));
        for (Vertex v = 1; v <= 2 * k; ++v)
            if (!own.count(v)) es.add(c_of(i), v);
    }
    for (Vertex v = 1; v <= 2 * k + l; ++v) {
        es.add(r, v);
        es.add(p, v);
        es.add(q, v);
        es.add(a, v);
        if (v <= 2 * k) es.add(b, v);
    }
    for (Edge e : {Edge(a, b), Edge(a, p), Edge(a, q), Edge(b, q), Edge(b, r), Edge(b, t),
                   Edge(p, r), Edge(q, r), Edge(q, t)})
        es.add(e.u, e.v);

    std::vector<Edge> tree_edges;
    for (Vertex v = 1; v <= 2 * k + l; ++v) tree_edges.emplace_back(r, v);
    tree_edges.emplace_back(r, p);
    tree_edges.emplace_back(r, q);
    tree_edges.emplace_back(r, b);
    tree_edges.emplace_back(p, a);
    tree_edges.emplace_back(b, t);

    ReductionInstance inst{Graph(n, es.take()), SpanningTree(n, tree_edges), {}};
    inst.roles.resize(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= k; ++i) {
        inst.roles[static_cast<size_t>(i)] = "x" + std::to_string(i);
        inst.roles[static_cast<size_t>(k + i)] = "nx" + std::to_string(i);
    }
    for (int i = 0; i < l; ++i) inst.roles[static_cast<size_t>(c_of(i))] = "c" + std::to_string(i + 1);
    inst.roles[static_cast<size_t>(r)] = "r";
    inst.roles[static_cast<size_t>(p)] = "p";
    inst.roles[static_cast<size_t>(q)] = "q";
    inst.roles[static_cast<size_t>(a)] = "a";
    inst.roles[static_cast<size_t>(b)] = "b";
    inst.roles[static_cast<size_t>(t)] = "t";
    return inst;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f) {
    check_formula(f);
    int k = f.variables;
    if (k > 24) throw std::invalid_argument("too many variables for exhaustive SAT");
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            for (int lit : clause) {
                bool value = (mask >> (std::abs(lit) - 1)) & 1u;
                if (lit > 0 ? value : !value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> assignment(static_cast<size_t>(k) + 1, false);
            for (int i = 1; i <= k; ++i) assignment[static_cast<size_t>(i)] = (mask >> (i - 1)) & 1u;
            return assignment;
        }
    }
    return std::nullopt;
}

std::string format_roles(const ReductionInstance& inst) {
    std::string out;
    for (size_t v = 1; v < inst.roles.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += inst.roles[v];
        out += '\n';
    }
    return out;
}

}  // namespace gst
