#include "gst/gst.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gst/io.hpp"
#include "gst/oracle.hpp"
#include "gst/recognize.hpp"
#include "gst/reductions.hpp"
#include "gst/searches.hpp"
#include "gst/split.hpp"
#include "gst/trees.hpp"

struct gst_graph {
    gst::Graph impl;
};

struct gst_tree {
    gst::SpanningTree impl;
};

namespace {

thread_local std::string g_last_error = "";

gst_status fail(gst_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
gst_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const gst::ParseError& e) {
        return fail(GST_ERR_PARSE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GST_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(GST_ERR_INVALID, e.what());
    }
}

gst_status require(bool ok, const char* message) {
    return ok ? GST_OK : fail(GST_ERR_INVALID, message);
}

gst_status to_text(const std::string& s, char** out) {
    char* buffer = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buffer) return fail(GST_ERR_NOMEM, "out of memory");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    *out = buffer;
    return GST_OK;
}

gst_status parse_kind(const char* kind, gst::SearchKind* out) {
    if (!kind) return fail(GST_ERR_INVALID, "kind is NULL");
    auto parsed = gst::search_kind_from_string(kind);
    if (!parsed) return fail(GST_ERR_INVALID, "unknown search kind: " + std::string(kind));
    *out = *parsed;
    return GST_OK;
}

gst_status parse_tie_break(const char* text, int n, gst::TieBreak* out) {
    if (!text || std::strcmp(text, "min") == 0) {
        *out = gst::TieBreak::min_id();
        return GST_OK;
    }
    if (std::strcmp(text, "max") == 0) {
        *out = gst::TieBreak::max_id();
        return GST_OK;
    }
    std::vector<gst::Vertex> priority;
    const char* p = text;
    while (*p) {
        char* end = nullptr;
        long v = std::strtol(p, &end, 10);
        if (end == p) return fail(GST_ERR_INVALID, "malformed tie-break list");
        priority.push_back(static_cast<gst::Vertex>(v));
        p = *end == ',' ? end + 1 : end;
        if (*end && *end != ',') return fail(GST_ERR_INVALID, "malformed tie-break list");
    }
    if (static_cast<int>(priority.size()) != n)
        return fail(GST_ERR_INVALID, "tie-break list must name every vertex");
    *out = gst::TieBreak::explicit_order(std::move(priority));
    return GST_OK;
}

std::vector<gst::Edge> pack_edges(const int* endpoints, int count) {
    std::vector<gst::Edge> edges;
    edges.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    return edges;
}

void fill_recognition(const gst::RecognitionResult& r, gst_recognition* out, int* witness_out) {
    out->outcome = r.outcome == gst::Outcome::Yes
                       ? GST_YES
                       : (r.outcome == gst::Outcome::Inconclusive ? GST_INCONCLUSIVE : GST_NO);
    out->root = r.root.value_or(0);
    out->roots_tried = r.roots_tried;
    out->nodes_expanded = r.nodes_expanded;
    if (witness_out && r.witness)
        for (int i = 1; i <= r.witness->size(); ++i) witness_out[i - 1] = r.witness->at(i);
}

}  // namespace

extern "C" {

const char* gst_last_error(void) { return g_last_error.c_str(); }

gst_status gst_graph_parse(const char* text, gst_graph** out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(text && out, "NULL argument"); rc != GST_OK) return rc;
        *out = new gst_graph{gst::parse_graph_file(text)};
        return GST_OK;
    });
}

gst_status gst_graph_from_edges(int n, const int* endpoints, int m, gst_graph** out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(out && (m == 0 || endpoints), "NULL argument"); rc != GST_OK) return rc;
        *out = new gst_graph{gst::Graph(n, pack_edges(endpoints, m))};
        return GST_OK;
    });
}

void gst_graph_free(gst_graph* g) { delete g; }

int gst_graph_order(const gst_graph* g) { return g ? g->impl.order() : 0; }
int gst_graph_size(const gst_graph* g) { return g ? g->impl.size() : 0; }
int gst_graph_has_edge(const gst_graph* g, int u, int v) {
    return g && g->impl.has_edge(u, v) ? 1 : 0;
}

gst_status gst_graph_format(const gst_graph* g, char** out_text) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && out_text, "NULL argument"); rc != GST_OK) return rc;
        return to_text(gst::format_graph(g->impl), out_text);
    });
}

void gst_text_free(char* text) { std::free(text); }

gst_status gst_tree_parse(const char* text, const gst_graph* g, gst_tree** out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(text && g && out, "NULL argument"); rc != GST_OK) return rc;
        *out = new gst_tree{gst::parse_tree_file(text, g->impl)};
        return GST_OK;
    });
}

gst_status gst_tree_from_edges(const gst_graph* g, const int* endpoints, int edge_count,
                               gst_tree** out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && out && (edge_count == 0 || endpoints), "NULL argument");
            rc != GST_OK)
            return rc;
        auto edges = pack_edges(endpoints, edge_count);
        auto t = gst::SpanningTree::try_build(g->impl.order(), edges);
        if (!t) return fail(GST_ERR_INVALID, "edge set is not a spanning tree");
        if (!gst::validate_spanning_tree(g->impl, *t))
            return fail(GST_ERR_INVALID, "tree uses edges outside the graph");
        *out = new gst_tree{std::move(*t)};
        return GST_OK;
    });
}

void gst_tree_free(gst_tree* t) { delete t; }

int gst_tree_order(const gst_tree* t) { return t ? t->impl.order() : 0; }

gst_status gst_tree_edges(const gst_tree* t, int* endpoints_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(t && endpoints_out, "NULL argument"); rc != GST_OK) return rc;
        int i = 0;
        for (const gst::Edge& e : t->impl.edges()) {
            endpoints_out[i++] = e.u;
            endpoints_out[i++] = e.v;
        }
        return GST_OK;
    });
}

gst_status gst_tree_format(const gst_tree* t, char** out_text) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(t && out_text, "NULL argument"); rc != GST_OK) return rc;
        return to_text(gst::format_tree(t->impl), out_text);
    });
}

gst_status gst_search_run(const gst_graph* g, const char* kind, int start, const char* tie_break,
                          int* order_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && order_out, "NULL argument"); rc != GST_OK) return rc;
        gst::SearchKind k;
        if (auto rc = parse_kind(kind, &k); rc != GST_OK) return rc;
        gst::TieBreak tb;
        if (auto rc = parse_tie_break(tie_break, g->impl.order(), &tb); rc != GST_OK) return rc;
        gst::VertexOrdering order = gst::run_search(g->impl, k, start, tb);
        for (int i = 1; i <= order.size(); ++i) order_out[i - 1] = order.at(i);
        return GST_OK;
    });
}

gst_status gst_order_valid(const gst_graph* g, const char* kind, const int* order, int* valid_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && order && valid_out, "NULL argument"); rc != GST_OK) return rc;
        gst::SearchKind k;
        if (auto rc = parse_kind(kind, &k); rc != GST_OK) return rc;
        auto sigma = gst::VertexOrdering::try_from(
            std::vector<gst::Vertex>(order, order + g->impl.order()));
        if (!sigma) return fail(GST_ERR_INVALID, "order is not a permutation of 1..n");
        *valid_out = gst::validate_order(g->impl, k, *sigma) ? 1 : 0;
        return GST_OK;
    });
}

gst_status gst_search_tree(const gst_graph* g, const int* order, char side, gst_tree** out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && order && out, "NULL argument"); rc != GST_OK) return rc;
        auto sigma = gst::VertexOrdering::try_from(
            std::vector<gst::Vertex>(order, order + g->impl.order()));
        if (!sigma) return fail(GST_ERR_INVALID, "order is not a permutation of 1..n");
        *out = new gst_tree{gst::build_search_tree(g->impl, *sigma, side)};
        return GST_OK;
    });
}

gst_status gst_recognize(const gst_graph* g, const gst_tree* t, const char* kind, char side,
                         long long budget, gst_recognition* result, int* witness_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && t && result, "NULL argument"); rc != GST_OK) return rc;
        gst::SearchKind k;
        if (auto rc = parse_kind(kind, &k); rc != GST_OK) return rc;
        gst::RecognitionResult r =
            gst::recognize(g->impl, t->impl, k, side,
                           budget <= 0 ? gst::Budget::unlimited_budget() : gst::Budget::nodes(budget));
        fill_recognition(r, result, witness_out);
        return GST_OK;
    });
}

gst_status gst_oracle_recognize(const gst_graph* g, const gst_tree* t, const char* kind, char side,
                                gst_recognition* result, int* witness_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && t && result, "NULL argument"); rc != GST_OK) return rc;
        gst::SearchKind k;
        if (auto rc = parse_kind(kind, &k); rc != GST_OK) return rc;
        auto witness = gst::oracle_recognize(g->impl, t->impl, k, side);
        gst::RecognitionResult r;
        r.outcome = witness ? gst::Outcome::Yes : gst::Outcome::No;
        if (witness) {
            r.root = witness->at(1);
            r.witness = std::move(witness);
        }
        fill_recognition(r, result, witness_out);
        return GST_OK;
    });
}

gst_status gst_graph_in_class(const gst_graph* g, const char* cls, int* verdict_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(g && cls && verdict_out, "NULL argument"); rc != GST_OK) return rc;
        std::string name = cls;
        bool verdict;
        if (name == "split")
            verdict = gst::split_partition(g->impl).has_value();
        else if (name == "chordal")
            verdict = gst::is_chordal(g->impl);
        else if (name == "weakly-chordal")
            verdict = gst::is_weakly_chordal_bruteforce(g->impl);
        else
            return fail(GST_ERR_INVALID, "unknown graph class: " + name);
        *verdict_out = verdict ? 1 : 0;
        return GST_OK;
    });
}

gst_status gst_reduction_build(const char* dimacs_text, const char* target, int strict,
                               char** graph_text, char** tree_text, char** roles_text) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(dimacs_text && target && graph_text && tree_text && roles_text,
                              "NULL argument");
            rc != GST_OK)
            return rc;
        gst::CnfFormula f = gst::parse_dimacs_cnf(dimacs_text, strict != 0);
        std::string name = target;
        if (name != "lbfs" && name != "mns")
            return fail(GST_ERR_INVALID, "unknown reduction target: " + name);
        gst::ReductionInstance inst =
            name == "lbfs" ? gst::build_lbfs_instance(f) : gst::build_mns_instance(f);
        *graph_text = *tree_text = *roles_text = nullptr;
        auto cleanup = [&] {
            gst_text_free(*graph_text);
            gst_text_free(*tree_text);
            *graph_text = *tree_text = nullptr;
        };
        if (auto rc = to_text(gst::format_graph(inst.graph), graph_text); rc != GST_OK) return rc;
        if (auto rc = to_text(gst::format_tree(inst.tree), tree_text); rc != GST_OK) {
            cleanup();
            return rc;
        }
        if (auto rc = to_text(gst::format_roles(inst), roles_text); rc != GST_OK) {
            cleanup();
            return rc;
        }
        return GST_OK;
    });
}

gst_status gst_cnf_satisfiable(const char* dimacs_text, int strict, int* sat_out) {
    return guarded([&]() -> gst_status {
        if (auto rc = require(dimacs_text && sat_out, "NULL argument"); rc != GST_OK) return rc;
        gst::CnfFormula f = gst::parse_dimacs_cnf(dimacs_text, strict != 0);
        *sat_out = gst::sat_bruteforce(f).has_value() ? 1 : 0;
        return GST_OK;
    });
}

}  // extern "C"
