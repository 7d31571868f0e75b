// Command-line front end. Talks to the library exclusively through the
// extern-C interface in gst/gst.h.
//
// Exit codes: 0 positive/true, 1 negative/false, 2 inconclusive,
// 3 usage or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gst/gst.h"
#include "json.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct CliError {
    std::string message;
};

[[noreturn]] void die(const std::string& message) { throw CliError{message}; }

void check(gst_status rc) {
    if (rc != GST_OK) die(gst_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write " + path);
    out << text;
}

using GraphPtr = std::unique_ptr<gst_graph, decltype(&gst_graph_free)>;
using TreePtr = std::unique_ptr<gst_tree, decltype(&gst_tree_free)>;

GraphPtr load_graph(const std::string& path) {
    gst_graph* g = nullptr;
    check(gst_graph_parse(read_file(path).c_str(), &g));
    return GraphPtr(g, gst_graph_free);
}

TreePtr load_tree(const std::string& path, const gst_graph* g) {
    gst_tree* t = nullptr;
    check(gst_tree_parse(read_file(path).c_str(), g, &t));
    return TreePtr(t, gst_tree_free);
}

std::vector<int> parse_order_list(const std::string& text, int n) {
    std::vector<int> order;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream part(token);
        int v;
        while (part >> v) order.push_back(v);
    }
    if (static_cast<int>(order.size()) != n) die("order must list all " + std::to_string(n) + " vertices");
    return order;
}

std::string order_to_string(const std::vector<int>& order) {
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(order[i]);
    }
    return out;
}

nlohmann::json tree_to_json(const gst_tree* t) {
    int n = gst_tree_order(t);
    std::vector<int> endpoints(static_cast<size_t>(std::max(0, 2 * (n - 1))));
    check(gst_tree_edges(t, endpoints.data()));
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i + 1 < 2 * (n - 1); i += 2)
        edges.push_back({endpoints[static_cast<size_t>(i)], endpoints[static_cast<size_t>(i) + 1]});
    return edges;
}

int run_recognize(const std::string& graph_path, const std::string& tree_path,
                  const std::string& kind, const std::string& side, long long budget, bool oracle,
                  bool as_json) {
    GraphPtr g = load_graph(graph_path);
    TreePtr t = load_tree(tree_path, g.get());
    int n = gst_graph_order(g.get());
    std::vector<int> witness(static_cast<size_t>(n));
    gst_recognition result{};
    if (oracle)
        check(gst_oracle_recognize(g.get(), t.get(), kind.c_str(), side[0], &result, witness.data()));
    else
        check(gst_recognize(g.get(), t.get(), kind.c_str(), side[0], budget, &result, witness.data()));

    const char* verdict = result.outcome == GST_YES          ? "yes"
                          : result.outcome == GST_INCONCLUSIVE ? "inconclusive"
                                                                : "no";
    if (as_json) {
        nlohmann::json out{{"result", verdict},
                           {"roots_tried", result.roots_tried},
                           {"nodes_expanded", result.nodes_expanded}};
        if (result.outcome == GST_YES) {
            out["root"] = result.root;
            out["order"] = witness;
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << verdict << "\n";
        if (result.outcome == GST_YES)
            std::cout << "root " << result.root << ": " << order_to_string(witness) << "\n";
    }
    return result.outcome == GST_YES          ? kExitTrue
           : result.outcome == GST_INCONCLUSIVE ? kExitInconclusive
                                                  : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph search trees: run searches, build first-in/last-in trees, recognize them"};
    app.require_subcommand(1);

    std::string graph_path, tree_path, kind = "bfs", side = "f", order_text, tie = "min";
    std::string cnf_path, target = "lbfs", out_prefix, cls = "split";
    long long budget = 0;
    int start = 1;
    bool as_json = false, strict = false;
    std::string tree_side;

    auto* search = app.add_subcommand("search", "run a search and print the visit order");
    search->add_option("--graph", graph_path, "graph file")->required();
    search->add_option("--kind", kind, "gen|bfs|dfs|lbfs|ldfs|mcs|mns")->required();
    search->add_option("--start", start, "start vertex")->required();
    search->add_option("--tie", tie, "min|max|explicit priority list v1,v2,...");
    search->add_option("--tree", tree_side, "also print the f- or l-tree of the order");
    search->add_flag("--json", as_json, "JSON output");

    auto* validate = app.add_subcommand("validate-order", "check an order against a search kind");
    validate->add_option("--graph", graph_path)->required();
    validate->add_option("--kind", kind)->required();
    validate->add_option("--order", order_text, "comma or space separated")->required();
    validate->add_flag("--json", as_json);

    auto* build = app.add_subcommand("build-tree", "build the f- or l-tree of an order");
    build->add_option("--graph", graph_path)->required();
    build->add_option("--order", order_text)->required();
    build->add_option("--side", side, "f|l")->required();
    build->add_flag("--json", as_json);

    auto* rec = app.add_subcommand("recognize", "decide whether the tree is a search tree");
    rec->add_option("--graph", graph_path)->required();
    rec->add_option("--tree", tree_path)->required();
    rec->add_option("--kind", kind)->required();
    rec->add_option("--side", side, "f|l")->required();
    rec->add_option("--budget", budget, "node budget; 0 = unlimited");
    rec->add_flag("--json", as_json);

    auto* orc = app.add_subcommand("oracle", "exhaustive reference recognizer (small graphs)");
    orc->add_option("--graph", graph_path)->required();
    orc->add_option("--tree", tree_path)->required();
    orc->add_option("--kind", kind)->required();
    orc->add_option("--side", side, "f|l")->required();
    orc->add_flag("--json", as_json);

    auto* red = app.add_subcommand("reduce", "build a hardness instance from a 3-CNF formula");
    red->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    red->add_option("--target", target, "lbfs|mns")->required();
    red->add_option("--out-prefix", out_prefix)->required();
    red->add_flag("--strict", strict, "reject clauses with fewer than three literals");

    auto* chk = app.add_subcommand("check-class", "test membership in a graph class");
    chk->add_option("--graph", graph_path)->required();
    chk->add_option("--class", cls, "split|chordal|weakly-chordal")->required();
    chk->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (search->parsed()) {
            GraphPtr g = load_graph(graph_path);
            int n = gst_graph_order(g.get());
            std::vector<int> order(static_cast<size_t>(n));
            check(gst_search_run(g.get(), kind.c_str(), start, tie.c_str(), order.data()));
            TreePtr t(nullptr, gst_tree_free);
            if (!tree_side.empty()) {
                gst_tree* raw = nullptr;
                check(gst_search_tree(g.get(), order.data(), tree_side[0], &raw));
                t.reset(raw);
            }
            if (as_json) {
                nlohmann::json out{{"order", order}};
                if (t) out["tree"] = tree_to_json(t.get());
                std::cout << out.dump() << "\n";
            } else {
                std::cout << order_to_string(order) << "\n";
                if (t) {
                    char* text = nullptr;
                    check(gst_tree_format(t.get(), &text));
                    std::cout << text;
                    gst_text_free(text);
                }
            }
            return kExitTrue;
        }
        if (validate->parsed()) {
            GraphPtr g = load_graph(graph_path);
            std::vector<int> order = parse_order_list(order_text, gst_graph_order(g.get()));
            int valid = 0;
            check(gst_order_valid(g.get(), kind.c_str(), order.data(), &valid));
            if (as_json)
                std::cout << nlohmann::json{{"valid", valid != 0}}.dump() << "\n";
            else
                std::cout << (valid ? "valid" : "invalid") << "\n";
            return valid ? kExitTrue : kExitFalse;
        }
        if (build->parsed()) {
            GraphPtr g = load_graph(graph_path);
            std::vector<int> order = parse_order_list(order_text, gst_graph_order(g.get()));
            gst_tree* raw = nullptr;
            check(gst_search_tree(g.get(), order.data(), side[0], &raw));
            TreePtr t(raw, gst_tree_free);
            if (as_json) {
                std::cout << nlohmann::json{{"tree", tree_to_json(t.get())}}.dump() << "\n";
            } else {
                char* text = nullptr;
                check(gst_tree_format(t.get(), &text));
                std::cout << text;
                gst_text_free(text);
            }
            return kExitTrue;
        }
        if (rec->parsed())
            return run_recognize(graph_path, tree_path, kind, side, budget, false, as_json);
        if (orc->parsed())
            return run_recognize(graph_path, tree_path, kind, side, 0, true, as_json);
        if (red->parsed()) {
            char* graph_text = nullptr;
            char* tree_text = nullptr;
            char* roles_text = nullptr;
            check(gst_reduction_build(read_file(cnf_path).c_str(), target.c_str(), strict ? 1 : 0,
                                      &graph_text, &tree_text, &roles_text));
            write_file(out_prefix + ".graph", graph_text);
            write_file(out_prefix + ".tree", tree_text);
            write_file(out_prefix + ".roles", roles_text);
            std::cout << out_prefix << ".graph\n" << out_prefix << ".tree\n" << out_prefix << ".roles\n";
            gst_text_free(graph_text);
            gst_text_free(tree_text);
            gst_text_free(roles_text);
            return kExitTrue;
        }
        if (chk->parsed()) {
            GraphPtr g = load_graph(graph_path);
            int verdict = 0;
            check(gst_graph_in_class(g.get(), cls.c_str(), &verdict));
            if (as_json)
                std::cout << nlohmann::json{{"class", cls}, {"member", verdict != 0}}.dump() << "\n";
            else
                std::cout << cls << ": " << (verdict ? "yes" : "no") << "\n";
            return verdict ? kExitTrue : kExitFalse;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
