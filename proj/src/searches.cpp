#include "gst/searches.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <list>

namespace gst {

std::string_view to_string(SearchKind kind) {
    switch (kind) {
        case SearchKind::Gen: return "gen";
        case SearchKind::Bfs: return "bfs";
        case SearchKind::Dfs: return "dfs";
        case SearchKind::Lbfs: return "lbfs";
        case SearchKind::Ldfs: return "ldfs";
        case SearchKind::Mcs: return "mcs";
        case SearchKind::Mns: return "mns";
    }
    return "?";
}

std::optional<SearchKind> search_kind_from_string(std::string_view name) {
    if (name == "gen") return SearchKind::Gen;
    if (name == "bfs") return SearchKind::Bfs;
    if (name == "dfs") return SearchKind::Dfs;
    if (name == "lbfs") return SearchKind::Lbfs;
    if (name == "ldfs") return SearchKind::Ldfs;
    if (name == "mcs") return SearchKind::Mcs;
    if (name == "mns") return SearchKind::Mns;
    return std::nullopt;
}

Vertex TieBreak::pick(std::span<const Vertex> candidates) const {
    if (candidates.empty()) throw std::invalid_argument("no candidates to pick from");
    switch (policy) {
        case Policy::MinId: return candidates.front();
        case Policy::MaxId: return candidates.back();
        case Policy::Explicit: break;
    }
    std::vector<int> rank(priority.size() + 1, std::numeric_limits<int>::max());
    for (size_t i = 0; i < priority.size(); ++i) rank[static_cast<size_t>(priority[i])] = static_cast<int>(i);
    Vertex best = candidates.front();
    for (Vertex v : candidates) {
        if (static_cast<size_t>(v) >= rank.size()) throw std::invalid_argument("tie-break priority too short");
        if (rank[static_cast<size_t>(v)] < rank[static_cast<size_t>(best)]) best = v;
    }
    return best;
}

LabelState::LabelState(const Graph& g, SearchKind kind) : g_(&g), kind_(kind) {
    size_t slots = static_cast<size_t>(g.order()) + 1;
    position_.assign(slots, 0);
    count_.assign(slots, 0);
    first_nbr_.assign(slots, 0);
    last_nbr_.assign(slots, 0);
    first_nbr_pos_.assign(slots, 0);
    last_nbr_pos_.assign(slots, 0);
    if (kind == SearchKind::Lbfs || kind == SearchKind::Ldfs || kind == SearchKind::Mns)
        seq_.resize(slots);
    visited_.reserve(slots);
}

void LabelState::advance(Vertex v) {
    assert(!is_visited(v));
    int i = step() + 1;
    UndoRecord rec;
    rec.v = v;
    visited_.push_back(v);
    position_[static_cast<size_t>(v)] = i;
    bool has_seq = !seq_.empty();
    for (Vertex w : g_->neighbors(v)) {
        size_t wi = static_cast<size_t>(w);
        if (position_[wi] != 0) continue;
        if (has_seq) {
            // LBFS appends n-i, LDFS/MNS append the step index
            seq_[wi].push_back(kind_ == SearchKind::Lbfs ? g_->order() - i : i);
            rec.labeled.push_back(w);
        } else if (kind_ == SearchKind::Mcs) {
            ++count_[wi];
            rec.labeled.push_back(w);
        }
        if (first_nbr_[wi] == 0) {
            first_nbr_[wi] = v;
            first_nbr_pos_[wi] = i;
            rec.discovered.push_back(w);
        }
        rec.last_nbr_was.emplace_back(w, last_nbr_[wi]);
        last_nbr_[wi] = v;
        last_nbr_pos_[wi] = i;
    }
    undo_.push_back(std::move(rec));
}

void LabelState::retract() {
    assert(!undo_.empty());
    const UndoRecord& rec = undo_.back();
    position_[static_cast<size_t>(rec.v)] = 0;
    visited_.pop_back();
    for (Vertex w : rec.labeled) {
        if (!seq_.empty())
            seq_[static_cast<size_t>(w)].pop_back();
        else
            --count_[static_cast<size_t>(w)];
    }
    for (Vertex w : rec.discovered) {
        first_nbr_[static_cast<size_t>(w)] = 0;
        first_nbr_pos_[static_cast<size_t>(w)] = 0;
    }
    for (auto [w, old] : rec.last_nbr_was) {
        last_nbr_[static_cast<size_t>(w)] = old;
        last_nbr_pos_[static_cast<size_t>(w)] = old == 0 ? 0 : position_[static_cast<size_t>(old)];
    }
    undo_.pop_back();
}

std::span<const Vertex> LabelState::last_discovered() const {
    if (undo_.empty()) return {};
    return undo_.back().discovered;
}

int LabelState::compare_labels(Vertex a, Vertex b) const {
    size_t ai = static_cast<size_t>(a), bi = static_cast<size_t>(b);
    auto sign = [](long long d) { return d > 0 ? 1 : d < 0 ? -1 : 0; };
    switch (kind_) {
        case SearchKind::Gen:
            return sign((first_nbr_pos_[ai] != 0) - (first_nbr_pos_[bi] != 0));
        case SearchKind::Bfs: {
            long long pa = first_nbr_pos_[ai] == 0 ? std::numeric_limits<int>::max() : first_nbr_pos_[ai];
            long long pb = first_nbr_pos_[bi] == 0 ? std::numeric_limits<int>::max() : first_nbr_pos_[bi];
            return sign(pb - pa);  // smaller position outranks
        }
        case SearchKind::Dfs:
            return sign(static_cast<long long>(last_nbr_pos_[ai]) - last_nbr_pos_[bi]);
        case SearchKind::Mcs:
            return sign(static_cast<long long>(count_[ai]) - count_[bi]);
        case SearchKind::Lbfs: {
            const auto& la = seq_[ai];
            const auto& lb = seq_[bi];
            size_t k = std::min(la.size(), lb.size());
            for (size_t i = 0; i < k; ++i)
                if (la[i] != lb[i]) return la[i] > lb[i] ? 1 : -1;
            return sign(static_cast<long long>(la.size()) - lb.size());
        }
        case SearchKind::Ldfs: {
            // most recent label component first
            const auto& la = seq_[ai];
            const auto& lb = seq_[bi];
            size_t k = std::min(la.size(), lb.size());
            for (size_t i = 0; i < k; ++i) {
                int xa = la[la.size() - 1 - i], xb = lb[lb.size() - 1 - i];
                if (xa != xb) return xa > xb ? 1 : -1;
            }
            return sign(static_cast<long long>(la.size()) - lb.size());
        }
        case SearchKind::Mns: {
            // +1 iff label(a) strictly contains label(b); 0 when equal or incomparable
            const auto& la = seq_[ai];
            const auto& lb = seq_[bi];
            size_t x = 0, y = 0;
            bool a_has_extra = false, b_has_extra = false;
            while (x < la.size() && y < lb.size()) {
                if (la[x] == lb[y]) {
                    ++x;
                    ++y;
                } else if (la[x] < lb[y]) {
                    a_has_extra = true;
                    ++x;
                } else {
                    b_has_extra = true;
                    ++y;
                }
            }
            if (x < la.size()) a_has_extra = true;
            if (y < lb.size()) b_has_extra = true;
            if (a_has_extra && !b_has_extra) return 1;
            if (b_has_extra && !a_has_extra) return -1;
            return 0;
        }
    }
    return 0;
}

std::vector<Vertex> LabelState::candidates() const {
    int n = g_->order();
    std::vector<Vertex> out;
    if (visited_.empty()) {
        out.resize(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v) out[static_cast<size_t>(v) - 1] = v;
        return out;
    }
    if (step() == n) throw std::logic_error("all vertices already visited");

    if (kind_ == SearchKind::Mns) {
        std::vector<Vertex> frontier;
        for (Vertex v = 1; v <= n; ++v)
            if (position_[static_cast<size_t>(v)] == 0 && first_nbr_pos_[static_cast<size_t>(v)] != 0)
                frontier.push_back(v);
        for (Vertex v : frontier) {
            bool dominated = false;
            for (Vertex w : frontier) {
                if (w != v && seq_[static_cast<size_t>(w)].size() > seq_[static_cast<size_t>(v)].size() &&
                    compare_labels(w, v) > 0) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.push_back(v);
        }
        return out;
    }

    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (position_[static_cast<size_t>(v)] != 0 || first_nbr_pos_[static_cast<size_t>(v)] == 0)
            continue;
        if (best == 0) {
            best = v;
            continue;
        }
        int c = compare_labels(v, best);
        if (c > 0) best = v;
    }
    if (best == 0) return out;  // no unvisited vertex touches the visited set
    for (Vertex v = 1; v <= n; ++v)
        if (position_[static_cast<size_t>(v)] == 0 && first_nbr_pos_[static_cast<size_t>(v)] != 0 &&
            (v == best || compare_labels(v, best) == 0))
            out.push_back(v);
    return out;
}

std::vector<Vertex> step_candidates(const LabelState& state) { return state.candidates(); }

VertexOrdering run_search(const Graph& g, SearchKind kind, Vertex start, const TieBreak& tie_break) {
    if (!g.has_vertex(start)) throw std::invalid_argument("start vertex out of range");
    LabelState state(g, kind);
    state.advance(start);
    while (state.step() < g.order()) {
        auto cands = state.candidates();
        if (cands.empty()) throw std::invalid_argument("graph is not connected");
        state.advance(tie_break.pick(cands));
    }
    return VertexOrdering(state.visited());
}

namespace {

// Partition-refinement check for LBFS: maintain label-equivalence classes in
// label-descending order; a step is valid iff it picks from the first
// non-empty class. Splitting places each hit sub-class directly before the
// class it came from.
bool lbfs_valid(const Graph& g, const VertexOrdering& sigma) {
    int n = g.order();
    std::list<int> order;                                  // class ids, best first
    std::vector<std::list<int>::iterator> where;           // per class id
    std::vector<int> live;                                 // per class id
    std::vector<int> class_of(static_cast<size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    std::vector<char> reached(static_cast<size_t>(n) + 1, 0);
    std::vector<int> buddy;  // per class id, -1 outside a step

    order.push_back(0);
    where.push_back(order.begin());
    live.push_back(n);
    buddy.push_back(-1);

    for (int i = 1; i <= n; ++i) {
        Vertex v = sigma.at(i);
        size_t vi = static_cast<size_t>(v);
        if (i >= 2 && !reached[vi]) return false;
        while (!order.empty() && live[static_cast<size_t>(order.front())] == 0) order.pop_front();
        if (order.empty() || order.front() != class_of[vi]) return false;
        visited[vi] = 1;
        --live[static_cast<size_t>(class_of[vi])];

        std::vector<int> touched;
        for (Vertex w : g.neighbors(v)) {
            size_t wi = static_cast<size_t>(w);
            if (visited[wi]) continue;
            reached[wi] = 1;
            int oc = class_of[wi];
            if (buddy[static_cast<size_t>(oc)] == -1) {
                int nc = static_cast<int>(live.size());
                live.push_back(0);
                buddy.push_back(-1);
                where.push_back(order.insert(where[static_cast<size_t>(oc)], nc));
                buddy[static_cast<size_t>(oc)] = nc;
                touched.push_back(oc);
            }
            int nc = buddy[static_cast<size_t>(oc)];
            --live[static_cast<size_t>(oc)];
            ++live[static_cast<size_t>(nc)];
            class_of[wi] = nc;
        }
        for (int oc : touched) buddy[static_cast<size_t>(oc)] = -1;
    }
    return true;
}

// Bucket check for BFS: the key of a vertex (position of its first visited
// neighbor) is fixed at discovery time and keys are assigned in nondecreasing
// order, so a single forward-moving minimum pointer suffices.
bool bfs_valid(const Graph& g, const VertexOrdering& sigma) {
    int n = g.order();
    std::vector<int> key(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<Vertex>> bucket(static_cast<size_t>(n) + 1);
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    size_t minptr = 1;
    for (int i = 1; i <= n; ++i) {
        Vertex v = sigma.at(i);
        if (i >= 2) {
            while (minptr <= static_cast<size_t>(n)) {
                auto& b = bucket[minptr];
                while (!b.empty() && visited[static_cast<size_t>(b.back())]) b.pop_back();
                if (!b.empty()) break;
                ++minptr;
            }
            if (key[static_cast<size_t>(v)] == 0 ||
                static_cast<size_t>(key[static_cast<size_t>(v)]) != minptr)
                return false;
        }
        visited[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!visited[static_cast<size_t>(w)] && key[static_cast<size_t>(w)] == 0) {
                key[static_cast<size_t>(w)] = i;
                bucket[static_cast<size_t>(i)].push_back(w);
            }
    }
    return true;
}

// Bucket check for DFS (key = position of the latest visited neighbor) and
// MCS (key = visited-neighbor count). Keys only grow; stale bucket entries
// are skipped when the maximum pointer scans down.
bool max_key_valid(const Graph& g, const VertexOrdering& sigma, bool count_key) {
    int n = g.order();
    std::vector<int> key(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<Vertex>> bucket(static_cast<size_t>(n) + 1);
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    int maxptr = 0;
    for (int i = 1; i <= n; ++i) {
        Vertex v = sigma.at(i);
        if (i >= 2) {
            while (maxptr > 0) {
                auto& b = bucket[static_cast<size_t>(maxptr)];
                while (!b.empty() && (visited[static_cast<size_t>(b.back())] ||
                                      key[static_cast<size_t>(b.back())] != maxptr))
                    b.pop_back();
                if (!b.empty()) break;
                --maxptr;
            }
            if (key[static_cast<size_t>(v)] == 0 || key[static_cast<size_t>(v)] != maxptr) return false;
        }
        visited[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) {
            size_t wi = static_cast<size_t>(w);
            if (visited[wi]) continue;
            key[wi] = count_key ? key[wi] + 1 : i;
            bucket[static_cast<size_t>(key[wi])].push_back(w);
            maxptr = std::max(maxptr, key[wi]);
        }
    }
    return true;
}

bool gen_valid(const Graph& g, const VertexOrdering& sigma) {
    int n = g.order();
    std::vector<char> reached(static_cast<size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        Vertex v = sigma.at(i);
        if (i >= 2 && !reached[static_cast<size_t>(v)]) return false;
        visited[static_cast<size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!visited[static_cast<size_t>(w)]) reached[static_cast<size_t>(w)] = 1;
    }
    return true;
}

// Replay with full label bookkeeping; used for the kinds without a cheaper
// dedicated check (LDFS, MNS).
bool replay_valid(const Graph& g, SearchKind kind, const VertexOrdering& sigma) {
    int n = g.order();
    LabelState state(g, kind);
    for (int i = 1; i <= n; ++i) {
        Vertex v = sigma.at(i);
        if (i >= 2) {
            if (state.first_neighbor_position(v) == 0) return false;
            for (Vertex w = 1; w <= n; ++w)
                if (w != v && !state.is_visited(w) && state.compare_labels(v, w) < 0) return false;
        }
        state.advance(v);
    }
    return true;
}

}  // namespace

bool validate_order(const Graph& g, SearchKind kind, const VertexOrdering& sigma) {
    if (sigma.size() != g.order())
        throw std::invalid_argument("ordering size does not match graph order");
    switch (kind) {
        case SearchKind::Gen: return gen_valid(g, sigma);
        case SearchKind::Bfs: return bfs_valid(g, sigma);
        case SearchKind::Dfs: return max_key_valid(g, sigma, false);
        case SearchKind::Mcs: return max_key_valid(g, sigma, true);
        case SearchKind::Lbfs: return lbfs_valid(g, sigma);
        case SearchKind::Ldfs:
        case SearchKind::Mns: return replay_valid(g, kind, sigma);
    }
    return false;
}

}  // namespace gst
