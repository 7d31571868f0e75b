#pragma once

#include <optional>
#include <string_view>

#include "gst/graph.hpp"

namespace gst {

enum class SearchKind { Gen, Bfs, Dfs, Lbfs, Ldfs, Mcs, Mns };

std::string_view to_string(SearchKind kind);
std::optional<SearchKind> search_kind_from_string(std::string_view name);

/// Deterministic choice among tied candidates. The searches themselves are
/// nondeterministic; a tie-break pins one branch.
struct TieBreak {
    enum class Policy { MinId, MaxId, Explicit };

    Policy policy = Policy::MinId;
    std::vector<Vertex> priority;  // permutation of 1..n for Explicit

    static TieBreak min_id() { return {}; }
    static TieBreak max_id() { return {Policy::MaxId, {}}; }
    static TieBreak explicit_order(std::vector<Vertex> order) {
        return {Policy::Explicit, std::move(order)};
    }

    /// Picks from a non-empty ascending candidate list.
    Vertex pick(std::span<const Vertex> candidates) const;
};

/// Incremental label bookkeeping for one search run. Labels of unvisited
/// vertices are a pure function of (kind, visited prefix, adjacency);
/// advance/retract keep them in sync so backtracking search stays cheap.
class LabelState {
public:
    LabelState(const Graph& g, SearchKind kind);

    SearchKind kind() const { return kind_; }
    const Graph& graph() const { return *g_; }

    int step() const { return static_cast<int>(visited_.size()); }
    const std::vector<Vertex>& visited() const { return visited_; }
    bool is_visited(Vertex v) const { return position_[static_cast<size_t>(v)] != 0; }
    /// 1-based visit position, 0 if unvisited.
    int position(Vertex v) const { return position_[static_cast<size_t>(v)]; }

    /// Visit v; updates every unvisited neighbor's label.
    void advance(Vertex v);
    /// Undo the most recent advance.
    void retract();

    /// Vertices that became adjacent to the visited set during the latest
    /// advance (their first-in parent is now fixed).
    std::span<const Vertex> last_discovered() const;

    /// Exactly the vertices a valid next step may choose; ascending.
    /// An empty visited prefix admits every vertex.
    std::vector<Vertex> candidates() const;

    /// Earliest-visited neighbor of v (its first-in parent once v has one); 0 if none.
    Vertex first_neighbor(Vertex v) const { return first_nbr_[static_cast<size_t>(v)]; }
    int first_neighbor_position(Vertex v) const { return first_nbr_pos_[static_cast<size_t>(v)]; }
    /// Latest-visited neighbor of v so far; 0 if none.
    Vertex last_neighbor(Vertex v) const { return last_nbr_[static_cast<size_t>(v)]; }
    int last_neighbor_position(Vertex v) const { return last_nbr_pos_[static_cast<size_t>(v)]; }

    /// LBFS/LDFS/MNS label of v in insertion order (LDFS compares from the
    /// back, MNS reads it as a set of step indices).
    const std::vector<int>& label_sequence(Vertex v) const { return seq_[static_cast<size_t>(v)]; }
    /// MCS label: number of visited neighbors.
    int label_count(Vertex v) const { return count_[static_cast<size_t>(v)]; }

    /// Comparison used to rank unvisited vertices; >0 if a outranks b, 0 if tied.
    int compare_labels(Vertex a, Vertex b) const;

private:
    struct UndoRecord {
        Vertex v = 0;
        std::vector<Vertex> labeled;     // neighbors whose label grew
        std::vector<Vertex> discovered;  // neighbors whose first_nbr was set
        std::vector<std::pair<Vertex, Vertex>> last_nbr_was;
    };

    const Graph* g_;
    SearchKind kind_;
    std::vector<Vertex> visited_;
    std::vector<int> position_;
    std::vector<std::vector<int>> seq_;
    std::vector<int> count_;
    std::vector<Vertex> first_nbr_, last_nbr_;
    std::vector<int> first_nbr_pos_, last_nbr_pos_;
    std::vector<UndoRecord> undo_;
};

/// Free-function view of LabelState::candidates.
std::vector<Vertex> step_candidates(const LabelState& state);

/// Runs the search to completion from start; deterministic given the tie-break.
VertexOrdering run_search(const Graph& g, SearchKind kind, Vertex start,
                          const TieBreak& tie_break = TieBreak::min_id());

/// True iff every prefix step of sigma picks a valid candidate for the kind.
bool validate_order(const Graph& g, SearchKind kind, const VertexOrdering& sigma);

}  // namespace gst
