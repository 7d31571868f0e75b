#pragma once

#include "gst/recognize.hpp"

namespace gst {

/// Partition of a split graph into a clique and an independent set.
struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
    std::vector<char> in_clique;  // indexed by vertex id
};

/// A valid partition if g is split, otherwise nothing. Takes the largest
/// prefix of the sorted degree sequence as the clique candidate and verifies
/// both sides; O(n + m).
std::optional<SplitPartition> split_partition(const Graph& g);

/// First-in tree recognition on split graphs. The answer is the same for
/// BFS, LBFS, LDFS, MCS and MNS, and is computed by the BFS recognizer; the
/// witness is rebuilt for the requested kind. roots_tried counts the roots
/// the BFS recognizer examined.
RecognitionResult recognize_split_f_tree(const Graph& g, const SpanningTree& t, SearchKind kind);
RecognitionResult recognize_split_f_tree(const Graph& g, const SpanningTree& t, SearchKind kind,
                                         const SplitPartition& partition);

/// Last-in tree recognition on split graphs via the caterpillar
/// characterization; the answer is valid simultaneously for LBFS, LDFS, MCS
/// and MNS. roots_tried counts the candidate spines examined.
RecognitionResult recognize_split_l_tree(const Graph& g, const SpanningTree& t,
                                         SearchKind kind = SearchKind::Mns);
RecognitionResult recognize_split_l_tree(const Graph& g, const SpanningTree& t, SearchKind kind,
                                         const SplitPartition& partition);

}  // namespace gst
