#pragma once

#include <string>
#include <vector>

#include "constel/graph.hpp"

namespace constel {

enum class WidthKind { Treewidth, Pathwidth };

struct WidthResult {
    WidthKind kind = WidthKind::Treewidth;
    int value = 0;
    // Treewidth: an elimination order (first eliminated first) whose fill-in
    // width equals value. Pathwidth: a vertex layout whose maximum boundary
    // equals value.
    std::vector<Vertex> certificate;
};

inline constexpr int kTreewidthVertexLimit = 18;
inline constexpr int kPathwidthVertexLimit = 16;

// Exact treewidth by dynamic programming over vertex subsets (optimal
// elimination orderings). Throws when the graph exceeds the limit: a silent
// heuristic answer would poison every downstream width assertion.
WidthResult treewidth_exact(const Graph& g, int limit = kTreewidthVertexLimit);

// Exact pathwidth as vertex separation, by the analogous DP over layouts.
WidthResult pathwidth_exact(const Graph& g, int limit = kPathwidthVertexLimit);

// Independently replays a certificate (fill-in for an elimination order,
// boundary sizes for a layout) and confirms the claimed value. Malformed
// certificates throw.
bool certify(const Graph& g, const WidthResult& result);

// The width obtained by replaying a certificate, without comparing.
int replay_certificate(const Graph& g, const WidthResult& result);

}  // namespace constel
