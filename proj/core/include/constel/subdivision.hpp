#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "constel/graph.hpp"

namespace constel {

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SubdivisionOptions {
    bool proper = false;            // every branch path must have length >= 2
    std::int64_t node_budget = 20'000'000;
    int min_branch_degree = 0;      // host-degree filter on branch-vertex images
    bool spanning = false;          // witness must cover all host vertices
};

struct SubdivisionWitness {
    std::vector<Vertex> branch_image;            // pattern vertex -> host vertex
    std::vector<std::vector<Vertex>> edge_paths;  // per pattern edge (canonical order),
                                                  // full host path including both ends
};

struct SubdivisionSearch {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<SubdivisionWitness> witness;
    std::int64_t nodes = 0;
};

// Backtracking search for an induced subdivision of `pattern` inside `g`:
// an injective image of the pattern vertices plus one host path per pattern
// edge such that the union of the paths induces exactly the subdivision
// (interiors pairwise disjoint and anticomplete, no chords). Exploration
// order is fixed, so the returned witness is the lexicographically first.
// NotFound is exhaustive; BudgetExceeded is inconclusive.
SubdivisionSearch find_induced_subdivision(const Graph& g, const Graph& pattern,
                                           const SubdivisionOptions& opts = {});

// Replays a witness against g and pattern; used by tests and callers that
// persist witnesses.
bool check_subdivision_witness(const Graph& g, const Graph& pattern,
                               const SubdivisionWitness& w, bool proper);

}  // namespace constel
