#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/graph.hpp"
#include "constel/subdivision.hpp"

namespace constel {

// An induced (s,t)-model: s+t pairwise disjoint connected branch sets, each
// side pairwise anticomplete, every cross pair joined by an edge.
struct InducedModel {
    Graph host;
    std::vector<VertexSet> a_sets;
    std::vector<VertexSet> b_sets;

    int s() const { return static_cast<int>(a_sets.size()); }
    int t() const { return static_cast<int>(b_sets.size()); }
};

enum class ModelViolationKind {
    Overlap,           // a, b: branch-set indices in the combined A-then-B numbering
    Disconnected,      // side, a: index within side
    SameSideEdge,      // side, a, b
    MissingCrossEdge,  // a: A index, b: B index
    VertexOutOfRange,  // a: offending id
};

struct ModelViolation {
    ModelViolationKind kind;
    char side = '-';  // 'A' or 'B' where applicable
    int a = -1;
    int b = -1;
};

std::string model_violation_to_string(const ModelViolation& v);

struct ModelValidation {
    bool ok = false;
    std::vector<ModelViolation> violations;
};

ModelValidation verify_model(const InducedModel& m);

enum class ModelSide { A, B, Both };

// Whether the branch sets on the chosen side each induce a path.
bool is_linear(const InducedModel& m, ModelSide side = ModelSide::Both);

InducedModel transpose(const InducedModel& m);

struct ContractedModel {
    Constellation constellation;
    // host-of-model vertex id -> constellation vertex id (-1 if outside A(M) u B(M))
    std::vector<int> vertex_map;
};

// Restrict the host to the branch sets and contract each A_i to a single
// apex vertex. Apexes take ids 0..s-1 in A-set order; path vertices are
// renumbered contiguously in B-set order along each path. Requires a linear
// model; the result always validates as an (s,t)-constellation.
ContractedModel a_contraction(const InducedModel& m);

// d-ampleness of the A-contraction (side A), of the B-contraction (side B),
// or of both.
bool model_ample(const InducedModel& m, int d, ModelSide side = ModelSide::Both);

struct ModelSearch {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<InducedModel> witness;
    std::int64_t nodes = 0;
};

// Backtracking search for an induced (s,t)-model in g. Exhaustive at desk
// scale; NotFound is conclusive when the budget was not exhausted.
ModelSearch find_bipartite_model(const Graph& g, int s, int t,
                                 std::int64_t node_budget = 20'000'000);

struct RouteComponent {
    VertexSet vertices;
    std::vector<int> a_indices;  // I_K
    std::vector<int> b_indices;  // J_K
};

struct RouteComponentReport {
    VertexSet isolated;  // Z: vertices meeting no cross edge
    std::vector<RouteComponent> comps;
    bool claim_holds = false;  // every component meets exactly one A_i and one B_j
    std::string failure;
};

// For a linear 2-ample model: build the cross-edge subgraph, drop its
// isolated vertices Z, and report which branch sets each remaining
// component meets. For inputs passing the preconditions every component
// must meet exactly one A-set and one B-set.
RouteComponentReport route_component_analysis(const InducedModel& m);

}  // namespace constel
