#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/graph.hpp"

namespace constel {

// The auxiliary graph of a constellation and an induced-subgraph selection:
// one vertex per apex inside the selection, with an edge when some route
// runs between the two apexes entirely inside the selection and every other
// selected apex is anticomplete to it.
struct AuxGraph {
    Graph graph;
    std::vector<Vertex> apex_ids;  // aux vertex -> host apex id
};

AuxGraph aux_graph(const Constellation& c, const VertexSet& h);

struct StructureReport {
    bool ok = false;
    std::string failure;
    // star-contraction side: selected apexes pairwise at distance >= 3 in h
    bool star_ok = false;
    std::optional<std::pair<Vertex, Vertex>> star_violation;
    // J = contraction of the selection by its apexes
    Graph contracted;
    AuxGraph aux;
    // leaf-extension base witness: attachment points (aux vertex ids, one
    // per added pendant) such that J is a subdivision of the extension
    std::vector<int> leaf_attachments;
    std::optional<SubdivisionWitness> subdivision_witness;
};

// For a selection h whose induced subgraph has no cycle on four or more
// vertices (checked) inside an ample constellation: computes the
// apex-contraction J of h, verifies the pairwise-distance condition, and
// searches for a leaf-extension of the aux graph of which J is a
// subdivision. A missing witness is reported as a falsification.
StructureReport apex_contraction_structure(const Constellation& c, const VertexSet& h,
                                           std::int64_t node_budget = 20'000'000);

struct BandwidthReport {
    int max_gap = 0;  // max j-i over aux edges in the order-induced enumeration
    AuxGraph aux;
    std::vector<int> ranks;  // rank within the enumeration, per aux vertex
};

// Enumerates the selected apexes by the given order and reports the largest
// index gap across an aux-graph edge. For a q-zigzagged order the gap never
// exceeds q; this function reports, callers assert.
BandwidthReport order_bandwidth_bound(const Constellation& c, const VertexSet& h,
                                      const ApexOrder& order);

}  // namespace constel
