#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constel/graph.hpp"
#include "constel/sequences.hpp"
#include "constel/subdivision.hpp"

namespace constel {

// A graph together with a designated stable apex set S and the list of
// path components of host minus S, each stored in path order.
struct Constellation {
    Graph host;
    VertexSet apex;
    std::vector<std::vector<Vertex>> paths;

    int apex_count() const { return static_cast<int>(apex.size()); }
    int path_count() const { return static_cast<int>(paths.size()); }
};

// Apex and path selection inside an ambient graph; the vertex ids refer to
// that ambient graph and need not cover it.
struct SubSelection {
    VertexSet apex;
    std::vector<std::vector<Vertex>> paths;
};

enum class ViolationKind {
    ApexNotStable,     // a, b: the adjacent apex pair
    ComponentNotPath,  // a: path index
    PathNotComponent,  // a: path index
    MissingNeighbor,   // a: apex vertex, b: path index
    VertexOutOfRange,  // a: offending id
    CoverageMismatch,  // a: offending vertex (missing or duplicated)
};

struct Violation {
    ViolationKind kind;
    Vertex a = -1;
    Vertex b = -1;
};

std::string violation_to_string(const Violation& v);

struct ValidationResult {
    bool ok = false;
    std::vector<Violation> violations;
};

// Checks the constellation invariants: apex stable; paths partition
// host minus apex; each path is a component and an induced path in the
// listed order; every apex vertex has a neighbor in every path.
ValidationResult validate(const Graph& host, const VertexSet& apex,
                          const std::vector<std::vector<Vertex>>& paths);
ValidationResult validate(const Constellation& c);

// Same invariants for a selection inside an ambient graph: apex stable,
// each listed path an induced path, paths the components of the selected
// vertices minus the apex, every selected apex with a neighbor in every
// selected path.
ValidationResult validate_selection(const Graph& ambient, const SubSelection& sel);

// The constellation induced by a selection, with the id map back to the
// ambient graph. Throws if the selection does not validate.
struct RestrictedConstellation {
    Constellation constellation;
    std::vector<Vertex> original_id;  // new id -> ambient id
};
RestrictedConstellation restrict_to(const Graph& ambient, const SubSelection& sel);

// A route: an induced path between two apex vertices whose interior is a
// contiguous stretch of one path.
struct Route {
    Vertex x;       // apex end attached at position lo
    Vertex y;       // apex end attached at position hi
    int path;       // index into paths
    int lo, hi;     // inclusive positions within the path, lo <= hi
    int length() const { return hi - lo + 2; }  // edge count
    std::vector<Vertex> vertices(const Constellation& c) const;   // x, interior..., y
    std::vector<Vertex> interior(const Constellation& c) const;
};

// All routes between apex vertices x and y, complete and duplicate-free,
// ordered by (path, lo, hi).
std::vector<Route> enumerate_routes(const Constellation& c, Vertex x, Vertex y);

// Routes over all apex pairs, ordered by (x, y, path, lo, hi) with x < y.
std::vector<Route> enumerate_all_routes(const Constellation& c);

// A linear order on the apex set, listed first to last.
using ApexOrder = std::vector<Vertex>;

ApexOrder natural_order(const Constellation& c);
bool is_apex_order(const Constellation& c, const ApexOrder& order);

struct AmpleResult {
    bool ok = false;
    std::optional<Route> violating;  // a route of length <= d+1
};

// d-ample: no route of length at most d+1.
AmpleResult is_ample(const Constellation& c, int d);

struct OrderCheckResult {
    bool ok = false;
    std::optional<ApexOrder> order;  // certifying order (echoed, or found by search)
    // on failure: the offending route and apexes
    std::optional<Route> route;
    std::vector<Vertex> witnesses;  // interrupted: the z missing the route;
                                    // zigzagged/mixed: the avoiding apexes
};

// Interrupted: for x before y before z in the order, every route from x to
// y has a neighbor of z among its vertices.
OrderCheckResult is_interrupted(const Constellation& c, const ApexOrder& order);
OrderCheckResult search_interrupted(const Constellation& c);

// q-zigzagged: every route from x to y misses fewer than q apexes strictly
// between x and y.
OrderCheckResult is_zigzagged(const Constellation& c, int q, const ApexOrder& order);
OrderCheckResult search_zigzagged(const Constellation& c, int q);

// (q-,q,q+)-mixed, evaluated by counting route-avoiding apexes in the three
// regions: a route fails iff at least q- avoiders precede x, at least q lie
// strictly between, and at least q+ follow y.
OrderCheckResult is_mixed(const Constellation& c, int q_minus, int q, int q_plus,
                          const ApexOrder& order);
OrderCheckResult search_mixed(const Constellation& c, int q_minus, int q, int q_plus);

// Aligned: every path traverses apex neighborhoods monotonically in the
// order (per-path direction free).
OrderCheckResult is_aligned(const Constellation& c, const ApexOrder& order);
OrderCheckResult search_aligned(const Constellation& c);

// Apex-rank trace of a path: for each path vertex in traversal order, the
// 1-based order-ranks of its apex neighbors (ascending within one vertex).
// The canonical direction is the lexicographically smaller traversal.
IndexSequence extract_sequence(const Constellation& c, int path_index, const ApexOrder& order);

struct SitsInResult {
    bool ok = false;
    std::string failure;  // human-readable clause + witness
};

// Whether the selection b, read in c's host, is a constellation sitting in
// c: apexes contained in c's apex, every b-path a contiguous subpath of some
// c-path, and no two b-paths inside the same c-path.
SitsInResult sits_in(const SubSelection& b, const Constellation& c);

struct RoutePairResult {
    bool found = false;
    std::optional<std::pair<Route, Route>> pair;
};

// Whether some two routes are anticomplete in the host.
RoutePairResult has_two_anticomplete_routes(const Constellation& c);

struct SplitResult {
    bool ok = false;
    std::string failure;
    VertexSet x_side, y_side;       // two anticomplete vertex sets
    SubSelection x_sel, y_sel;      // each inducing a (cap,cap)-constellation
};

// Constructive split of an ample q-zigzagged constellation into two
// anticomplete vertex sets each inducing a (cap,cap)-constellation: pick
// x1 < S1 < Q < S2 < x2 in the order, take per-path minimal routes from x1
// and x2 into Q, and pigeonhole the apex subsets hit by their interiors.
SplitResult split_zigzagged(const Constellation& c, int cap, int q, const ApexOrder& order);

// Search for an induced proper subdivision of K_{1,2q+1} whose center and
// leaves all have host degree >= 4.
SubdivisionSearch star_subdivision_obstruction(const Constellation& c, int q,
                                               std::int64_t node_budget = 20'000'000);

}  // namespace constel
