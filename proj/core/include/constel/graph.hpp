#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace constel {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate-free

// Immutable simple undirected graph over dense vertex ids 0..n-1.
// No loops, no parallel edges; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool empty() const { return n_ == 0; }

    bool has_edge(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    // All edges as sorted (u,v) pairs with u < v, lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;

    void check_vertex(Vertex v) const;
};

VertexSet make_vertex_set(std::vector<Vertex> vs);
bool is_valid_vertex_set(const Graph& g, const VertexSet& x);
bool set_contains(const VertexSet& x, Vertex v);

struct RelabeledGraph {
    Graph graph;
    std::vector<Vertex> original_id;  // original_id[new] = old
};

// Subgraph induced by x; ids are relabeled densely in ascending order of
// the original ids, with the map returned alongside.
RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& x);

// True iff x and y are disjoint and no edge joins them.
bool is_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y);

// Connected components as sorted vertex sets, ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g);

// Components of the subgraph induced by x, in the same deterministic order,
// expressed in g's vertex ids.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& x);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

struct LineGraphResult {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> edge_of_vertex;  // line-graph vertex -> g edge
};

LineGraphResult line_graph(const Graph& g);

struct SubdivisionResult {
    Graph graph;
    bool proper;  // every replaced edge became a path of length >= 2
};

// Replace each edge e by a path with lengths[e] internal vertices. Original
// vertices keep their ids; internal vertices are appended per edge in the
// canonical (sorted) edge order.
SubdivisionResult subdivide(const Graph& g,
                            const std::vector<std::pair<std::pair<Vertex, Vertex>, int>>& lengths);
SubdivisionResult subdivide_uniform(const Graph& g, int d);

struct ContractionResult {
    Graph graph;
    std::vector<Vertex> vertex_map;  // old id -> new id (merge classes share an image)
};

// Contract every edge with at least one end in x; loops and parallels removed.
ContractionResult x_contraction(const Graph& g, const VertexSet& x);

struct DistanceViolation {
    Vertex u;
    Vertex v;
    int distance;
};

// x_contraction guarded by the requirement that members of x are pairwise at
// distance >= 3 in g.
std::variant<ContractionResult, DistanceViolation> star_contraction(const Graph& g,
                                                                    const VertexSet& x);

// True iff seq, in the given order, is an induced path of g (consecutive
// vertices adjacent, all other pairs non-adjacent, no repeats).
bool is_induced_path_sequence(const Graph& g, const std::vector<Vertex>& seq);

// If g[x] is a path, returns its vertices in path order (starting from the
// smaller-id endpoint); otherwise nullopt.
std::optional<std::vector<Vertex>> path_order(const Graph& g, const VertexSet& x);

// True iff every cycle of g has exactly three vertices, i.e. every block is
// an edge or a triangle.
bool has_no_long_cycle(const Graph& g);

}  // namespace constel
