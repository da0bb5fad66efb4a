#pragma once

#include <utility>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/graph.hpp"

namespace constel {

Graph complete(int n);
Graph complete_bipartite(int s, int t);  // sides {0..s-1} and {s..s+t-1}
Graph path_graph(int n);
Graph cycle_graph(int n);

// Full binary tree of radius r on 2^{r+1}-1 vertices, rooted at 0 with
// children of i at 2i+1 and 2i+2.
Graph binary_tree(int r);

// The r-by-r wall. Convention: start from the (r+1) x (2r+2) grid, keep all
// horizontal edges, keep the vertical edge below (row, col) iff row+col is
// even, then delete the two degree-1 corners. wall(1) is a hexagon:
//
//     o--o--o        rows x cols before trimming: 2 x 4
//     |     |        vertical rungs at even row+col
//     o--o--o
//
// Connected, maximum degree 3, girth 6.
Graph wall(int r);

// The zigzag constellation: apexes x_1..x_n (ids 0..n-1) and l copies of a
// path of length len(Z_n) whose j-th vertex is adjacent to x_{z_j}.
Constellation zigzag_graph(int n, int l);

// An (s,l)-constellation aligned under the natural order: every path is s
// consecutive blocks of `reps` vertices, block j adjacent to apex j.
Constellation aligned_constellation(int s, int l, int reps);

struct OccultationResult {
    Constellation constellation;
    ApexOrder order;  // certifying interrupted order, least to greatest
};

// An interrupted (s,1)-constellation on a host path of c*2^s vertices with
// dyadically nested attachments: apex j (1-based, later in the order means
// denser) sits at the positions divisible by 2^(s-j). With `ample` set, apex
// j instead sits at the positions whose 2-adic valuation is exactly s-j,
// which keeps the nesting while making all attachment sets disjoint; the
// result is checked to be ample and interrupted before being returned.
OccultationResult occultation(int s, int c, bool ample = false);

// Pendant extension: each (leaf, base) pair adds leaf adjacent to base only.
// Leaf ids must be fresh and distinct.
Graph leaf_extension(const Graph& base, const std::vector<std::pair<Vertex, Vertex>>& attachments);
Graph leaf_extension(const Graph& base, const std::vector<Vertex>& attach_points);

}  // namespace constel
