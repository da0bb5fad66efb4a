#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace constel {

// Vertex set {0..n-1} plus a list of non-empty hyperedges. Both the vertex
// set and the edge list must be non-empty.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;
};

// Throws std::invalid_argument on empty V/E, empty hyperedges, or ids out
// of range. Hyperedges are normalized to sorted distinct vertex lists.
Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges);

struct PackingResult {
    int value = 0;
    std::vector<int> edge_indices;  // a maximum pairwise-disjoint family
};

// Maximum number of pairwise disjoint hyperedges, by branch and bound.
PackingResult nu(const Hypergraph& h, std::int64_t node_budget = 50'000'000);

struct HittingResult {
    int value = 0;
    std::vector<int> vertices;  // a minimum hitting set
};

// Minimum cardinality of a vertex set meeting every hyperedge.
HittingResult tau(const Hypergraph& h, std::int64_t node_budget = 50'000'000);

struct PrivatePairResult {
    int value = 0;
    std::vector<int> edge_indices;  // the family F
    // private_vertex[{i,j}] listed in the same pair order as iterating F
    std::vector<int> private_vertices;
};

// Maximum size of a family F of hyperedges such that every pair {e,e'} in F
// has a vertex lying in e and e' and in no other member of F.
PrivatePairResult lambda(const Hypergraph& h, std::int64_t node_budget = 50'000'000);

struct DswCheck {
    bool holds = false;
    long long lhs = 0;  // tau(h)
    long long rhs = 0;  // 11 a^2 (a + a' + 3) C(a+a', a')^2
};

// Verifies nu(h) <= a and lambda(h) <= a' (throwing if either fails), then
// evaluates the covering bound tau(h) <= 11 a^2 (a+a'+3) C(a+a',a')^2.
DswCheck dsw_bound_check(const Hypergraph& h, int a, int a_prime);

long long dsw_rhs(int a, int a_prime);

struct RamseyResult {
    bool found = false;
    std::vector<int> subset;  // monochromatic n-subset of {0..u-1}
    int color = -1;
};

// Exhaustive search for an n-subset Z of {0..u-1} such that the coloring is
// constant on all m-subsets of Z. The coloring is a function of a sorted
// m-subset. NotFound (found=false) is exhaustive.
RamseyResult ramsey_search(int universe, int m, int colors,
                           const std::function<int(const std::vector<int>&)>& coloring, int n,
                           std::int64_t node_budget = 50'000'000);

}  // namespace constel
