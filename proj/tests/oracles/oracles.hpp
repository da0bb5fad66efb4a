#pragma once

// Brute-force reference implementations used only by tests. These stay
// independent of the search/DP code paths they check: everything here is
// plain enumeration.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/graph.hpp"
#include "constel/hypergraph.hpp"
#include "constel/sequences.hpp"

namespace oracles {

using constel::Graph;
using constel::Vertex;
using constel::VertexSet;

// All induced paths from x to y whose internal vertices avoid the apex set,
// as vertex sequences. Plain DFS over partial induced paths.
inline std::vector<std::vector<Vertex>> induced_apex_paths(const constel::Constellation& c,
                                                           Vertex x, Vertex y) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{x};
    std::vector<bool> on_path(static_cast<size_t>(c.host.vertex_count()), false);
    on_path[static_cast<size_t>(x)] = true;
    auto induced_ok = [&](Vertex z) {
        // z may only be adjacent to the last vertex of the partial path
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (c.host.has_edge(path[i], z)) return false;
        return true;
    };
    std::function<void()> dfs = [&]() {
        Vertex last = path.back();
        for (Vertex z : c.host.neighbors(last)) {
            if (on_path[static_cast<size_t>(z)]) continue;
            if (z == y) {
                if (induced_ok(z) && path.size() >= 2) out.push_back(path), out.back().push_back(y);
                continue;
            }
            if (constel::set_contains(c.apex, z)) continue;  // interior avoids the apexes
            if (!induced_ok(z)) continue;
            path.push_back(z);
            on_path[static_cast<size_t>(z)] = true;
            dfs();
            on_path[static_cast<size_t>(z)] = false;
            path.pop_back();
        }
    };
    dfs();
    return out;
}

// Whether target is an induced minor of host: enumerate all assignments of
// host vertices to target branch sets (or none) and check every clause.
inline bool is_induced_minor(const Graph& host, const Graph& target) {
    const int n = host.vertex_count();
    const int k = target.vertex_count();
    if (k == 0) return true;
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            std::vector<VertexSet> sets(static_cast<size_t>(k));
            for (int u = 0; u < n; ++u)
                if (label[static_cast<size_t>(u)] >= 0)
                    sets[static_cast<size_t>(label[static_cast<size_t>(u)])].push_back(u);
            for (auto& s : sets)
                if (s.empty() || constel::components_within(host, s).size() != 1) return false;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    bool touching = !constel::is_anticomplete(host, sets[static_cast<size_t>(a)],
                                                              sets[static_cast<size_t>(b)]);
                    if (touching != target.has_edge(a, b)) return false;
                }
            return true;
        }
        for (int l = -1; l < k; ++l) {
            label[static_cast<size_t>(v)] = l;
            if (rec(v + 1)) return true;
        }
        label[static_cast<size_t>(v)] = -1;
        return false;
    };
    return rec(0);
}

// Whether candidate is (exactly) some subdivision of pattern: enumerate
// injections of pattern vertices and assignments of the remaining vertices
// to pattern edges, then check each class is a path with the right ends and
// that no other edges exist.
inline bool is_subdivision_of(const Graph& candidate, const Graph& pattern, bool proper) {
    const int n = candidate.vertex_count();
    const int p = pattern.vertex_count();
    auto pattern_edges = pattern.edges();
    const int m = static_cast<int>(pattern_edges.size());
    if (p > n) return false;
    std::vector<int> image(static_cast<size_t>(p), -1);
    std::vector<bool> taken(static_cast<size_t>(n), false);
    std::vector<int> edge_of(static_cast<size_t>(n), -1);

    std::function<bool()> check = [&]() {
        // each edge class plus its two ends must form a path; no stray edges
        std::vector<std::vector<Vertex>> cls(static_cast<size_t>(m));
        for (int v = 0; v < n; ++v)
            if (edge_of[static_cast<size_t>(v)] >= 0)
                cls[static_cast<size_t>(edge_of[static_cast<size_t>(v)])].push_back(v);
        std::set<std::pair<int, int>> allowed;
        for (int e = 0; e < m; ++e) {
            auto [pu, pv] = pattern_edges[static_cast<size_t>(e)];
            Vertex a = image[static_cast<size_t>(pu)];
            Vertex b = image[static_cast<size_t>(pv)];
            VertexSet with_ends = cls[static_cast<size_t>(e)];
            with_ends.push_back(a);
            with_ends.push_back(b);
            with_ends = constel::make_vertex_set(with_ends);
            auto order = constel::path_order(candidate, with_ends);
            if (!order) return false;
            if ((order->front() != a || order->back() != b) &&
                (order->front() != b || order->back() != a))
                return false;
            if (proper && order->size() < 3) return false;
            for (size_t i = 0; i + 1 < order->size(); ++i) {
                auto x = std::min((*order)[i], (*order)[i + 1]);
                auto y = std::max((*order)[i], (*order)[i + 1]);
                allowed.insert({x, y});
            }
        }
        for (auto [u, v] : candidate.edges())
            if (!allowed.count({u, v})) return false;
        return true;
    };

    std::function<bool(int)> assign_rest = [&](int v) -> bool {
        if (v == n) return check();
        if (taken[static_cast<size_t>(v)]) return assign_rest(v + 1);
        for (int e = 0; e < m; ++e) {
            edge_of[static_cast<size_t>(v)] = e;
            if (assign_rest(v + 1)) return true;
        }
        edge_of[static_cast<size_t>(v)] = -1;
        return false;
    };

    std::function<bool(int)> place = [&](int k) -> bool {
        if (k == p) return assign_rest(0);
        for (int v = 0; v < n; ++v) {
            if (taken[static_cast<size_t>(v)]) continue;
            image[static_cast<size_t>(k)] = v;
            taken[static_cast<size_t>(v)] = true;
            if (place(k + 1)) return true;
            taken[static_cast<size_t>(v)] = false;
            image[static_cast<size_t>(k)] = -1;
        }
        return false;
    };
    return place(0);
}

// Whether host contains an induced subdivision of pattern: enumerate vertex
// subsets and defer to is_subdivision_of on the induced subgraph.
inline bool contains_induced_subdivision(const Graph& host, const Graph& pattern, bool proper) {
    const int n = host.vertex_count();
    for (int mask = 0; mask < (1 << n); ++mask) {
        VertexSet subset;
        for (int v = 0; v < n; ++v)
            if (mask & (1 << v)) subset.push_back(v);
        if (static_cast<int>(subset.size()) < pattern.vertex_count()) continue;
        auto sub = constel::induced_subgraph(host, subset);
        if (is_subdivision_of(sub.graph, pattern, proper)) return true;
    }
    return false;
}

// Subset-scan hypergraph parameters.
inline int nu_oracle(const constel::Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::set<int> used;
        bool ok = true;
        int count = 0;
        for (int i = 0; i < m && ok; ++i)
            if (mask & (1 << i)) {
                ++count;
                for (int v : h.edges[static_cast<size_t>(i)])
                    if (!used.insert(v).second) ok = false;
            }
        if (ok) best = std::max(best, count);
    }
    return best;
}

inline int tau_oracle(const constel::Hypergraph& h) {
    int best = h.n;
    for (int mask = 0; mask < (1 << h.n); ++mask) {
        bool hits_all = true;
        for (auto& e : h.edges) {
            bool hit = false;
            for (int v : e)
                if (mask & (1 << v)) hit = true;
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) best = std::min(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

inline int lambda_oracle(const constel::Hypergraph& h) {
    const int m = static_cast<int>(h.edges.size());
    int best = 1;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> family;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) family.push_back(i);
        bool ok = true;
        for (size_t i = 0; i < family.size() && ok; ++i)
            for (size_t j = i + 1; j < family.size() && ok; ++j) {
                bool has_private = false;
                for (int v = 0; v < h.n && !has_private; ++v) {
                    bool in_all_needed = true;
                    for (size_t k = 0; k < family.size(); ++k) {
                        auto& e = h.edges[static_cast<size_t>(family[k])];
                        bool contains = std::binary_search(e.begin(), e.end(), v);
                        bool should = (k == i || k == j);
                        if (contains != should) in_all_needed = false;
                    }
                    if (in_all_needed) has_private = true;
                }
                if (!has_private) ok = false;
            }
        if (ok) best = std::max(best, static_cast<int>(family.size()));
    }
    return best;
}

// Naive alignment search: every window, every subset, via is_alignment.
inline std::optional<std::vector<int>> max_alignment_oracle(const constel::IndexSequence& a,
                                                            int k) {
    std::set<int> values(a.begin(), a.end());
    std::vector<int> vals(values.begin(), values.end());
    const int m = static_cast<int>(vals.size());
    if (m < k) return std::nullopt;
    std::vector<int> pick;
    std::function<std::optional<std::vector<int>>(size_t)> rec =
        [&](size_t from) -> std::optional<std::vector<int>> {
        if (static_cast<int>(pick.size()) == k) {
            for (int i = 1; i <= static_cast<int>(a.size()); ++i)
                for (int j = i; j <= static_cast<int>(a.size()); ++j)
                    if (constel::is_alignment(a, pick, i, j)) return pick;
            return std::nullopt;
        }
        for (size_t idx = from; idx < vals.size(); ++idx) {
            pick.push_back(vals[idx]);
            if (auto hit = rec(idx + 1)) return hit;
            pick.pop_back();
        }
        return std::nullopt;
    };
    return rec(0);
}

// Random simple graph with edge probability p, fixed seed.
inline Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

inline constel::Hypergraph random_hypergraph(int max_n, int max_edges, unsigned seed) {
    std::mt19937 rng(seed);
    int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    int m = std::uniform_int_distribution<int>(1, max_edges)(rng);
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < m; ++i) {
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (std::bernoulli_distribution(0.4)(rng)) e.push_back(v);
        if (e.empty()) e.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
        edges.push_back(std::move(e));
    }
    return constel::make_hypergraph(n, std::move(edges));
}

}  // namespace oracles
