#include "constel/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace constel {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= Mask{1} << v;
        adj[static_cast<size_t>(v)] |= Mask{1} << u;
    }
    return adj;
}

// Back-degree of v when eliminated after the vertices of `before`: the
// neighbors of the component of v in g[before | {v}], outside before and v.
int elimination_degree(const std::vector<Mask>& adj, Mask before, int v) {
    Mask inside = before | (Mask{1} << v);
    Mask comp = Mask{1} << v;
    Mask frontier = comp;
    Mask reach = adj[static_cast<size_t>(v)];
    while (true) {
        Mask grow = reach & inside & ~comp;
        if (!grow) break;
        comp |= grow;
        frontier = grow;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            reach |= adj[static_cast<size_t>(u)];
        }
    }
    Mask outside = reach & ~inside;
    return std::popcount(outside);
}

}  // namespace

WidthResult treewidth_exact(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (limit > kTreewidthVertexLimit) limit = kTreewidthVertexLimit;
    if (n > limit)
        throw std::invalid_argument("treewidth_exact: graph has " + std::to_string(n) +
                                    " vertices, limit is " + std::to_string(limit));
    WidthResult res;
    res.kind = WidthKind::Treewidth;
    if (n == 0) {
        res.value = -1;
        return res;
    }
    auto adj = adjacency_masks(g);
    const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
    // f[S] = minimum over orders eliminating S first of the maximum
    // back-degree; f[S] = min_v max(f[S\v], degree of v after S\v)
    std::vector<std::int8_t> f(static_cast<size_t>(full) + 1, 0);
    for (Mask S = 1; S <= full; ++S) {
        int best = n;
        Mask it = S;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            Mask rest = S & ~(Mask{1} << v);
            int cand = std::max<int>(f[rest], elimination_degree(adj, rest, v));
            best = std::min(best, cand);
        }
        f[S] = static_cast<std::int8_t>(best);
    }
    res.value = f[full];
    // reconstruct an optimal order back to front
    std::vector<Vertex> order(static_cast<size_t>(n));
    Mask S = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        Mask it = S;
        int pick = -1;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            Mask rest = S & ~(Mask{1} << v);
            int cand = std::max<int>(f[rest], elimination_degree(adj, rest, v));
            if (cand == f[S]) {
                pick = v;
                break;
            }
        }
        order[static_cast<size_t>(pos)] = pick;
        S &= ~(Mask{1} << pick);
    }
    res.certificate = std::move(order);
    return res;
}

WidthResult pathwidth_exact(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (limit > kPathwidthVertexLimit) limit = kPathwidthVertexLimit;
    if (n > limit)
        throw std::invalid_argument("pathwidth_exact: graph has " + std::to_string(n) +
                                    " vertices, limit is " + std::to_string(limit));
    WidthResult res;
    res.kind = WidthKind::Pathwidth;
    if (n == 0) {
        res.value = -1;
        return res;
    }
    auto adj = adjacency_masks(g);
    const Mask full = (Mask{1} << n) - 1;
    // boundary cost of a placed prefix S: members with a neighbor outside
    auto cost = [&](Mask S) {
        int c = 0;
        Mask it = S;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            if (adj[static_cast<size_t>(v)] & ~S) ++c;
        }
        return c;
    };
    std::vector<std::int8_t> gdp(static_cast<size_t>(full) + 1, 0);
    for (Mask S = 1; S <= full; ++S) {
        int cS = cost(S);
        int best = n + 1;
        Mask it = S;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            best = std::min<int>(best, gdp[S & ~(Mask{1} << v)]);
        }
        gdp[S] = static_cast<std::int8_t>(std::max(cS, best));
    }
    res.value = gdp[full];
    std::vector<Vertex> layout(static_cast<size_t>(n));
    Mask S = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        Mask it = S;
        int pick = -1;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            Mask rest = S & ~(Mask{1} << v);
            if (std::max<int>(cost(S), gdp[rest]) == gdp[S]) {
                pick = v;
                break;
            }
        }
        layout[static_cast<size_t>(pos)] = pick;
        S &= ~(Mask{1} << pick);
    }
    res.certificate = std::move(layout);
    return res;
}

int replay_certificate(const Graph& g, const WidthResult& result) {
    const int n = g.vertex_count();
    if (static_cast<int>(result.certificate.size()) != n)
        throw std::invalid_argument("certificate length does not match the graph");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (Vertex v : result.certificate) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("certificate is not a permutation of the vertices");
        seen[static_cast<size_t>(v)] = true;
    }
    if (n == 0) return -1;
    if (result.kind == WidthKind::Treewidth) {
        // replay the elimination, adding fill edges
        std::vector<std::set<Vertex>> adj(static_cast<size_t>(n));
        for (auto [u, v] : g.edges()) {
            adj[static_cast<size_t>(u)].insert(v);
            adj[static_cast<size_t>(v)].insert(u);
        }
        std::vector<bool> gone(static_cast<size_t>(n), false);
        int width = 0;
        for (Vertex v : result.certificate) {
            std::vector<Vertex> live;
            for (Vertex w : adj[static_cast<size_t>(v)])
                if (!gone[static_cast<size_t>(w)]) live.push_back(w);
            width = std::max(width, static_cast<int>(live.size()));
            for (size_t i = 0; i < live.size(); ++i)
                for (size_t j = i + 1; j < live.size(); ++j) {
                    adj[static_cast<size_t>(live[i])].insert(live[j]);
                    adj[static_cast<size_t>(live[j])].insert(live[i]);
                }
            gone[static_cast<size_t>(v)] = true;
        }
        return width;
    }
    // pathwidth: maximum boundary over prefixes of the layout
    std::vector<bool> placed(static_cast<size_t>(n), false);
    int width = 0;
    for (Vertex v : result.certificate) {
        placed[static_cast<size_t>(v)] = true;
        int boundary = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (!placed[static_cast<size_t>(u)]) continue;
            for (Vertex w : g.neighbors(u))
                if (!placed[static_cast<size_t>(w)]) {
                    ++boundary;
                    break;
                }
        }
        width = std::max(width, boundary);
    }
    return width;
}

bool certify(const Graph& g, const WidthResult& result) {
    try {
        return replay_certificate(g, result) == result.value;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace constel
