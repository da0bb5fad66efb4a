#include "constel/contraction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace constel {

AuxGraph aux_graph(const Constellation& c, const VertexSet& h) {
    if (!is_valid_vertex_set(c.host, h))
        throw std::invalid_argument("aux_graph: selection is not a valid vertex set");
    AuxGraph out;
    for (Vertex v : h)
        if (set_contains(c.apex, v)) out.apex_ids.push_back(v);
    std::vector<int> aux_id(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t i = 0; i < out.apex_ids.size(); ++i)
        aux_id[static_cast<size_t>(out.apex_ids[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = 0; i < out.apex_ids.size(); ++i)
        for (size_t j = i + 1; j < out.apex_ids.size(); ++j) {
            Vertex x = out.apex_ids[i], y = out.apex_ids[j];
            bool linked = false;
            for (const Route& r : enumerate_routes(c, x, y)) {
                auto verts = r.vertices(c);
                if (!std::all_of(verts.begin(), verts.end(),
                                 [&](Vertex v) { return set_contains(h, v); }))
                    continue;
                // every other selected apex must be anticomplete to the route
                bool private_route = true;
                for (Vertex z : out.apex_ids) {
                    if (z == x || z == y) continue;
                    for (Vertex w : verts)
                        if (c.host.has_edge(z, w)) {
                            private_route = false;
                            break;
                        }
                    if (!private_route) break;
                }
                if (private_route) {
                    linked = true;
                    break;
                }
            }
            if (linked) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        }
    out.graph = Graph::from_edges(static_cast<int>(out.apex_ids.size()), edges);
    return out;
}

namespace {

// Enumerate size-k multisets of {0..m-1} as sorted vectors.
bool next_multiset(std::vector<int>& pick, int m) {
    int k = static_cast<int>(pick.size());
    for (int i = k - 1; i >= 0; --i) {
        if (pick[static_cast<size_t>(i)] + 1 < m) {
            int v = pick[static_cast<size_t>(i)] + 1;
            for (int j = i; j < k; ++j) pick[static_cast<size_t>(j)] = v;
            return true;
        }
    }
    return false;
}

}  // namespace

StructureReport apex_contraction_structure(const Constellation& c, const VertexSet& h,
                                           std::int64_t node_budget) {
    StructureReport rep;
    auto sub = induced_subgraph(c.host, h);
    if (!has_no_long_cycle(sub.graph)) {
        rep.failure = "selection induces a cycle on four or more vertices";
        return rep;
    }
    if (!is_ample(c, 1).ok) {
        rep.failure = "constellation is not ample";
        return rep;
    }
    std::vector<int> local_id(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t i = 0; i < sub.original_id.size(); ++i)
        local_id[static_cast<size_t>(sub.original_id[i])] = static_cast<int>(i);
    VertexSet apex_local;
    for (Vertex v : h)
        if (set_contains(c.apex, v)) apex_local.push_back(local_id[static_cast<size_t>(v)]);
    apex_local = make_vertex_set(apex_local);
    if (apex_local.empty()) {
        rep.failure = "selection contains no apex vertex";
        return rep;
    }

    // star-contraction condition: selected apexes pairwise at distance >= 3
    // within the selection
    rep.star_ok = true;
    for (size_t i = 0; i < apex_local.size() && rep.star_ok; ++i) {
        auto dist = bfs_distances(sub.graph, apex_local[i]);
        for (size_t j = i + 1; j < apex_local.size(); ++j) {
            int d = dist[static_cast<size_t>(apex_local[j])];
            if (d >= 0 && d < 3) {
                rep.star_ok = false;
                rep.star_violation = {sub.original_id[static_cast<size_t>(apex_local[i])],
                                      sub.original_id[static_cast<size_t>(apex_local[j])]};
                break;
            }
        }
    }
    if (!rep.star_ok) {
        rep.failure = "selected apexes are not pairwise at distance >= 3 in the selection";
        return rep;
    }

    rep.contracted = x_contraction(sub.graph, apex_local).graph;
    rep.aux = aux_graph(c, h);

    // J must be a subdivision of the aux graph plus some pendant leaves;
    // try leaf counts in increasing order and take the first witness
    const Graph& j_graph = rep.contracted;
    const int base_n = rep.aux.graph.vertex_count();
    int max_extra = j_graph.vertex_count() - base_n;
    for (int k = 0; k <= max_extra; ++k) {
        std::vector<int> pick(static_cast<size_t>(k), 0);
        bool more = true;
        while (more) {
            std::vector<std::pair<Vertex, Vertex>> edges = rep.aux.graph.edges();
            for (int i = 0; i < k; ++i)
                edges.push_back({pick[static_cast<size_t>(i)], base_n + i});
            Graph extended = Graph::from_edges(base_n + k, edges);
            SubdivisionOptions opts;
            opts.node_budget = node_budget;
            opts.spanning = true;  // J must equal the subdivision, not just contain one
            auto search = find_induced_subdivision(j_graph, extended, opts);
            if (search.status == SearchStatus::BudgetExceeded) {
                rep.failure = "structure witness search exceeded its budget";
                return rep;
            }
            if (search.status == SearchStatus::Found) {
                rep.leaf_attachments = pick;
                rep.subdivision_witness = search.witness;
                rep.ok = true;
                return rep;
            }
            more = k > 0 && next_multiset(pick, base_n);
        }
        if (k == 0 && max_extra == 0) break;
    }
    rep.failure = "no leaf-extension of the aux graph has J as a subdivision";
    return rep;
}

BandwidthReport order_bandwidth_bound(const Constellation& c, const VertexSet& h,
                                      const ApexOrder& order) {
    if (!is_apex_order(c, order))
        throw std::invalid_argument("order is not a permutation of the apex set");
    BandwidthReport rep;
    rep.aux = aux_graph(c, h);
    std::vector<int> host_rank(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t i = 0; i < order.size(); ++i)
        host_rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    // enumeration of the selected apexes induced by the order
    std::vector<int> by_rank(rep.aux.apex_ids.size());
    for (size_t i = 0; i < rep.aux.apex_ids.size(); ++i) by_rank[i] = static_cast<int>(i);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        return host_rank[static_cast<size_t>(rep.aux.apex_ids[static_cast<size_t>(a)])] <
               host_rank[static_cast<size_t>(rep.aux.apex_ids[static_cast<size_t>(b)])];
    });
    rep.ranks.assign(rep.aux.apex_ids.size(), 0);
    for (size_t pos = 0; pos < by_rank.size(); ++pos)
        rep.ranks[static_cast<size_t>(by_rank[pos])] = static_cast<int>(pos);
    rep.max_gap = 0;
    for (auto [u, v] : rep.aux.graph.edges())
        rep.max_gap = std::max(
            rep.max_gap, std::abs(rep.ranks[static_cast<size_t>(u)] - rep.ranks[static_cast<size_t>(v)]));
    return rep;
}

}  // namespace constel
