#include "constel/subdivision.hpp"

#include <algorithm>
#include <set>

namespace constel {

namespace {

enum class Step { Found, Exhausted, Abort };

struct Searcher {
    const Graph& g;
    const Graph& pattern;
    const SubdivisionOptions& opts;
    std::vector<std::pair<Vertex, Vertex>> pattern_edges;
    std::vector<Vertex> branch_image;
    std::vector<bool> used;
    std::vector<std::vector<Vertex>> edge_paths;
    std::optional<SubdivisionWitness> found;
    std::int64_t nodes = 0;

    Searcher(const Graph& host, const Graph& pat, const SubdivisionOptions& o)
        : g(host), pattern(pat), opts(o), pattern_edges(pat.edges()),
          branch_image(static_cast<size_t>(pat.vertex_count()), -1),
          used(static_cast<size_t>(host.vertex_count()), false),
          edge_paths(pattern_edges.size()) {}

    bool tick() { return ++nodes <= opts.node_budget; }

    // z's neighbors among used vertices, excluding `except`.
    void used_neighbors(Vertex z, Vertex except, std::vector<Vertex>& out) const {
        out.clear();
        for (Vertex w : g.neighbors(z))
            if (used[static_cast<size_t>(w)] && w != except) out.push_back(w);
    }

    Step assign_branch(int k) {
        if (k == pattern.vertex_count()) return realize_edge(0);
        for (Vertex h = 0; h < g.vertex_count(); ++h) {
            if (used[static_cast<size_t>(h)]) continue;
            if (!tick()) return Step::Abort;
            if (g.degree(h) < pattern.degree(k)) continue;
            if (g.degree(h) < opts.min_branch_degree) continue;
            bool ok = true;
            for (int k2 = 0; k2 < k && ok; ++k2) {
                if (g.has_edge(h, branch_image[static_cast<size_t>(k2)])) {
                    // adjacency between branch images is only legal as a
                    // length-1 realization of a pattern edge
                    if (opts.proper || !pattern.has_edge(k, k2)) ok = false;
                }
            }
            if (!ok) continue;
            branch_image[static_cast<size_t>(k)] = h;
            used[static_cast<size_t>(h)] = true;
            Step r = assign_branch(k + 1);
            used[static_cast<size_t>(h)] = false;
            branch_image[static_cast<size_t>(k)] = -1;
            if (r != Step::Exhausted) return r;
        }
        return Step::Exhausted;
    }

    Step realize_edge(size_t ei) {
        if (ei == pattern_edges.size()) {
            if (opts.spanning) {
                for (bool b : used)
                    if (!b) return Step::Exhausted;
            }
            found = SubdivisionWitness{branch_image, edge_paths};  // snapshot before unwind
            return Step::Found;
        }
        auto [u, v] = pattern_edges[ei];
        Vertex a = branch_image[static_cast<size_t>(u)];
        Vertex b = branch_image[static_cast<size_t>(v)];
        if (g.has_edge(a, b)) {
            edge_paths[ei] = {a, b};
            Step r = realize_edge(ei + 1);
            if (r != Step::Exhausted) return r;
            edge_paths[ei].clear();
            return Step::Exhausted;
        }
        edge_paths[ei] = {a};
        Step r = extend(ei, b);
        edge_paths[ei].clear();
        return r;
    }

    Step extend(size_t ei, Vertex target) {
        Vertex last = edge_paths[ei].back();
        std::vector<Vertex> blockers;
        for (Vertex z : g.neighbors(last)) {
            if (used[static_cast<size_t>(z)]) continue;
            if (!tick()) return Step::Abort;
            used_neighbors(z, last, blockers);
            if (blockers.empty()) {
                // interior vertex not yet touching the target: extend
                edge_paths[ei].push_back(z);
                used[static_cast<size_t>(z)] = true;
                Step r = extend(ei, target);
                used[static_cast<size_t>(z)] = false;
                edge_paths[ei].pop_back();
                if (r != Step::Exhausted) return r;
            } else if (blockers.size() == 1 && blockers[0] == target) {
                // z closes the path
                edge_paths[ei].push_back(z);
                edge_paths[ei].push_back(target);
                used[static_cast<size_t>(z)] = true;
                Step r = realize_edge(ei + 1);
                used[static_cast<size_t>(z)] = false;
                edge_paths[ei].pop_back();
                edge_paths[ei].pop_back();
                if (r != Step::Exhausted) return r;
            }
        }
        return Step::Exhausted;
    }
};

}  // namespace

SubdivisionSearch find_induced_subdivision(const Graph& g, const Graph& pattern,
                                           const SubdivisionOptions& opts) {
    SubdivisionSearch result;
    if (pattern.vertex_count() > g.vertex_count()) {
        result.status = SearchStatus::NotFound;
        return result;
    }
    Searcher s(g, pattern, opts);
    Step r = s.assign_branch(0);
    result.nodes = s.nodes;
    switch (r) {
        case Step::Found:
            result.status = SearchStatus::Found;
            result.witness = std::move(s.found);
            break;
        case Step::Exhausted:
            result.status = SearchStatus::NotFound;
            break;
        case Step::Abort:
            result.status = SearchStatus::BudgetExceeded;
            break;
    }
    return result;
}

bool check_subdivision_witness(const Graph& g, const Graph& pattern,
                               const SubdivisionWitness& w, bool proper) {
    auto pattern_edges = pattern.edges();
    if (w.branch_image.size() != static_cast<size_t>(pattern.vertex_count())) return false;
    if (w.edge_paths.size() != pattern_edges.size()) return false;
    std::set<Vertex> model;
    for (Vertex h : w.branch_image) {
        if (h < 0 || h >= g.vertex_count()) return false;
        if (!model.insert(h).second) return false;
    }
    std::set<std::pair<Vertex, Vertex>> path_edges;
    for (size_t ei = 0; ei < pattern_edges.size(); ++ei) {
        auto [u, v] = pattern_edges[ei];
        const auto& path = w.edge_paths[ei];
        if (path.size() < 2) return false;
        if (proper && path.size() < 3) return false;
        if (path.front() != w.branch_image[static_cast<size_t>(u)]) return false;
        if (path.back() != w.branch_image[static_cast<size_t>(v)]) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (!g.has_edge(path[i], path[i + 1])) return false;
            Vertex x = std::min(path[i], path[i + 1]);
            Vertex y = std::max(path[i], path[i + 1]);
            path_edges.insert({x, y});
        }
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (!model.insert(path[i]).second) return false;  // interiors pairwise disjoint
    }
    // Induced: within the model, exactly the path edges exist.
    std::vector<Vertex> verts(model.begin(), model.end());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            bool host_edge = g.has_edge(verts[i], verts[j]);
            bool allowed = path_edges.count({verts[i], verts[j]}) > 0;
            if (host_edge != allowed) return false;
        }
    return true;
}

}  // namespace constel
