#include "constel/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace constel {

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;  // set semantics
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    g.m_ = static_cast<int>(seen.size());
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool is_valid_vertex_set(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (v < 0 || v >= g.vertex_count()) return false;
    return std::is_sorted(x.begin(), x.end());
}

bool set_contains(const VertexSet& x, Vertex v) {
    return std::binary_search(x.begin(), x.end(), v);
}

RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) +
                                    " not in host");
    VertexSet xs = make_vertex_set(x);
    std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < xs.size(); ++i) new_id[xs[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : xs)
        for (Vertex v : g.neighbors(u))
            if (u < v && new_id[v] >= 0) edges.emplace_back(new_id[u], new_id[v]);
    return {Graph::from_edges(static_cast<int>(xs.size()), edges), xs};
}

bool is_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (Vertex v : x)
        if (set_contains(y, v)) return false;
    for (Vertex u : x)
        for (Vertex v : g.neighbors(u))
            if (set_contains(y, v)) return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    VertexSet all(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<size_t>(i)] = i;
    return components_within(g, all);
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& x) {
    std::vector<bool> in_x(static_cast<size_t>(g.vertex_count()), false);
    for (Vertex v : x) in_x[static_cast<size_t>(v)] = true;
    std::vector<bool> visited(static_cast<size_t>(g.vertex_count()), false);
    std::vector<VertexSet> result;
    for (Vertex s : x) {
        if (visited[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{s};
        visited[static_cast<size_t>(s)] = true;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (in_x[static_cast<size_t>(w)] && !visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    // x is sorted, so components already appear by minimum id
    return result;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{src};
    dist[static_cast<size_t>(src)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

LineGraphResult line_graph(const Graph& g) {
    auto edge_list = g.edges();
    std::map<std::pair<Vertex, Vertex>, int> index;
    for (size_t i = 0; i < edge_list.size(); ++i) index[edge_list[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> lg_edges;
    for (size_t i = 0; i < edge_list.size(); ++i)
        for (size_t j = i + 1; j < edge_list.size(); ++j) {
            auto [a, b] = edge_list[i];
            auto [c, d] = edge_list[j];
            if (a == c || a == d || b == c || b == d)
                lg_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return {Graph::from_edges(static_cast<int>(edge_list.size()), lg_edges), edge_list};
}

SubdivisionResult subdivide(
    const Graph& g,
    const std::vector<std::pair<std::pair<Vertex, Vertex>, int>>& lengths) {
    std::map<std::pair<Vertex, Vertex>, int> count;
    for (auto [e, d] : lengths) {
        auto [u, v] = e;
        if (u > v) std::swap(u, v);
        if (d < 0) throw std::invalid_argument("negative subdivision count");
        count[{u, v}] = d;
    }
    auto edge_list = g.edges();
    for (auto& e : edge_list)
        if (!count.count(e))
            throw std::invalid_argument("subdivide: missing length for edge (" +
                                        std::to_string(e.first) + "," + std::to_string(e.second) +
                                        ")");
    int next = g.vertex_count();
    bool proper = true;
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto& e : edge_list) {
        int d = count[e];
        if (d == 0) {
            out.push_back(e);
            proper = false;
            continue;
        }
        Vertex prev = e.first;
        for (int k = 0; k < d; ++k) {
            out.emplace_back(prev, next);
            prev = next++;
        }
        out.emplace_back(prev, e.second);
    }
    if (edge_list.empty()) proper = true;
    return {Graph::from_edges(next, out), proper};
}

SubdivisionResult subdivide_uniform(const Graph& g, int d) {
    std::vector<std::pair<std::pair<Vertex, Vertex>, int>> lengths;
    for (auto& e : g.edges()) lengths.push_back({e, d});
    return subdivide(g, lengths);
}

ContractionResult x_contraction(const Graph& g, const VertexSet& x) {
    if (!is_valid_vertex_set(g, x)) throw std::out_of_range("x_contraction: invalid vertex set");
    const int n = g.vertex_count();
    // Merge classes: connected components of the subgraph formed by all
    // edges meeting x.
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (Vertex u : x)
        for (Vertex w : g.neighbors(u)) unite(u, w);
    // Dense new ids in order of each class's minimum original vertex.
    std::vector<int> new_id(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int root = find(v);
        if (new_id[static_cast<size_t>(root)] < 0) new_id[static_cast<size_t>(root)] = next++;
    }
    std::vector<Vertex> vmap(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) vmap[static_cast<size_t>(v)] = new_id[static_cast<size_t>(find(v))];
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [u, v] : g.edges()) {
        int a = vmap[static_cast<size_t>(u)], b = vmap[static_cast<size_t>(v)];
        if (a != b) out.emplace_back(a, b);
    }
    return {Graph::from_edges(next, out), vmap};
}

std::variant<ContractionResult, DistanceViolation> star_contraction(const Graph& g,
                                                                    const VertexSet& x) {
    for (size_t i = 0; i < x.size(); ++i) {
        auto dist = bfs_distances(g, x[i]);
        for (size_t j = i + 1; j < x.size(); ++j) {
            int d = dist[static_cast<size_t>(x[j])];
            if (d >= 0 && d < 3) return DistanceViolation{x[i], x[j], d};
        }
    }
    return x_contraction(g, x);
}

bool is_induced_path_sequence(const Graph& g, const std::vector<Vertex>& seq) {
    std::set<Vertex> seen(seq.begin(), seq.end());
    if (seen.size() != seq.size()) return false;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j) {
            bool adjacent = g.has_edge(seq[i], seq[j]);
            if (j == i + 1 && !adjacent) return false;
            if (j > i + 1 && adjacent) return false;
        }
    return true;
}

std::optional<std::vector<Vertex>> path_order(const Graph& g, const VertexSet& x) {
    if (x.empty()) return std::vector<Vertex>{};
    auto comps = components_within(g, x);
    if (comps.size() != 1) return std::nullopt;
    std::vector<int> deg_in(x.size(), 0);
    std::vector<Vertex> ends;
    for (size_t i = 0; i < x.size(); ++i) {
        int d = 0;
        for (Vertex w : g.neighbors(x[i]))
            if (set_contains(x, w)) ++d;
        deg_in[i] = d;
        if (d > 2) return std::nullopt;
        if (d <= 1) ends.push_back(x[i]);
    }
    if (x.size() == 1) return std::vector<Vertex>{x[0]};
    if (ends.size() != 2) return std::nullopt;  // a cycle, or not connected as a path
    std::vector<Vertex> order{std::min(ends[0], ends[1])};
    Vertex prev = -1;
    while (order.size() < x.size()) {
        Vertex cur = order.back();
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur))
            if (w != prev && set_contains(x, w)) {
                if (next != -1) return std::nullopt;
                next = w;
            }
        if (next == -1) return std::nullopt;
        prev = cur;
        order.push_back(next);
    }
    if (!is_induced_path_sequence(g, order)) return std::nullopt;
    return order;
}

namespace {

// Blocks via DFS lowpoints; collects the vertex set of each block.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), -1) {}

    void dfs(Vertex u, Vertex parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        bool skipped_parent = false;
        for (Vertex w : g.neighbors(u)) {
            if (w == parent && !skipped_parent) {
                skipped_parent = true;
                continue;
            }
            if (disc[static_cast<size_t>(w)] < 0) {
                edge_stack.push_back({u, w});
                dfs(w, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)]) {
                    std::vector<std::pair<Vertex, Vertex>> block;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e.first == u && e.second == w) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
                edge_stack.push_back({u, w});
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
            }
        }
    }
};

}  // namespace

bool has_no_long_cycle(const Graph& g) {
    BlockFinder finder(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (finder.disc[static_cast<size_t>(v)] < 0) finder.dfs(v, -1);
    for (auto& block : finder.blocks) {
        std::set<Vertex> verts;
        for (auto [u, v] : block) {
            verts.insert(u);
            verts.insert(v);
        }
        if (block.size() == 1) continue;                       // bridge
        if (verts.size() == 3 && block.size() == 3) continue;  // triangle
        return false;
    }
    return true;
}

}  // namespace constel
