#include "constel/generators.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "constel/sequences.hpp"

namespace constel {

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.push_back({i, s + j});
    return Graph::from_edges(s + t, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, edges);
}

Graph binary_tree(int r) {
    if (r < 1) throw std::invalid_argument("binary_tree: r must be >= 1");
    int n = (1 << (r + 1)) - 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        if (2 * i + 1 < n) edges.push_back({i, 2 * i + 1});
        if (2 * i + 2 < n) edges.push_back({i, 2 * i + 2});
    }
    return Graph::from_edges(n, edges);
}

Graph wall(int r) {
    if (r < 1) throw std::invalid_argument("wall: r must be >= 1");
    const int rows = r + 1;
    const int cols = 2 * r + 2;
    auto id = [&](int row, int col) { return row * cols + col; };
    std::set<std::pair<int, int>> edges;
    for (int row = 0; row < rows; ++row)
        for (int col = 0; col + 1 < cols; ++col) edges.insert({id(row, col), id(row, col + 1)});
    for (int row = 0; row + 1 < rows; ++row)
        for (int col = 0; col < cols; ++col)
            if ((row + col) % 2 == 0) edges.insert({id(row, col), id(row + 1, col)});
    // trim the two degree-1 corners and relabel densely
    std::vector<int> degree(static_cast<size_t>(rows * cols), 0);
    for (auto [u, v] : edges) {
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    std::vector<int> new_id(static_cast<size_t>(rows * cols), -1);
    int next = 0;
    for (int v = 0; v < rows * cols; ++v)
        if (degree[static_cast<size_t>(v)] >= 2) new_id[static_cast<size_t>(v)] = next++;
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [u, v] : edges)
        if (new_id[static_cast<size_t>(u)] >= 0 && new_id[static_cast<size_t>(v)] >= 0)
            kept.push_back({new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]});
    return Graph::from_edges(next, kept);
}

Constellation zigzag_graph(int n, int l) {
    if (n < 2) throw std::invalid_argument("zigzag_graph: n must be >= 2");
    if (l < 1) throw std::invalid_argument("zigzag_graph: l must be >= 1");
    IndexSequence z = zigzag_sequence(n);
    const int len = static_cast<int>(z.size());
    std::vector<std::pair<Vertex, Vertex>> edges;
    Constellation c;
    for (int copy = 0; copy < l; ++copy) {
        int base = n + copy * len;
        std::vector<Vertex> path;
        for (int j = 0; j < len; ++j) {
            path.push_back(base + j);
            if (j + 1 < len) edges.push_back({base + j, base + j + 1});
            edges.push_back({z[static_cast<size_t>(j)] - 1, base + j});
        }
        c.paths.push_back(std::move(path));
    }
    c.host = Graph::from_edges(n + l * len, edges);
    for (int i = 0; i < n; ++i) c.apex.push_back(i);
    return c;
}

Constellation aligned_constellation(int s, int l, int reps) {
    if (s < 1 || l < 1 || reps < 1)
        throw std::invalid_argument("aligned_constellation: all parameters must be >= 1");
    const int len = s * reps;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Constellation c;
    for (int p = 0; p < l; ++p) {
        int base = s + p * len;
        std::vector<Vertex> path;
        for (int t = 0; t < len; ++t) {
            path.push_back(base + t);
            if (t + 1 < len) edges.push_back({base + t, base + t + 1});
            edges.push_back({t / reps, base + t});
        }
        c.paths.push_back(std::move(path));
    }
    c.host = Graph::from_edges(s + l * len, edges);
    for (int i = 0; i < s; ++i) c.apex.push_back(i);
    return c;
}

namespace {

int valuation2(int t) {
    int v = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++v;
    }
    return v;
}

}  // namespace

OccultationResult occultation(int s, int c, bool ample) {
    if (s < 1) throw std::invalid_argument("occultation: s must be >= 1");
    if (c < 2) throw std::invalid_argument("occultation: spacing must be >= 2");
    const int len = c * (1 << s);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Vertex> path;
    for (int t = 1; t <= len; ++t) {
        path.push_back(s + t - 1);
        if (t < len) edges.push_back({s + t - 1, s + t});
        for (int j = 1; j <= s; ++j) {
            int step = 1 << (s - j);
            bool attach = ample ? valuation2(t) == s - j : t % step == 0;
            if (attach) edges.push_back({j - 1, s + t - 1});
        }
    }
    Constellation result;
    result.host = Graph::from_edges(s + len, edges);
    for (int i = 0; i < s; ++i) result.apex.push_back(i);
    result.paths.push_back(std::move(path));
    ApexOrder order = result.apex;

    auto valid = validate(result);
    if (!valid.ok) throw std::logic_error("occultation: generated instance failed validation");
    if (!is_interrupted(result, order).ok)
        throw std::logic_error("occultation: generated instance is not interrupted");
    if (ample && !is_ample(result, 1).ok)
        throw std::logic_error("occultation: generated instance is not ample");
    return {std::move(result), std::move(order)};
}

Graph leaf_extension(const Graph& base,
                     const std::vector<std::pair<Vertex, Vertex>>& attachments) {
    const int n = base.vertex_count();
    std::set<Vertex> leaves;
    auto edges = base.edges();
    for (auto [leaf, anchor] : attachments) {
        if (leaf < n) throw std::invalid_argument("leaf id collides with a base vertex");
        if (anchor < 0 || anchor >= n)
            throw std::invalid_argument("attachment point " + std::to_string(anchor) +
                                        " not in base");
        if (!leaves.insert(leaf).second)
            throw std::invalid_argument("leaf " + std::to_string(leaf) +
                                        " attached more than once");
        edges.push_back({anchor, leaf});
    }
    int top = n;
    for (Vertex leaf : leaves) top = std::max(top, leaf + 1);
    for (Vertex leaf = n; leaf < top; ++leaf)
        if (!leaves.count(leaf))
            throw std::invalid_argument("leaf ids must be contiguous from the base size");
    return Graph::from_edges(top, edges);
}

Graph leaf_extension(const Graph& base, const std::vector<Vertex>& attach_points) {
    std::vector<std::pair<Vertex, Vertex>> attachments;
    int next = base.vertex_count();
    for (Vertex anchor : attach_points) attachments.push_back({next++, anchor});
    return leaf_extension(base, attachments);
}

}  // namespace constel
