#include "fixtures.hpp"

#include <stdexcept>

namespace constel::fixtures {

Constellation spaced_three_by_three() {
    // apexes 0,1,2; paths of 7 vertices; apex j attached at path positions
    // 0, 2, 4 respectively
    std::vector<std::pair<Vertex, Vertex>> edges;
    Constellation c;
    c.apex = {0, 1, 2};
    for (int p = 0; p < 3; ++p) {
        int base = 3 + 7 * p;
        std::vector<Vertex> path;
        for (int t = 0; t < 7; ++t) {
            path.push_back(base + t);
            if (t + 1 < 7) edges.push_back({base + t, base + t + 1});
        }
        edges.push_back({0, base + 0});
        edges.push_back({1, base + 2});
        edges.push_back({2, base + 4});
        c.paths.push_back(std::move(path));
    }
    c.host = Graph::from_edges(3 + 21, edges);
    return c;
}

Constellation blocky_four_by_one() {
    // one 8-vertex path; vertices 0..2 see apex 1, 3..4 apex 2, 5 apex 3,
    // 6..7 apex 4
    std::vector<std::pair<Vertex, Vertex>> edges;
    Constellation c;
    c.apex = {0, 1, 2, 3};
    std::vector<Vertex> path;
    const int blocks[8] = {0, 0, 0, 1, 1, 2, 3, 3};
    for (int t = 0; t < 8; ++t) {
        path.push_back(4 + t);
        if (t + 1 < 8) edges.push_back({4 + t, 4 + t + 1});
        edges.push_back({blocks[t], 4 + t});
    }
    c.paths.push_back(std::move(path));
    c.host = Graph::from_edges(12, edges);
    return c;
}

Constellation star_witness_instance() {
    // Apexes 0..7 (order position = id). Three long paths L5, L6, L7 of five
    // vertices each: apex 7 sits at positions 0 and 4, the path's designated
    // leaf apex (4, 5 or 6) at positions 2 and 4, everyone else at position
    // 4 only. Every route between two apexes other than 7 runs through the
    // shared position-4 vertex, which all apexes see, so the natural order
    // is interrupted; the route 7 - p0 p1 p2 - leaf is private to its path.
    // Two singleton paths lift every apex degree to at least 4.
    std::vector<std::pair<Vertex, Vertex>> edges;
    Constellation c;
    for (int i = 0; i < 8; ++i) c.apex.push_back(i);
    int next = 8;
    for (int leaf = 4; leaf <= 6; ++leaf) {
        std::vector<Vertex> path;
        for (int t = 0; t < 5; ++t) {
            path.push_back(next + t);
            if (t + 1 < 5) edges.push_back({next + t, next + t + 1});
        }
        edges.push_back({7, next + 0});
        edges.push_back({7, next + 4});
        edges.push_back({leaf, next + 2});
        for (int j = 0; j < 7; ++j) edges.push_back({j, next + 4});
        next += 5;
        c.paths.push_back(std::move(path));
    }
    for (int k = 0; k < 2; ++k) {
        std::vector<Vertex> path{next};
        for (int j = 0; j < 8; ++j) edges.push_back({j, next});
        ++next;
        c.paths.push_back(std::move(path));
    }
    c.host = Graph::from_edges(next, edges);
    if (!validate(c).ok) throw std::logic_error("star_witness_instance failed validation");
    if (!is_interrupted(c, natural_order(c)).ok)
        throw std::logic_error("star_witness_instance is not interrupted");
    return c;
}

std::vector<Constellation> small_zigzag_corpus() {
    std::vector<Constellation> out;
    out.push_back(zigzag_graph(2, 1));
    out.push_back(zigzag_graph(3, 1));
    out.push_back(zigzag_graph(4, 1));
    return out;
}

}  // namespace constel::fixtures
