#include "constel/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace constel {

std::string model_violation_to_string(const ModelViolation& v) {
    switch (v.kind) {
        case ModelViolationKind::Overlap:
            return "Overlap(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
        case ModelViolationKind::Disconnected:
            return std::string("Disconnected(") + v.side + "," + std::to_string(v.a) + ")";
        case ModelViolationKind::SameSideEdge:
            return std::string("SameSideEdge(") + v.side + "," + std::to_string(v.a) + "," +
                   std::to_string(v.b) + ")";
        case ModelViolationKind::MissingCrossEdge:
            return "MissingCrossEdge(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
        case ModelViolationKind::VertexOutOfRange:
            return "VertexOutOfRange(" + std::to_string(v.a) + ")";
    }
    return "Unknown";
}

ModelValidation verify_model(const InducedModel& m) {
    ModelValidation res;
    const int n = m.host.vertex_count();
    auto all_sets = m.a_sets;
    all_sets.insert(all_sets.end(), m.b_sets.begin(), m.b_sets.end());
    bool ids_ok = true;
    for (auto& s : all_sets)
        for (Vertex v : s)
            if (v < 0 || v >= n) {
                res.violations.push_back({ModelViolationKind::VertexOutOfRange, '-', v, -1});
                ids_ok = false;
            }
    if (!ids_ok) return res;

    for (size_t i = 0; i < all_sets.size(); ++i)
        for (size_t j = i + 1; j < all_sets.size(); ++j) {
            VertexSet a = make_vertex_set(all_sets[i]);
            VertexSet b = make_vertex_set(all_sets[j]);
            std::vector<Vertex> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                res.violations.push_back(
                    {ModelViolationKind::Overlap, '-', static_cast<int>(i), static_cast<int>(j)});
        }

    auto check_side = [&](const std::vector<VertexSet>& sets, char side) {
        for (size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].empty() || components_within(m.host, make_vertex_set(sets[i])).size() != 1)
                res.violations.push_back(
                    {ModelViolationKind::Disconnected, side, static_cast<int>(i), -1});
            for (size_t j = i + 1; j < sets.size(); ++j)
                if (!is_anticomplete(m.host, make_vertex_set(sets[i]), make_vertex_set(sets[j])))
                    res.violations.push_back({ModelViolationKind::SameSideEdge, side,
                                              static_cast<int>(i), static_cast<int>(j)});
        }
    };
    check_side(m.a_sets, 'A');
    check_side(m.b_sets, 'B');

    for (size_t i = 0; i < m.a_sets.size(); ++i)
        for (size_t j = 0; j < m.b_sets.size(); ++j)
            if (is_anticomplete(m.host, make_vertex_set(m.a_sets[i]), make_vertex_set(m.b_sets[j])))
                res.violations.push_back({ModelViolationKind::MissingCrossEdge, '-',
                                          static_cast<int>(i), static_cast<int>(j)});

    res.ok = res.violations.empty();
    return res;
}

bool is_linear(const InducedModel& m, ModelSide side) {
    auto linear_side = [&](const std::vector<VertexSet>& sets) {
        for (auto& s : sets)
            if (!path_order(m.host, make_vertex_set(s))) return false;
        return true;
    };
    switch (side) {
        case ModelSide::A: return linear_side(m.a_sets);
        case ModelSide::B: return linear_side(m.b_sets);
        case ModelSide::Both: return linear_side(m.a_sets) && linear_side(m.b_sets);
    }
    return false;
}

InducedModel transpose(const InducedModel& m) { return {m.host, m.b_sets, m.a_sets}; }

ContractedModel a_contraction(const InducedModel& m) {
    if (!verify_model(m).ok) throw std::invalid_argument("a_contraction: not a valid model");
    if (!is_linear(m, ModelSide::Both))
        throw std::invalid_argument("a_contraction: model must be linear on both sides");
    const int s = m.s();
    std::vector<int> vmap(static_cast<size_t>(m.host.vertex_count()), -1);
    for (int i = 0; i < s; ++i)
        for (Vertex v : m.a_sets[static_cast<size_t>(i)]) vmap[static_cast<size_t>(v)] = i;
    Constellation c;
    int next = s;
    for (auto& b : m.b_sets) {
        auto order = path_order(m.host, make_vertex_set(b));
        std::vector<Vertex> path;
        for (Vertex v : *order) {
            vmap[static_cast<size_t>(v)] = next;
            path.push_back(next++);
        }
        c.paths.push_back(std::move(path));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : m.host.edges()) {
        int a = vmap[static_cast<size_t>(u)], b = vmap[static_cast<size_t>(v)];
        if (a < 0 || b < 0 || a == b) continue;
        edges.push_back({a, b});
    }
    c.host = Graph::from_edges(next, edges);
    for (int i = 0; i < s; ++i) c.apex.push_back(i);
    auto check = validate(c);
    if (!check.ok) throw std::logic_error("a_contraction: result failed constellation validation");
    return {std::move(c), std::move(vmap)};
}

bool model_ample(const InducedModel& m, int d, ModelSide side) {
    switch (side) {
        case ModelSide::A: return is_ample(a_contraction(m).constellation, d).ok;
        case ModelSide::B: return is_ample(a_contraction(transpose(m)).constellation, d).ok;
        case ModelSide::Both:
            return model_ample(m, d, ModelSide::A) && model_ample(m, d, ModelSide::B);
    }
    return false;
}

namespace {

// Labels: 0 = unused, 1..s = A_i, s+1..s+t = B_j.
struct ModelSearcher {
    const Graph& g;
    int s, t;
    std::int64_t budget;
    std::int64_t nodes = 0;
    std::vector<int> label;
    int opened_a = 0, opened_b = 0;
    bool aborted = false;

    ModelSearcher(const Graph& host, int s_, int t_, std::int64_t b)
        : g(host), s(s_), t(t_), budget(b),
          label(static_cast<size_t>(host.vertex_count()), 0) {}

    bool same_side(int la, int lb) const {
        if (la == 0 || lb == 0) return false;
        return (la <= s) == (lb <= s);
    }

    bool assign(Vertex v) {
        if (v == g.vertex_count()) return complete_check();
        // not enough vertices left to open the remaining classes
        if (g.vertex_count() - v < (s - opened_a) + (t - opened_b)) return false;
        // classes must be opened in order by their smallest vertex
        int max_a = std::min(s, opened_a + 1);
        int max_b = std::min(t, opened_b + 1);
        for (int k = 0; k <= s + t; ++k) {
            int choice = (k == s + t) ? 0 : k + 1;  // leave "unused" for last
            if (++nodes > budget) {
                aborted = true;
                return false;
            }
            if (choice >= 1 && choice <= s && choice > max_a) continue;
            if (choice > s && choice - s > max_b) continue;
            // same-side adjacency across distinct classes is forbidden
            bool ok = true;
            if (choice != 0)
                for (Vertex w : g.neighbors(v)) {
                    if (w >= v) break;
                    int lw = label[static_cast<size_t>(w)];
                    if (lw != 0 && lw != choice && same_side(lw, choice)) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            label[static_cast<size_t>(v)] = choice;
            int old_a = opened_a, old_b = opened_b;
            if (choice >= 1 && choice <= s) opened_a = std::max(opened_a, choice);
            if (choice > s) opened_b = std::max(opened_b, choice - s);
            if (assign(v + 1)) return true;
            opened_a = old_a;
            opened_b = old_b;
            label[static_cast<size_t>(v)] = 0;
            if (aborted) return false;
        }
        return false;
    }

    bool complete_check() {
        if (opened_a < s || opened_b < t) return false;
        std::vector<VertexSet> sets(static_cast<size_t>(s + t));
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (label[static_cast<size_t>(v)] != 0)
                sets[static_cast<size_t>(label[static_cast<size_t>(v)] - 1)].push_back(v);
        for (auto& st : sets)
            if (st.empty() || components_within(g, st).size() != 1) return false;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j)
                if (is_anticomplete(g, sets[static_cast<size_t>(i)],
                                    sets[static_cast<size_t>(s + j)]))
                    return false;
        return true;
    }
};

}  // namespace

ModelSearch find_bipartite_model(const Graph& g, int s, int t, std::int64_t node_budget) {
    if (s < 1 || t < 1) throw std::invalid_argument("model shape must be at least (1,1)");
    ModelSearch out;
    ModelSearcher searcher(g, s, t, node_budget);
    bool found = searcher.assign(0);
    out.nodes = searcher.nodes;
    if (found) {
        InducedModel m;
        m.host = g;
        m.a_sets.resize(static_cast<size_t>(s));
        m.b_sets.resize(static_cast<size_t>(t));
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            int l = searcher.label[static_cast<size_t>(v)];
            if (l == 0) continue;
            if (l <= s)
                m.a_sets[static_cast<size_t>(l - 1)].push_back(v);
            else
                m.b_sets[static_cast<size_t>(l - s - 1)].push_back(v);
        }
        out.status = SearchStatus::Found;
        out.witness = std::move(m);
    } else {
        out.status = searcher.aborted ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
    }
    return out;
}

RouteComponentReport route_component_analysis(const InducedModel& m) {
    RouteComponentReport rep;
    if (!verify_model(m).ok) {
        rep.failure = "not a valid induced model";
        return rep;
    }
    if (!is_linear(m, ModelSide::Both)) {
        rep.failure = "model is not linear";
        return rep;
    }
    if (!model_ample(m, 2, ModelSide::Both)) {
        rep.failure = "model is not 2-ample";
        return rep;
    }
    std::vector<int> side_of(static_cast<size_t>(m.host.vertex_count()), -1);  // 0 = A, 1 = B
    std::vector<int> index_of(static_cast<size_t>(m.host.vertex_count()), -1);
    for (size_t i = 0; i < m.a_sets.size(); ++i)
        for (Vertex v : m.a_sets[i]) {
            side_of[static_cast<size_t>(v)] = 0;
            index_of[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    for (size_t j = 0; j < m.b_sets.size(); ++j)
        for (Vertex v : m.b_sets[j]) {
            side_of[static_cast<size_t>(v)] = 1;
            index_of[static_cast<size_t>(v)] = static_cast<int>(j);
        }
    // cross edges and the vertices they touch
    std::vector<bool> touched(static_cast<size_t>(m.host.vertex_count()), false);
    VertexSet in_model;
    for (Vertex v = 0; v < m.host.vertex_count(); ++v) {
        if (side_of[static_cast<size_t>(v)] < 0) continue;
        in_model.push_back(v);
        for (Vertex w : m.host.neighbors(v))
            if (side_of[static_cast<size_t>(w)] >= 0 &&
                side_of[static_cast<size_t>(w)] != side_of[static_cast<size_t>(v)])
                touched[static_cast<size_t>(v)] = true;
    }
    VertexSet active;
    for (Vertex v : in_model)
        if (touched[static_cast<size_t>(v)])
            active.push_back(v);
        else
            rep.isolated.push_back(v);
    rep.claim_holds = true;
    for (auto& comp : components_within(m.host, active)) {
        RouteComponent rc;
        rc.vertices = comp;
        std::set<int> ai, bj;
        for (Vertex v : comp) {
            if (side_of[static_cast<size_t>(v)] == 0) ai.insert(index_of[static_cast<size_t>(v)]);
            else bj.insert(index_of[static_cast<size_t>(v)]);
        }
        rc.a_indices.assign(ai.begin(), ai.end());
        rc.b_indices.assign(bj.begin(), bj.end());
        if (rc.a_indices.size() != 1 || rc.b_indices.size() != 1) {
            rep.claim_holds = false;
            rep.failure = "a component meets several branch sets on one side";
        }
        rep.comps.push_back(std::move(rc));
    }
    return rep;
}

}  // namespace constel
