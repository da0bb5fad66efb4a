#include "constel/constellation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace constel {

std::string violation_to_string(const Violation& v) {
    switch (v.kind) {
        case ViolationKind::ApexNotStable:
            return "ApexNotStable(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
        case ViolationKind::ComponentNotPath:
            return "ComponentNotPath(path " + std::to_string(v.a) + ")";
        case ViolationKind::PathNotComponent:
            return "PathNotComponent(path " + std::to_string(v.a) + ")";
        case ViolationKind::MissingNeighbor:
            return "MissingNeighbor(apex " + std::to_string(v.a) + ", path " + std::to_string(v.b) +
                   ")";
        case ViolationKind::VertexOutOfRange:
            return "VertexOutOfRange(" + std::to_string(v.a) + ")";
        case ViolationKind::CoverageMismatch:
            return "CoverageMismatch(" + std::to_string(v.a) + ")";
    }
    return "Unknown";
}

namespace {

// Shared invariant checks; `require_cover` additionally demands that apex
// and paths partition all of the host.
ValidationResult validate_impl(const Graph& host, const VertexSet& apex,
                               const std::vector<std::vector<Vertex>>& paths,
                               bool require_cover) {
    ValidationResult res;
    auto bad = [&](ViolationKind k, Vertex a, Vertex b = -1) {
        res.violations.push_back({k, a, b});
    };
    const int n = host.vertex_count();
    std::vector<int> owner(static_cast<size_t>(n), -2);  // -2 free, -1 apex, i path i
    bool ids_ok = true;
    auto claim = [&](Vertex v, int who) {
        if (v < 0 || v >= n) {
            bad(ViolationKind::VertexOutOfRange, v);
            ids_ok = false;
            return;
        }
        if (owner[static_cast<size_t>(v)] != -2) {
            bad(ViolationKind::CoverageMismatch, v);
            ids_ok = false;
            return;
        }
        owner[static_cast<size_t>(v)] = who;
    };
    for (Vertex v : apex) claim(v, -1);
    for (size_t i = 0; i < paths.size(); ++i)
        for (Vertex v : paths[i]) claim(v, static_cast<int>(i));
    if (!ids_ok) {
        res.ok = false;
        return res;
    }
    if (require_cover)
        for (Vertex v = 0; v < n; ++v)
            if (owner[static_cast<size_t>(v)] == -2) bad(ViolationKind::CoverageMismatch, v);

    for (size_t i = 0; i < apex.size(); ++i)
        for (size_t j = i + 1; j < apex.size(); ++j)
            if (host.has_edge(apex[i], apex[j]))
                bad(ViolationKind::ApexNotStable, apex[i], apex[j]);

    for (size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].empty() || !is_induced_path_sequence(host, paths[i])) {
            bad(ViolationKind::ComponentNotPath, static_cast<Vertex>(i));
            continue;
        }
        // a path must be a full component off the apex set: its vertices may
        // only reach the apex or the path itself
        bool component_ok = true;
        for (Vertex v : paths[i])
            for (Vertex w : host.neighbors(v)) {
                int o = owner[static_cast<size_t>(w)];
                if (o != -1 && o != static_cast<int>(i)) component_ok = false;
            }
        if (!component_ok) bad(ViolationKind::PathNotComponent, static_cast<Vertex>(i));
    }

    for (Vertex x : apex)
        for (size_t i = 0; i < paths.size(); ++i) {
            bool seen = false;
            for (Vertex w : host.neighbors(x))
                if (owner[static_cast<size_t>(w)] == static_cast<int>(i)) seen = true;
            if (!seen) bad(ViolationKind::MissingNeighbor, x, static_cast<Vertex>(i));
        }

    res.ok = res.violations.empty();
    return res;
}

}  // namespace

ValidationResult validate(const Graph& host, const VertexSet& apex,
                          const std::vector<std::vector<Vertex>>& paths) {
    return validate_impl(host, apex, paths, true);
}

ValidationResult validate(const Constellation& c) { return validate(c.host, c.apex, c.paths); }

ValidationResult validate_selection(const Graph& ambient, const SubSelection& sel) {
    return validate_impl(ambient, sel.apex, sel.paths, false);
}

RestrictedConstellation restrict_to(const Graph& ambient, const SubSelection& sel) {
    auto check = validate_selection(ambient, sel);
    if (!check.ok) {
        std::string msg = "selection is not a constellation:";
        for (auto& v : check.violations) msg += " " + violation_to_string(v);
        throw std::invalid_argument(msg);
    }
    VertexSet all = sel.apex;
    for (auto& p : sel.paths) all.insert(all.end(), p.begin(), p.end());
    all = make_vertex_set(all);
    auto sub = induced_subgraph(ambient, all);
    std::vector<int> new_id(static_cast<size_t>(ambient.vertex_count()), -1);
    for (size_t i = 0; i < sub.original_id.size(); ++i)
        new_id[static_cast<size_t>(sub.original_id[i])] = static_cast<int>(i);
    Constellation c;
    c.host = sub.graph;
    for (Vertex v : sel.apex) c.apex.push_back(new_id[static_cast<size_t>(v)]);
    c.apex = make_vertex_set(c.apex);
    for (auto& p : sel.paths) {
        std::vector<Vertex> q;
        for (Vertex v : p) q.push_back(new_id[static_cast<size_t>(v)]);
        c.paths.push_back(std::move(q));
    }
    return {std::move(c), sub.original_id};
}

std::vector<Vertex> Route::vertices(const Constellation& c) const {
    std::vector<Vertex> out{x};
    for (int p = lo; p <= hi; ++p) out.push_back(c.paths[static_cast<size_t>(path)][static_cast<size_t>(p)]);
    out.push_back(y);
    return out;
}

std::vector<Vertex> Route::interior(const Constellation& c) const {
    std::vector<Vertex> out;
    for (int p = lo; p <= hi; ++p) out.push_back(c.paths[static_cast<size_t>(path)][static_cast<size_t>(p)]);
    return out;
}

namespace {

// Positions (0-based) of x's neighbors along path `p` of c.
std::vector<int> attachment_positions(const Constellation& c, Vertex x, int p) {
    std::vector<int> out;
    const auto& path = c.paths[static_cast<size_t>(p)];
    for (size_t i = 0; i < path.size(); ++i)
        if (c.host.has_edge(x, path[i])) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

std::vector<Route> enumerate_routes(const Constellation& c, Vertex x, Vertex y) {
    if (!set_contains(c.apex, x)) throw std::invalid_argument("route end not in apex set");
    if (!set_contains(c.apex, y)) throw std::invalid_argument("route end not in apex set");
    if (x == y) throw std::invalid_argument("route ends must be distinct");
    std::vector<Route> routes;
    if (c.host.has_edge(x, y)) return routes;  // no induced path through a path interior
    for (int p = 0; p < c.path_count(); ++p) {
        auto ax = attachment_positions(c, x, p);
        auto ay = attachment_positions(c, y, p);
        if (ax.empty() || ay.empty()) continue;
        std::set<std::pair<int, int>> segments;
        // a segment [a..b] carries a route iff one end's attachments meet it
        // exactly at a and the other's exactly at b
        auto scan = [&](const std::vector<int>& left, const std::vector<int>& right) {
            for (size_t i = 0; i < left.size(); ++i) {
                int a = left[i];
                int next_left = (i + 1 < left.size()) ? left[i + 1]
                                                      : static_cast<int>(
                                                            c.paths[static_cast<size_t>(p)].size());
                auto it = std::lower_bound(right.begin(), right.end(), a);
                if (it == right.end()) continue;
                int b = *it;
                if (b < next_left) segments.insert({a, b});
            }
        };
        scan(ax, ay);
        scan(ay, ax);
        for (auto [a, b] : segments) {
            Route r;
            r.path = p;
            r.lo = a;
            r.hi = b;
            // orient: x attached at lo if lo is an x attachment position
            bool x_at_lo = std::binary_search(ax.begin(), ax.end(), a);
            r.x = x_at_lo ? x : y;
            r.y = x_at_lo ? y : x;
            routes.push_back(r);
        }
    }
    return routes;
}

std::vector<Route> enumerate_all_routes(const Constellation& c) {
    std::vector<Route> all;
    for (size_t i = 0; i < c.apex.size(); ++i)
        for (size_t j = i + 1; j < c.apex.size(); ++j) {
            auto rs = enumerate_routes(c, c.apex[i], c.apex[j]);
            all.insert(all.end(), rs.begin(), rs.end());
        }
    return all;
}

ApexOrder natural_order(const Constellation& c) { return c.apex; }

bool is_apex_order(const Constellation& c, const ApexOrder& order) {
    return make_vertex_set(order) == c.apex && order.size() == c.apex.size();
}

AmpleResult is_ample(const Constellation& c, int d) {
    if (d < 1) throw std::invalid_argument("ampleness parameter must be >= 1");
    for (size_t i = 0; i < c.apex.size(); ++i)
        for (size_t j = i + 1; j < c.apex.size(); ++j)
            for (const Route& r : enumerate_routes(c, c.apex[i], c.apex[j]))
                if (r.length() <= d + 1) return {false, r};
    return {true, std::nullopt};
}

namespace {

struct RouteTable {
    std::vector<Route> routes;
    std::vector<std::vector<Vertex>> avoiders;  // apexes with no neighbor in the route

    explicit RouteTable(const Constellation& c) {
        routes = enumerate_all_routes(c);
        avoiders.resize(routes.size());
        // per path/apex attachment positions for O(log) interval counting
        std::vector<std::vector<std::vector<int>>> att(
            c.paths.size(), std::vector<std::vector<int>>(c.apex.size()));
        for (size_t p = 0; p < c.paths.size(); ++p)
            for (size_t a = 0; a < c.apex.size(); ++a)
                att[p][a] = attachment_positions(c, c.apex[a], static_cast<int>(p));
        for (size_t ri = 0; ri < routes.size(); ++ri) {
            const Route& r = routes[ri];
            for (size_t a = 0; a < c.apex.size(); ++a) {
                Vertex z = c.apex[a];
                if (z == r.x || z == r.y) continue;
                const auto& pos = att[static_cast<size_t>(r.path)][a];
                auto lb = std::lower_bound(pos.begin(), pos.end(), r.lo);
                bool touches_interior = (lb != pos.end() && *lb <= r.hi);
                bool touches_end = c.host.has_edge(z, r.x) || c.host.has_edge(z, r.y);
                if (!touches_interior && !touches_end) avoiders[ri].push_back(z);
            }
        }
    }
};

std::vector<int> rank_of(const Constellation& c, const ApexOrder& order) {
    std::vector<int> rank(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    return rank;
}

OrderCheckResult check_interrupted(const Constellation& c, const RouteTable& table,
                                   const ApexOrder& order) {
    auto rank = rank_of(c, order);
    for (size_t ri = 0; ri < table.routes.size(); ++ri) {
        const Route& r = table.routes[ri];
        int later = std::max(rank[static_cast<size_t>(r.x)], rank[static_cast<size_t>(r.y)]);
        for (Vertex z : table.avoiders[ri])
            if (rank[static_cast<size_t>(z)] > later) {
                OrderCheckResult res;
                res.ok = false;
                res.order = order;
                res.route = r;
                res.witnesses = {z};
                return res;
            }
    }
    OrderCheckResult res;
    res.ok = true;
    res.order = order;
    return res;
}

OrderCheckResult check_zigzagged(const Constellation& c, const RouteTable& table, int q,
                                 const ApexOrder& order) {
    auto rank = rank_of(c, order);
    for (size_t ri = 0; ri < table.routes.size(); ++ri) {
        const Route& r = table.routes[ri];
        int a = rank[static_cast<size_t>(r.x)], b = rank[static_cast<size_t>(r.y)];
        if (a > b) std::swap(a, b);
        std::vector<Vertex> between;
        for (Vertex z : table.avoiders[ri]) {
            int rz = rank[static_cast<size_t>(z)];
            if (a < rz && rz < b) between.push_back(z);
        }
        if (static_cast<int>(between.size()) >= q) {
            OrderCheckResult res;
            res.ok = false;
            res.order = order;
            res.route = r;
            res.witnesses = between;
            return res;
        }
    }
    OrderCheckResult res;
    res.ok = true;
    res.order = order;
    return res;
}

OrderCheckResult check_mixed(const Constellation& c, const RouteTable& table, int q_minus, int q,
                             int q_plus, const ApexOrder& order) {
    auto rank = rank_of(c, order);
    for (size_t ri = 0; ri < table.routes.size(); ++ri) {
        const Route& r = table.routes[ri];
        int a = rank[static_cast<size_t>(r.x)], b = rank[static_cast<size_t>(r.y)];
        if (a > b) std::swap(a, b);
        std::vector<Vertex> before, between, after;
        for (Vertex z : table.avoiders[ri]) {
            int rz = rank[static_cast<size_t>(z)];
            if (rz < a)
                before.push_back(z);
            else if (rz < b)
                between.push_back(z);
            else
                after.push_back(z);
        }
        // a failing triple (Q-,Q,Q+) of avoiding apexes exists exactly when
        // each region holds at least the demanded count
        if (static_cast<int>(before.size()) >= q_minus &&
            static_cast<int>(between.size()) >= q && static_cast<int>(after.size()) >= q_plus) {
            OrderCheckResult res;
            res.ok = false;
            res.order = order;
            res.route = r;
            res.witnesses = before;
            res.witnesses.insert(res.witnesses.end(), between.begin(), between.end());
            res.witnesses.insert(res.witnesses.end(), after.begin(), after.end());
            return res;
        }
    }
    OrderCheckResult res;
    res.ok = true;
    res.order = order;
    return res;
}

constexpr size_t kSearchApexLimit = 8;

template <typename Eval>
OrderCheckResult search_orders(const Constellation& c, Eval eval) {
    if (c.apex.size() > kSearchApexLimit)
        throw std::invalid_argument("order search is limited to " +
                                    std::to_string(kSearchApexLimit) + " apex vertices");
    ApexOrder order = c.apex;  // sorted: permutations come out lexicographically
    OrderCheckResult last;
    do {
        OrderCheckResult res = eval(order);
        if (res.ok) return res;
        last = res;
    } while (std::next_permutation(order.begin(), order.end()));
    last.order = std::nullopt;  // no certifying order exists
    return last;
}

void require_order(const Constellation& c, const ApexOrder& order) {
    if (!is_apex_order(c, order))
        throw std::invalid_argument("order is not a permutation of the apex set");
}

}  // namespace

OrderCheckResult is_interrupted(const Constellation& c, const ApexOrder& order) {
    require_order(c, order);
    RouteTable table(c);
    return check_interrupted(c, table, order);
}

OrderCheckResult search_interrupted(const Constellation& c) {
    RouteTable table(c);
    return search_orders(c, [&](const ApexOrder& o) { return check_interrupted(c, table, o); });
}

OrderCheckResult is_zigzagged(const Constellation& c, int q, const ApexOrder& order) {
    if (q < 1) throw std::invalid_argument("zigzag parameter must be >= 1");
    require_order(c, order);
    RouteTable table(c);
    return check_zigzagged(c, table, q, order);
}

OrderCheckResult search_zigzagged(const Constellation& c, int q) {
    if (q < 1) throw std::invalid_argument("zigzag parameter must be >= 1");
    RouteTable table(c);
    return search_orders(c, [&](const ApexOrder& o) { return check_zigzagged(c, table, q, o); });
}

OrderCheckResult is_mixed(const Constellation& c, int q_minus, int q, int q_plus,
                          const ApexOrder& order) {
    if (q < 1) throw std::invalid_argument("mixed parameter q must be >= 1");
    if (q_minus < 0 || q_plus < 0) throw std::invalid_argument("q- and q+ must be >= 0");
    require_order(c, order);
    RouteTable table(c);
    return check_mixed(c, table, q_minus, q, q_plus, order);
}

OrderCheckResult search_mixed(const Constellation& c, int q_minus, int q, int q_plus) {
    if (q < 1) throw std::invalid_argument("mixed parameter q must be >= 1");
    if (q_minus < 0 || q_plus < 0) throw std::invalid_argument("q- and q+ must be >= 0");
    RouteTable table(c);
    return search_orders(
        c, [&](const ApexOrder& o) { return check_mixed(c, table, q_minus, q, q_plus, o); });
}

namespace {

OrderCheckResult check_aligned(const Constellation& c, const ApexOrder& order) {
    auto rank = rank_of(c, order);
    OrderCheckResult res;
    res.order = order;
    for (size_t p = 0; p < c.paths.size(); ++p) {
        std::vector<int> trace;
        for (Vertex v : c.paths[p]) {
            std::vector<int> here;
            for (Vertex w : c.host.neighbors(v))
                if (rank[static_cast<size_t>(w)] >= 0) here.push_back(rank[static_cast<size_t>(w)]);
            if (here.size() > 1) {
                // one vertex meeting two apexes breaks monotonicity under
                // every order
                res.ok = false;
                res.witnesses = {v};
                return res;
            }
            if (!here.empty()) trace.push_back(here[0]);
        }
        bool fwd = std::is_sorted(trace.begin(), trace.end());
        bool bwd = std::is_sorted(trace.rbegin(), trace.rend());
        if (!fwd && !bwd) {
            res.ok = false;
            res.witnesses = {static_cast<Vertex>(p)};
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace

OrderCheckResult is_aligned(const Constellation& c, const ApexOrder& order) {
    require_order(c, order);
    return check_aligned(c, order);
}

OrderCheckResult search_aligned(const Constellation& c) {
    return search_orders(c, [&](const ApexOrder& o) { return check_aligned(c, o); });
}

IndexSequence extract_sequence(const Constellation& c, int path_index, const ApexOrder& order) {
    require_order(c, order);
    if (path_index < 0 || path_index >= c.path_count())
        throw std::out_of_range("path index out of range");
    auto rank = rank_of(c, order);
    auto emit = [&](bool forward) {
        IndexSequence out;
        const auto& path = c.paths[static_cast<size_t>(path_index)];
        for (size_t k = 0; k < path.size(); ++k) {
            Vertex v = forward ? path[k] : path[path.size() - 1 - k];
            std::vector<int> here;
            for (Vertex w : c.host.neighbors(v))
                if (rank[static_cast<size_t>(w)] >= 0)
                    here.push_back(rank[static_cast<size_t>(w)] + 1);  // ranks are 1-based
            std::sort(here.begin(), here.end());
            out.insert(out.end(), here.begin(), here.end());
        }
        return out;
    };
    IndexSequence fwd = emit(true);
    IndexSequence bwd = emit(false);
    return std::min(fwd, bwd);
}

SitsInResult sits_in(const SubSelection& b, const Constellation& c) {
    auto check = validate_selection(c.host, b);
    if (!check.ok) {
        std::string msg = "inner selection is not a constellation:";
        for (auto& v : check.violations) msg += " " + violation_to_string(v);
        return {false, msg};
    }
    for (Vertex v : b.apex)
        if (!set_contains(c.apex, v))
            return {false, "apex " + std::to_string(v) + " is not an apex of the outer constellation"};
    // locate each inner path inside an outer path, contiguously
    std::vector<std::vector<int>> pos_of(static_cast<size_t>(c.host.vertex_count()));
    std::vector<int> path_of(static_cast<size_t>(c.host.vertex_count()), -1);
    std::vector<int> pos_in_path(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t p = 0; p < c.paths.size(); ++p)
        for (size_t i = 0; i < c.paths[p].size(); ++i) {
            path_of[static_cast<size_t>(c.paths[p][i])] = static_cast<int>(p);
            pos_in_path[static_cast<size_t>(c.paths[p][i])] = static_cast<int>(i);
        }
    std::set<int> used_outer;
    for (size_t bp = 0; bp < b.paths.size(); ++bp) {
        int outer = -1;
        int lo = -1, hi = -1;
        for (Vertex v : b.paths[bp]) {
            int p = path_of[static_cast<size_t>(v)];
            if (p < 0)
                return {false, "path vertex " + std::to_string(v) +
                                   " is not a path vertex of the outer constellation"};
            if (outer == -1) outer = p;
            if (p != outer)
                return {false, "inner path " + std::to_string(bp) +
                                   " spans two outer paths"};
            int q = pos_in_path[static_cast<size_t>(v)];
            lo = (lo < 0) ? q : std::min(lo, q);
            hi = (hi < 0) ? q : std::max(hi, q);
        }
        if (hi - lo + 1 != static_cast<int>(b.paths[bp].size()))
            return {false, "inner path " + std::to_string(bp) +
                               " is not a contiguous subpath of its outer path"};
        if (!used_outer.insert(outer).second)
            return {false, "two inner paths sit inside outer path " + std::to_string(outer)};
    }
    return {true, ""};
}

RoutePairResult has_two_anticomplete_routes(const Constellation& c) {
    auto routes = enumerate_all_routes(c);
    std::vector<VertexSet> verts(routes.size());
    for (size_t i = 0; i < routes.size(); ++i) verts[i] = make_vertex_set(routes[i].vertices(c));
    for (size_t i = 0; i < routes.size(); ++i)
        for (size_t j = i + 1; j < routes.size(); ++j)
            if (is_anticomplete(c.host, verts[i], verts[j]))
                return {true, std::make_pair(routes[i], routes[j])};
    return {false, std::nullopt};
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SplitResult split_zigzagged(const Constellation& c, int cap, int q, const ApexOrder& order) {
    SplitResult res;
    if (cap < 1 || q < 1) {
        res.failure = "cap and q must be >= 1";
        return res;
    }
    require_order(c, order);
    if (!is_ample(c, 1).ok) {
        res.failure = "constellation is not ample";
        return res;
    }
    if (!is_zigzagged(c, q, order).ok) {
        res.failure = "constellation is not q-zigzagged with the given order";
        return res;
    }
    const int need_apex = 2 * cap + 3 * q;
    const long long block = static_cast<long long>(cap) * binomial(cap + q - 1, cap);
    if (c.apex_count() < need_apex) {
        res.failure = "need at least " + std::to_string(need_apex) + " apex vertices";
        return res;
    }
    if (c.path_count() < 2 * block) {
        res.failure = "need at least " + std::to_string(2 * block) + " paths";
        return res;
    }

    // x1 < S1 < Q < S2 < x2 along the order
    Vertex x1 = order[0];
    std::vector<Vertex> s_side[2];
    for (int i = 1; i < cap + q; ++i) s_side[0].push_back(order[static_cast<size_t>(i)]);
    std::vector<Vertex> q_set;
    for (int i = cap + q; i < cap + 2 * q; ++i) q_set.push_back(order[static_cast<size_t>(i)]);
    for (int i = cap + 2 * q; i < 2 * cap + 3 * q - 1; ++i)
        s_side[1].push_back(order[static_cast<size_t>(i)]);
    Vertex x2 = order[static_cast<size_t>(2 * cap + 3 * q - 1)];
    Vertex ends[2] = {x1, x2};

    std::vector<int> rank(static_cast<size_t>(c.host.vertex_count()), -1);
    for (size_t i = 0; i < order.size(); ++i) rank[static_cast<size_t>(order[i])] = static_cast<int>(i);

    // per side, per path: the shortest route from the end vertex into Q
    struct Chosen {
        Route route;
        std::vector<Vertex> hitters;  // first `cap` members of S_i meeting the interior
    };
    std::vector<std::map<std::vector<Vertex>, std::vector<int>>> buckets(2);
    std::vector<std::vector<Chosen>> per_path(2, std::vector<Chosen>(static_cast<size_t>(2 * block)));
    for (int side = 0; side < 2; ++side) {
        int path_base = (side == 0) ? 0 : static_cast<int>(block);
        for (int off = 0; off < block; ++off) {
            int p = path_base + off;
            std::optional<Route> best;
            for (Vertex yq : q_set)
                for (const Route& r : enumerate_routes(c, ends[side], yq))
                    if (r.path == p) {
                        if (!best || r.length() < best->length() ||
                            (r.length() == best->length() &&
                             std::tie(r.lo, r.hi) < std::tie(best->lo, best->hi)))
                            best = r;
                    }
            if (!best) {
                res.failure = "no route from an end vertex into Q on path " + std::to_string(p);
                return res;
            }
            auto interior = best->interior(c);
            VertexSet interior_set = make_vertex_set(interior);
            std::vector<Vertex> hitters;
            for (Vertex z : s_side[side]) {
                bool hits = false;
                for (Vertex w : c.host.neighbors(z))
                    if (set_contains(interior_set, w)) hits = true;
                if (hits) hitters.push_back(z);
            }
            std::sort(hitters.begin(), hitters.end(), [&](Vertex a, Vertex b) {
                return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
            });
            if (static_cast<int>(hitters.size()) < cap) {
                res.failure = "pigeonhole failed: a route interior meets fewer than cap apexes";
                return res;
            }
            hitters.resize(static_cast<size_t>(cap));
            std::sort(hitters.begin(), hitters.end());
            per_path[static_cast<size_t>(side)][static_cast<size_t>(p - path_base)] = {*best, hitters};
            buckets[static_cast<size_t>(side)][hitters].push_back(p - path_base);
        }
    }

    SubSelection sels[2];
    for (int side = 0; side < 2; ++side) {
        const std::vector<int>* paths_hit = nullptr;
        std::vector<Vertex> apex_hit;
        for (auto& [subset, plist] : buckets[static_cast<size_t>(side)])
            if (static_cast<int>(plist.size()) >= cap) {
                apex_hit = subset;
                paths_hit = &plist;
                break;
            }
        if (!paths_hit) {
            res.failure = "pigeonhole failed: no apex subset is hit by cap route interiors";
            return res;
        }
        sels[side].apex = make_vertex_set(apex_hit);
        for (int k = 0; k < cap; ++k) {
            const Chosen& ch =
                per_path[static_cast<size_t>(side)][static_cast<size_t>((*paths_hit)[static_cast<size_t>(k)])];
            sels[side].paths.push_back(ch.route.interior(c));
        }
    }

    VertexSet xs = sels[0].apex, ys = sels[1].apex;
    for (auto& p : sels[0].paths) xs.insert(xs.end(), p.begin(), p.end());
    for (auto& p : sels[1].paths) ys.insert(ys.end(), p.begin(), p.end());
    xs = make_vertex_set(xs);
    ys = make_vertex_set(ys);
    if (!is_anticomplete(c.host, xs, ys)) {
        res.failure = "constructed sides are not anticomplete";
        return res;
    }
    if (!validate_selection(c.host, sels[0]).ok || !validate_selection(c.host, sels[1]).ok) {
        res.failure = "constructed side is not a constellation";
        return res;
    }
    res.ok = true;
    res.x_side = std::move(xs);
    res.y_side = std::move(ys);
    res.x_sel = std::move(sels[0]);
    res.y_sel = std::move(sels[1]);
    return res;
}

SubdivisionSearch star_subdivision_obstruction(const Constellation& c, int q,
                                               std::int64_t node_budget) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    // pattern K_{1,2q+1}: center 0, leaves 1..2q+1
    std::vector<std::pair<Vertex, Vertex>> star_edges;
    for (int i = 1; i <= 2 * q + 1; ++i) star_edges.push_back({0, i});
    Graph star = Graph::from_edges(2 * q + 2, star_edges);
    SubdivisionOptions opts;
    opts.proper = true;
    opts.min_branch_degree = 4;
    opts.node_budget = node_budget;
    return find_induced_subdivision(c.host, star, opts);
}

}  // namespace constel
