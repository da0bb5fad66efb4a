#include "constel/hypergraph.hpp"

#include <algorithm>
#include <bitset>
#include <set>
#include <stdexcept>

namespace constel {

namespace {

constexpr size_t kMaxVerts = 128;
using Bits = std::bitset<kMaxVerts>;

struct Budget {
    std::int64_t left;
    void tick() {
        if (--left < 0) throw std::runtime_error("hypergraph search budget exceeded");
    }
};

std::vector<Bits> edge_bits(const Hypergraph& h) {
    std::vector<Bits> bits(h.edges.size());
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (int v : h.edges[i]) bits[i].set(static_cast<size_t>(v));
    return bits;
}

}  // namespace

Hypergraph make_hypergraph(int n, std::vector<std::vector<int>> edges) {
    if (n < 1) throw std::invalid_argument("hypergraph needs a non-empty vertex set");
    if (n > static_cast<int>(kMaxVerts))
        throw std::invalid_argument("hypergraph vertex count limited to 128");
    if (edges.empty()) throw std::invalid_argument("hypergraph needs a non-empty edge list");
    for (auto& e : edges) {
        if (e.empty()) throw std::invalid_argument("hyperedges must be non-empty");
        for (int v : e)
            if (v < 0 || v >= n) throw std::invalid_argument("hyperedge vertex out of range");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    return {n, std::move(edges)};
}

PackingResult nu(const Hypergraph& h, std::int64_t node_budget) {
    auto bits = edge_bits(h);
    Budget budget{node_budget};
    std::vector<int> best, current;
    Bits used;
    // branch on including/skipping each edge in index order
    auto rec = [&](auto&& self, size_t i) -> void {
        budget.tick();
        if (current.size() > best.size()) best = current;
        if (i == bits.size()) return;
        // bound: even taking every remaining edge cannot beat best
        if (current.size() + (bits.size() - i) <= best.size()) return;
        if ((bits[i] & used).none()) {
            used |= bits[i];
            current.push_back(static_cast<int>(i));
            self(self, i + 1);
            current.pop_back();
            used &= ~bits[i];
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return {static_cast<int>(best.size()), best};
}

HittingResult tau(const Hypergraph& h, std::int64_t node_budget) {
    auto bits = edge_bits(h);
    Budget budget{node_budget};
    // greedy upper bound: repeatedly take a highest-frequency vertex
    std::vector<int> greedy;
    {
        std::vector<bool> hit(bits.size(), false);
        while (true) {
            std::vector<int> freq(static_cast<size_t>(h.n), 0);
            int remaining = 0;
            for (size_t i = 0; i < bits.size(); ++i)
                if (!hit[i]) {
                    ++remaining;
                    for (int v : h.edges[i]) ++freq[static_cast<size_t>(v)];
                }
            if (remaining == 0) break;
            int best_v = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
            greedy.push_back(best_v);
            for (size_t i = 0; i < bits.size(); ++i)
                if (!hit[i] && bits[i].test(static_cast<size_t>(best_v))) hit[i] = true;
        }
    }
    std::vector<int> best = greedy, current;
    // branch on the vertices of the first unhit edge
    auto rec = [&](auto&& self, Bits chosen) -> void {
        budget.tick();
        if (current.size() >= best.size()) return;
        int open = -1;
        for (size_t i = 0; i < bits.size(); ++i)
            if ((bits[i] & chosen).none()) {
                open = static_cast<int>(i);
                break;
            }
        if (open < 0) {
            best = current;
            return;
        }
        for (int v : h.edges[static_cast<size_t>(open)]) {
            current.push_back(v);
            Bits next = chosen;
            next.set(static_cast<size_t>(v));
            self(self, next);
            current.pop_back();
        }
    };
    rec(rec, Bits{});
    std::sort(best.begin(), best.end());
    return {static_cast<int>(best.size()), best};
}

namespace {

// Whether every pair within family (by index into h.edges) has a private
// witness vertex; fills the witnesses if so.
bool family_has_private_pairs(const Hypergraph& h, const std::vector<Bits>& bits,
                              const std::vector<int>& family, std::vector<int>* witnesses) {
    if (witnesses) witnesses->clear();
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t j = i + 1; j < family.size(); ++j) {
            Bits both = bits[static_cast<size_t>(family[i])] & bits[static_cast<size_t>(family[j])];
            int found = -1;
            for (size_t v = both._Find_first(); v < kMaxVerts; v = both._Find_next(v)) {
                bool private_v = true;
                for (size_t k = 0; k < family.size() && private_v; ++k) {
                    if (k == i || k == j) continue;
                    if (bits[static_cast<size_t>(family[k])].test(v)) private_v = false;
                }
                if (private_v) {
                    found = static_cast<int>(v);
                    break;
                }
            }
            if (found < 0) return false;
            if (witnesses) witnesses->push_back(found);
        }
    return true;
}

}  // namespace

PrivatePairResult lambda(const Hypergraph& h, std::int64_t node_budget) {
    auto bits = edge_bits(h);
    Budget budget{node_budget};
    const int m = static_cast<int>(h.edges.size());
    PrivatePairResult best;
    best.value = 1;
    best.edge_indices = {0};
    std::vector<int> family;
    // grow families in index order; any pair lacking a private vertex stops
    // the branch
    auto rec = [&](auto&& self, int from) -> void {
        budget.tick();
        if (static_cast<int>(family.size()) > best.value) {
            std::vector<int> wit;
            family_has_private_pairs(h, bits, family, &wit);
            best.value = static_cast<int>(family.size());
            best.edge_indices = family;
            best.private_vertices = wit;
        }
        if (static_cast<int>(family.size()) + (m - from) <= best.value) return;
        for (int i = from; i < m; ++i) {
            family.push_back(i);
            if (family_has_private_pairs(h, bits, family, nullptr)) self(self, i + 1);
            family.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

long long dsw_rhs(int a, int a_prime) {
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long long b = binom(a + a_prime, a_prime);
    return 11LL * a * a * (a + a_prime + 3) * b * b;
}

DswCheck dsw_bound_check(const Hypergraph& h, int a, int a_prime) {
    if (a < 1 || a_prime < 1) throw std::invalid_argument("dsw bound needs a, a' >= 1");
    int actual_nu = nu(h).value;
    if (actual_nu > a)
        throw std::invalid_argument("hypothesis violated: nu(H) = " + std::to_string(actual_nu) +
                                    " > a = " + std::to_string(a));
    int actual_lambda = lambda(h).value;
    if (actual_lambda > a_prime)
        throw std::invalid_argument("hypothesis violated: lambda(H) = " +
                                    std::to_string(actual_lambda) +
                                    " > a' = " + std::to_string(a_prime));
    DswCheck out;
    out.lhs = tau(h).value;
    out.rhs = dsw_rhs(a, a_prime);
    out.holds = out.lhs <= out.rhs;
    return out;
}

RamseyResult ramsey_search(int universe, int m, int colors,
                           const std::function<int(const std::vector<int>&)>& coloring, int n,
                           std::int64_t node_budget) {
    if (universe < 1 || m < 1 || n < m || colors < 1)
        throw std::invalid_argument("ramsey_search: need universe,m,colors >= 1 and n >= m");
    Budget budget{node_budget};
    std::vector<int> subset;
    std::vector<int> tuple;
    // all m-subsets of `subset` must receive `want`
    auto monochromatic = [&](int want) {
        std::vector<int> idx(static_cast<size_t>(m));
        auto rec = [&](auto&& self, int from, int depth) -> bool {
            if (depth == m) {
                std::vector<int> t;
                for (int k = 0; k < m; ++k)
                    t.push_back(subset[static_cast<size_t>(idx[static_cast<size_t>(k)])]);
                return coloring(t) == want;
            }
            for (int i = from; i <= static_cast<int>(subset.size()) - (m - depth); ++i) {
                idx[static_cast<size_t>(depth)] = i;
                if (!self(self, i + 1, depth + 1)) return false;
            }
            return true;
        };
        return rec(rec, 0, 0);
    };
    RamseyResult out;
    auto choose = [&](auto&& self, int from) -> bool {
        budget.tick();
        if (static_cast<int>(subset.size()) == n) {
            for (int color = 0; color < colors; ++color)
                if (monochromatic(color)) {
                    out.found = true;
                    out.subset = subset;
                    out.color = color;
                    return true;
                }
            return false;
        }
        for (int v = from; v <= universe - (n - static_cast<int>(subset.size())); ++v) {
            subset.push_back(v);
            if (self(self, v + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    choose(choose, 0);
    return out;
}

}  // namespace constel
