#include "constel/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace constel {

bool is_positive_sequence(const IndexSequence& a) {
    if (a.empty()) return false;
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 1; });
}

bool is_smooth(const IndexSequence& a) {
    for (size_t i = 0; i + 1 < a.size(); ++i)
        if (std::abs(a[i + 1] - a[i]) > 1) return false;
    return true;
}

IndexSequence shifted(const IndexSequence& a) {
    IndexSequence out(a);
    for (int& x : out) ++x;
    return out;
}

IndexSequence reversed(const IndexSequence& a) { return IndexSequence(a.rbegin(), a.rend()); }

IndexSequence truncated(const IndexSequence& a) {
    if (a.size() < 2) throw std::invalid_argument("cannot truncate a sequence of length < 2");
    return IndexSequence(a.begin(), a.end() - 1);
}

IndexSequence zigzag_sequence(int n) {
    if (n < 2) throw std::invalid_argument("zigzag sequence is defined for n >= 2");
    if (n == 2) return {1, 2};
    if (n == 3) return {1, 2, 3};
    IndexSequence prev2 = {1, 2};      // Z_{k-2}
    IndexSequence prev1 = {1, 2, 3};   // Z_{k-1}
    for (int k = 4; k <= n; ++k) {
        IndexSequence z = truncated(prev1);
        IndexSequence mid = truncated(reversed(shifted(prev2)));
        z.insert(z.end(), mid.begin(), mid.end());
        IndexSequence tail = shifted(prev1);
        z.insert(z.end(), tail.begin(), tail.end());
        prev2 = std::move(prev1);
        prev1 = std::move(z);
    }
    return prev1;
}

std::int64_t zigzag_length(int n) {
    if (n < 2) throw std::invalid_argument("zigzag sequence is defined for n >= 2");
    std::int64_t l2 = 2, l3 = 3;
    if (n == 2) return l2;
    if (n == 3) return l3;
    for (int k = 4; k <= n; ++k) {
        std::int64_t lk = 2 * l3 + l2 - 2;
        l2 = l3;
        l3 = lk;
    }
    return l3;
}

IndexSequence dedup_runs(const IndexSequence& a) {
    IndexSequence out;
    for (int x : a)
        if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

bool is_alignment(const IndexSequence& a, const std::vector<int>& b, int i, int j) {
    if (i < 1 || j < i || static_cast<size_t>(j) > a.size())
        throw std::out_of_range("alignment window out of range");
    std::set<int> want(b.begin(), b.end());
    IndexSequence filtered;
    for (int idx = i - 1; idx < j; ++idx)
        if (want.count(a[static_cast<size_t>(idx)])) filtered.push_back(a[static_cast<size_t>(idx)]);
    IndexSequence d = dedup_runs(filtered);
    if (d.size() != want.size()) return false;
    std::set<int> seen(d.begin(), d.end());
    return seen == want;  // length equality forces each element exactly once
}

namespace {

// Restricting a window of `a` to values in B and collapsing runs yields a
// contiguous run-window of the run-collapsed restriction of the whole of
// `a`, and conversely. So B is an alignment somewhere iff the collapsed
// restriction has a window of length |B| with pairwise distinct entries.
struct SubsetScan {
    const IndexSequence& a;
    int k;
    std::vector<int> value_set;
    std::vector<int> chosen;
    std::optional<AlignmentWitness> hit;
    std::int64_t subsets = 0;
    std::int64_t max_subsets;

    bool scan_windows() {
        std::set<int> want(chosen.begin(), chosen.end());
        IndexSequence d;
        std::vector<std::pair<int, int>> span;  // run -> [first,last] 1-based positions in a
        for (size_t idx = 0; idx < a.size(); ++idx) {
            int x = a[idx];
            if (!want.count(x)) continue;
            if (!d.empty() && d.back() == x) {
                span.back().second = static_cast<int>(idx) + 1;
            } else {
                d.push_back(x);
                span.push_back({static_cast<int>(idx) + 1, static_cast<int>(idx) + 1});
            }
        }
        if (static_cast<int>(d.size()) < k) return false;
        for (size_t start = 0; start + static_cast<size_t>(k) <= d.size(); ++start) {
            std::set<int> distinct(d.begin() + static_cast<long>(start),
                                   d.begin() + static_cast<long>(start) + k);
            if (static_cast<int>(distinct.size()) == k) {
                hit = AlignmentWitness{chosen, span[start].first,
                                       span[start + static_cast<size_t>(k) - 1].second};
                return true;
            }
        }
        return false;
    }

    bool choose(size_t from, int left) {
        if (left == 0) {
            ++subsets;
            if (subsets > max_subsets)
                throw std::runtime_error("max_alignment: subset budget exceeded");
            return scan_windows();
        }
        for (size_t idx = from; idx + static_cast<size_t>(left) <= value_set.size(); ++idx) {
            chosen.push_back(value_set[idx]);
            if (choose(idx + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<AlignmentWitness> max_alignment(const IndexSequence& a, int k,
                                              std::int64_t max_subsets) {
    if (k < 1) throw std::invalid_argument("alignment size must be >= 1");
    std::set<int> values(a.begin(), a.end());
    if (static_cast<int>(values.size()) < k) return std::nullopt;
    SubsetScan scan{a, k, std::vector<int>(values.begin(), values.end()), {}, std::nullopt, 0,
                    max_subsets};
    if (scan.choose(0, k)) return scan.hit;
    return std::nullopt;
}

bool complement_symmetry_check(int n) {
    IndexSequence z = zigzag_sequence(n);
    IndexSequence complement(z);
    for (int& x : complement) x = n + 1 - x;
    return complement == reversed(z);
}

}  // namespace constel
