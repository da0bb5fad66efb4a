#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace constel {

// Finite sequence of positive integers.
using IndexSequence = std::vector<int>;

bool is_positive_sequence(const IndexSequence& a);

// Consecutive entries differ by at most 1.
bool is_smooth(const IndexSequence& a);

IndexSequence shifted(const IndexSequence& a);    // every entry +1
IndexSequence reversed(const IndexSequence& a);
IndexSequence truncated(const IndexSequence& a);  // drop the last entry; length >= 2 required

// The zigzag sequence: Z_2 = 1,2; Z_3 = 1,2,3; for n >= 4 the concatenation
// of truncated Z_{n-1}, the truncated reversal of Z_{n-2}+1, and Z_{n-1}+1.
IndexSequence zigzag_sequence(int n);
std::int64_t zigzag_length(int n);

// Collapse runs of equal consecutive entries to a single entry.
IndexSequence dedup_runs(const IndexSequence& a);

// Window [i..j] is 1-based and inclusive. Filters the window to entries in b,
// collapses equal-neighbor runs, and tests whether every element of b occurs
// exactly once.
bool is_alignment(const IndexSequence& a, const std::vector<int>& b, int i, int j);

struct AlignmentWitness {
    std::vector<int> values;  // the aligned value subset
    int i = 0;                // 1-based window, inclusive
    int j = 0;
};

// Exhaustive search over all k-subsets of the value set of a; nullopt is a
// proof that no k-alignment exists. Refuses runs whose subset count exceeds
// max_subsets rather than grinding for hours.
std::optional<AlignmentWitness> max_alignment(const IndexSequence& a, int k,
                                              std::int64_t max_subsets = 5'000'000);

// Mechanical check that replacing each entry a_i of Z_n with n+1-a_i gives
// the reversal of Z_n.
bool complement_symmetry_check(int n);

}  // namespace constel
