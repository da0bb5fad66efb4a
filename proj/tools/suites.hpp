#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace constel::suites {

struct SuiteResult {
    bool pass = false;
    bool inconclusive = false;
    std::string detail;  // one-line summary of what was checked / what failed
};

// Lemma slice: Z_n has no 4-alignment for 2 <= n <= max_n (exhaustive), and
// Z_4 has a 3-alignment as a positive control.
SuiteResult lemma_align(int max_n);

// zigzag_graph(n,1) validates, is 1-zigzagged under the natural order,
// and its extracted trace equals the zigzag sequence, for n <= max_n.
SuiteResult zigzag_family(int max_n);

// Ample interrupted instances admit no pair of anticomplete routes; a
// disjoint-union control does.
SuiteResult deathstar(int max_s);

// The constructive split of an ample q-zigzagged constellation into two
// anticomplete sides of treewidth >= c, verified independently.
SuiteResult split(int c, int q);

// Absence of the K_{1,2q+1} obstruction in ample 1-zigzagged instances and
// presence in a hand-built interrupted instance.
SuiteResult star_obstruction(int q);

// Randomized covering-bound check with exact parameters.
SuiteResult dsw_random(int count, unsigned seed);

// Generated (s,l)-constellations have treewidth at least min(s,l).
SuiteResult widths(int max_s, int max_l);

}  // namespace constel::suites
