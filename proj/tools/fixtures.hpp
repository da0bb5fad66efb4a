#pragma once

#include <vector>

#include "constel/constellation.hpp"
#include "constel/generators.hpp"

namespace constel::fixtures {

// A (3,3)-constellation whose routes all have length at least four: three
// apexes attached to each 7-vertex path at positions 0, 2, 4.
Constellation spaced_three_by_three();

// A (4,1)-constellation on an 8-vertex path whose apex trace reads
// 1,1,1,2,2,3,4,4.
Constellation blocky_four_by_one();

// An interrupted 8-apex constellation built to contain an induced proper
// subdivision of K_{1,3} with its center and leaves of degree >= 4: three
// 5-vertex paths each carrying one private route from apex 8, plus two
// single-vertex paths shared by everyone.
Constellation star_witness_instance();

// The ample 1-zigzagged instances used by the obstruction suites.
std::vector<Constellation> small_zigzag_corpus();

}  // namespace constel::fixtures
