#pragma once

#include <random>

#include "chains/chain.hpp"
#include "torus/cochain.hpp"

namespace tropflux {

// Small-integer random instances for the property suites.
using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
TropicalTorus random_torus(Rng& rng, int n, int bound = 3);
ConstantCochain random_cochain(Rng& rng, int n, int j, int k, int bound = 2);
// 1..max_cells cells with integer pure-wedge framings (one or two summands each).
FramedChain random_framed_chain(Rng& rng, const TropicalTorus& t, int j, int k, int max_cells = 3);
// Independent-of-nothing spanning vectors of a j-cell; may be degenerate.
std::vector<ScalarVector> random_vectors(Rng& rng, int n, int count, int bound = 3);

}  // namespace tropflux
