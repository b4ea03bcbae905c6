#pragma once

#include <vector>

#include "lift/forms.hpp"

namespace tropflux {

// Classes in H^*(T^{2n}, Z) are written as ConstantFormX over the lattice dual
// basis: coordinate i < n is gamma*_{i+1}, coordinate n + i is f*_{i+1}.
struct LefschetzLevel {
    int i = 0;
    int source_degree = 0;            // n - 2i + 1
    std::vector<IntVector> kernel;    // integer basis of ker([omega]^{2i}) on the source degree
    std::vector<ConstantFormX> classes;  // [omega]^i cup kernel
};

struct LefschetzLattice {
    int n = 0;
    ConstantFormX omega{0, 2};         // [omega] in the lattice basis
    std::vector<LefschetzLevel> levels;
    std::size_t rank = 0;              // rank of the union of all levels in H^{n+1}
    bool fibre_classes_in_level1 = false;
    bool omega_block_is_q = false;
};

ConstantFormX omega_class(const TropicalTorus& t);
// Throws PreconditionError unless Q is numeric and invertible.
LefschetzLattice lefschetz_lattice(const TropicalTorus& t);

}  // namespace tropflux
