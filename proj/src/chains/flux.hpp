#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chains/chain.hpp"
#include "torus/periods.hpp"

namespace tropflux {

struct InLattice {
    IntVector coefficients;  // sum c_i g_i = t
};

struct Torsion {
    Integer order;                  // minimal m >= 2 with m t in the lattice
    RationalVector coefficients;    // sum q_i g_i = t
    IntVector multiple_coefficients;  // sum z_i g_i = m t
};

// Linear functional on monomial coefficients vanishing on every generator but not on t.
struct InfiniteOrder {
    std::vector<std::pair<Monomial, Rational>> functional;
    Rational value_on_target;
};

using FluxVerdict = std::variant<InLattice, Torsion, InfiniteOrder>;

std::string verdict_name(const FluxVerdict& v);
FluxVerdict classify_flux(const Scalar& t, const PeriodGroup& p);

Rational apply_functional(const std::vector<std::pair<Monomial, Rational>>& functional, const Scalar& s);
// Re-checks a certificate by substitution; independent of the SNF that produced it.
bool verify_certificate(const FluxVerdict& v, const Scalar& t, const PeriodGroup& p);

struct FluxResult {
    Scalar value;
    FluxVerdict verdict;
};

// Requires boundary(gamma) == z_plus - z_minus modulo the lattice.
FluxResult tropical_flux(const FramedChain& z_plus, const FramedChain& z_minus, const FramedChain& gamma,
                         const TropicalTorus& t, int j, int k);

}  // namespace tropflux
