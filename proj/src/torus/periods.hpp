#pragma once

#include <optional>
#include <vector>

#include "exact/lattice.hpp"
#include "torus/cochain.hpp"

namespace tropflux {

// Coefficients of generators (columns) and a target over a shared monomial basis,
// scaled row by row to integers.
struct MonomialSystem {
    std::vector<Monomial> monomials;
    std::vector<Rational> row_scale;  // integer row = row_scale * rational row
    IntMatrix a;
    IntVector b;
};

MonomialSystem monomial_system(const std::vector<Scalar>& generators, const Scalar& target);

class PeriodGroup {
public:
    PeriodGroup() = default;
    // zeros dropped, signs normalised to a positive leading coefficient, repeats dropped
    explicit PeriodGroup(const std::vector<Scalar>& generators);

    const std::vector<Scalar>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    // Integer coefficients c with sum c_i g_i = t, if any.
    std::optional<IntVector> lattice_coefficients(const Scalar& t) const;
    bool contains(const Scalar& t) const { return lattice_coefficients(t).has_value(); }
    PeriodGroup substitute(const std::map<std::string, Scalar>& values) const;

private:
    std::vector<Scalar> generators_;
};

// Equal as subgroups of the scalar ring.
bool same_group(const PeriodGroup& a, const PeriodGroup& b);
// Equal as lists after normalising signs and order.
bool same_generators_up_to_sign(const PeriodGroup& a, const PeriodGroup& b);

PeriodGroup period_group(const ConstantCochain& omega, const TropicalTorus& t);
PeriodGroup period_oracle(const ConstantCochain& omega, const TropicalTorus& t);

}  // namespace tropflux
