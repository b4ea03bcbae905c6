#pragma once

#include <map>
#include <ostream>
#include <string>

#include "chains/chain.hpp"
#include "torus/cochain.hpp"
#include "torus/periods.hpp"

namespace tropflux {

// Constant form on R^{2n}; coordinate c < n is x_{c+1}, c >= n is p_{c-n+1}.
class ConstantFormX {
public:
    ConstantFormX(int n, int degree);

    int n() const { return n_; }
    int degree() const { return degree_; }
    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
    Scalar coefficient(const MultiIndex& i) const;
    void add(const MultiIndex& i, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    ConstantFormX& operator+=(const ConstantFormX& o);
    ConstantFormX& operator-=(const ConstantFormX& o);
    friend ConstantFormX operator+(ConstantFormX a, const ConstantFormX& b) { return a += b; }
    friend ConstantFormX operator-(ConstantFormX a, const ConstantFormX& b) { return a -= b; }
    friend ConstantFormX operator*(const Scalar& s, const ConstantFormX& a);
    friend bool operator==(const ConstantFormX& a, const ConstantFormX& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ConstantFormX& f) { return os << f.str(); }

private:
    int n_, degree_;
    std::map<MultiIndex, Scalar> terms_;
};

ConstantFormX symplectic_form(const TropicalTorus& t);
ConstantFormX symplectic_form(int n);
ConstantFormX wedge_x(const ConstantFormX& a, const ConstantFormX& b);
ConstantFormX omega_power(const TropicalTorus& t, int j);
ConstantFormX omega_power(int n, int j);

// Sign attached to e*_K (x) dx_J under the fibre duality, shared by psi_hat and
// phi_hat: sgn(K, K^c) * (-1)^(j(j-1)/2 + j(n-k)).
int fibre_sign(int n, const MultiIndex& K, int j);

ConstantFormX psi_hat(const ConstantCochain& omega);
// sum over (j+k)-sets I of (-1)^(sgn eta + j(n-k)) / j! * dp_{I^c} ^ omega^j
ConstantFormX psi_hat_closed_form(int n, int j, int k);

// Conormal: one cell per recorded pure-wedge factor of the framing, fibre spanned by
// the Hermite basis of the factors' annihilator. Standard: one cell per basis term
// e_K of the framing. Cells without recorded factors always use Standard.
enum class Decomposition { Conormal, Standard };

// Chains on X(B): ambient 2n, framing degree 0, lattice (Q e_i, 0) and (0, e_i).
std::vector<ScalarVector> lattice_x(const TropicalTorus& t);
FramedChain phi_hat(const FramedChain& c, const TropicalTorus& t, Decomposition d = Decomposition::Conormal);
// Projection to the x-block; drops spanning vectors that lie in the p-block.
FramedChain x_shadow(const FramedChain& cx, int n);

Scalar integrate_x(const ConstantFormX& alpha, const FramedChain& cx);

struct PairingResult {
    Scalar tropical;
    Scalar symplectic;
    bool holds = false;
};
PairingResult pairing(const FramedChain& c, const ConstantCochain& omega, const TropicalTorus& t,
                      Decomposition d = Decomposition::Conormal);
bool pairing_check(const FramedChain& c, const ConstantCochain& omega, const TropicalTorus& t);

PeriodGroup symplectic_period_group(const ConstantFormX& alpha, const TropicalTorus& t);

}  // namespace tropflux
