#include "chains/flux.hpp"

#include "exact/errors.hpp"

namespace tropflux {

std::string verdict_name(const FluxVerdict& v) {
    if (std::holds_alternative<InLattice>(v)) return "InLattice";
    if (const auto* t = std::get_if<Torsion>(&v)) return "Torsion(" + t->order.get_str() + ")";
    return "InfiniteOrder";
}

FluxVerdict classify_flux(const Scalar& t, const PeriodGroup& p) {
    if (t.is_zero()) return InLattice{IntVector(p.size())};
    if (p.size() == 0) {
        std::vector<std::pair<Monomial, Rational>> f;
        const auto& [m, c] = *t.terms().begin();
        f.emplace_back(m, Rational(1));
        return InfiniteOrder{f, c};
    }
    MonomialSystem sys = monomial_system(p.generators(), t);
    SmithForm f = snf(sys.a);
    IntVector c = f.U * sys.b;
    for (std::size_t i = f.rank; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        // row i of U kills the column span and not t
        InfiniteOrder cert;
        for (std::size_t r = 0; r < sys.monomials.size(); ++r) {
            Rational w = Rational(f.U(i, r)) * sys.row_scale[r];
            if (w != 0) cert.functional.emplace_back(sys.monomials[r], w);
        }
        cert.value_on_target = apply_functional(cert.functional, t);
        return cert;
    }
    Integer order = *lattice_order(sys.a, sys.b);
    if (order == 1) return InLattice{*solve_integer(sys.a, sys.b)};
    IntVector mb = sys.b;
    for (auto& x : mb) x *= order;
    return Torsion{order, *solve_rational(sys.a, sys.b), *solve_integer(sys.a, mb)};
}

Rational apply_functional(const std::vector<std::pair<Monomial, Rational>>& functional, const Scalar& s) {
    Rational total = 0;
    for (const auto& [m, w] : functional) total += w * s.coefficient(m);
    return total;
}

namespace {

Scalar combine(const std::vector<Scalar>& gens, const RationalVector& coeffs) {
    Scalar total;
    for (std::size_t i = 0; i < gens.size(); ++i) total += Scalar(coeffs[i]) * gens[i];
    return total;
}

std::vector<Integer> prime_factors(Integer m) {
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

bool verify_certificate(const FluxVerdict& v, const Scalar& t, const PeriodGroup& p) {
    const auto& gens = p.generators();
    if (const auto* in = std::get_if<InLattice>(&v)) {
        if (in->coefficients.size() != gens.size()) return false;
        RationalVector q(in->coefficients.begin(), in->coefficients.end());
        return combine(gens, q) == t;
    }
    if (const auto* tor = std::get_if<Torsion>(&v)) {
        if (tor->order < 2 || tor->coefficients.size() != gens.size() ||
            tor->multiple_coefficients.size() != gens.size())
            return false;
        if (combine(gens, tor->coefficients) != t) return false;
        RationalVector z(tor->multiple_coefficients.begin(), tor->multiple_coefficients.end());
        if (combine(gens, z) != Scalar(tor->order) * t) return false;
        for (const auto& prime : prime_factors(tor->order))
            if (p.contains(Scalar(Integer(tor->order / prime)) * t)) return false;
        return true;
    }
    const auto& inf = std::get<InfiniteOrder>(v);
    for (const auto& g : gens)
        if (apply_functional(inf.functional, g) != 0) return false;
    Rational value = apply_functional(inf.functional, t);
    return value != 0 && value == inf.value_on_target;
}

FluxResult tropical_flux(const FramedChain& z_plus, const FramedChain& z_minus, const FramedChain& gamma,
                         const TropicalTorus& t, int j, int k) {
    if (gamma.j != j || gamma.k != k) throw PreconditionError("tropical_flux: chain degrees do not match (j,k)");
    if (gamma.j >= 1) {
        FramedChain diff = boundary(gamma) - (z_plus - z_minus);
        FramedChain rest = reduce_mod_lattice(diff);
        if (!rest.empty())
            throw PreconditionError("tropical_flux: boundary mismatch at cell " + rest.cells.front().str());
    } else if (!reduce_mod_lattice(z_plus - z_minus).empty()) {
        throw PreconditionError("tropical_flux: Z+ and Z- differ but the chain is a 0-chain");
    }
    ConstantCochain omega = determinantal_form(t.n, j, k);
    Scalar value = integrate(omega, gamma);
    return FluxResult{value, classify_flux(value, period_group(omega, t))};
}

}  // namespace tropflux
