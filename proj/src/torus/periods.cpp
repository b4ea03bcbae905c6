#include "torus/periods.hpp"

#include <algorithm>
#include <set>

#include "chains/chain.hpp"
#include "exact/errors.hpp"

namespace tropflux {

MonomialSystem monomial_system(const std::vector<Scalar>& generators, const Scalar& target) {
    std::set<Monomial, MonomialOrder> monos;
    for (const auto& g : generators)
        for (const auto& [m, c] : g.terms()) monos.insert(m);
    for (const auto& [m, c] : target.terms()) monos.insert(m);
    MonomialSystem out;
    out.monomials.assign(monos.begin(), monos.end());
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (const auto& m : out.monomials) {
        RationalVector row;
        for (const auto& g : generators) row.push_back(g.coefficient(m));
        rows.push_back(std::move(row));
        rhs.push_back(target.coefficient(m));
    }
    IntegerSystem sys = integralize(rows, rhs);
    for (const auto& l : sys.row_scale) out.row_scale.emplace_back(l);
    out.a = std::move(sys.a);
    out.b = std::move(sys.b);
    return out;
}

PeriodGroup::PeriodGroup(const std::vector<Scalar>& generators) {
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        Scalar s = g.leading_coefficient() < 0 ? -g : g;
        if (std::find(generators_.begin(), generators_.end(), s) == generators_.end()) generators_.push_back(std::move(s));
    }
}

std::optional<IntVector> PeriodGroup::lattice_coefficients(const Scalar& t) const {
    if (t.is_zero()) return IntVector(generators_.size());
    if (generators_.empty()) return std::nullopt;
    MonomialSystem sys = monomial_system(generators_, t);
    return solve_integer(sys.a, sys.b);
}

PeriodGroup PeriodGroup::substitute(const std::map<std::string, Scalar>& values) const {
    std::vector<Scalar> gens;
    for (const auto& g : generators_) gens.push_back(g.substitute(values));
    return PeriodGroup(gens);
}

bool same_group(const PeriodGroup& a, const PeriodGroup& b) {
    for (const auto& g : a.generators())
        if (!b.contains(g)) return false;
    for (const auto& g : b.generators())
        if (!a.contains(g)) return false;
    return true;
}

bool same_generators_up_to_sign(const PeriodGroup& a, const PeriodGroup& b) {
    auto normal = [](const PeriodGroup& p) {
        std::vector<Scalar> v;
        for (const auto& g : p.generators()) v.push_back(g.leading_coefficient() < 0 ? -g : g);
        std::sort(v.begin(), v.end(), scalar_less);
        return v;
    };
    return normal(a) == normal(b);
}

PeriodGroup period_group(const ConstantCochain& omega, const TropicalTorus& t) {
    if (omega.n() != t.n) throw PreconditionError("period_group: form and torus dimensions differ");
    if (omega.j() + omega.k() > t.n) throw PreconditionError("period_group: needs j + k <= n");
    std::vector<Scalar> gens;
    for (const auto& K : subsets(t.n, omega.k()))
        for (const auto& R : subsets(t.n, omega.j())) {
            Scalar g;
            for (const auto& [key, c] : omega.terms())
                if (key.first == K) g += c * matrix_minor(t.Q, key.second, R);
            gens.push_back(g);
        }
    return PeriodGroup(gens);
}

PeriodGroup period_oracle(const ConstantCochain& omega, const TropicalTorus& t) {
    if (omega.n() != t.n) throw PreconditionError("period_oracle: form and torus dimensions differ");
    std::vector<Scalar> gens;
    for (const auto& K : subsets(t.n, omega.k()))
        for (const auto& R : subsets(t.n, omega.j())) {
            FramedChain cell(t.n, omega.j(), omega.k(), t.lattice());
            std::vector<ScalarVector> spans;
            for (int r : R) spans.push_back(t.column(r));
            cell.add(FramedCell{zero_vector(t.n), spans, 1, ExteriorElement::basis(K), {}});
            gens.push_back(integrate(omega, cell));
        }
    return PeriodGroup(gens);
}

}  // namespace tropflux
