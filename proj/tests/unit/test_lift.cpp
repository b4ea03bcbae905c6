#include <gtest/gtest.h>

#include "chains/zharkov.hpp"
#include "cli/curve_file.hpp"
#include "exact/errors.hpp"
#include "lift/forms.hpp"
#include "lift/sampling.hpp"

using namespace tropflux;

namespace {

TropicalTorus k4_torus() {
    MetricGraph g = load_curve(std::string(TROPFLUX_DATA_DIR) + "/k4.json");
    return TropicalTorus::from_matrix(polarisation_matrix(g, cycle_basis(g)));
}

FramedChain mixed_cell(const TropicalTorus& t, int i, int j) {
    auto lat = lattice_x(t);
    FramedChain c(2 * t.n, 2, 0, lat);
    c.add(FramedCell{zero_vector(2 * t.n), {lat[i], lat[t.n + j]}, 1, ExteriorElement::one(), {}});
    return c;
}

Scalar half() {
    return Scalar(Rational(1, 2));
}

}  // namespace

TEST(Lift, OmegaPeriodsAreQ) {
    TropicalTorus t = k4_torus();
    ConstantFormX w = symplectic_form(t);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(integrate_x(w, mixed_cell(t, i, j)), t.Q[i][j]);
    EXPECT_EQ(integrate_x(w, mixed_cell(t, 0, 0)), Scalar::parse("a+e+f"));
    EXPECT_EQ(integrate_x(w, mixed_cell(t, 1, 2)), Scalar::parse("-d"));
    EXPECT_EQ(integrate_x(w, FramedChain(6, 2, 0, {})), Scalar(0));
    PeriodGroup pw = symplectic_period_group(w, t);
    std::vector<Scalar> entries;
    for (const auto& r : t.Q) entries.insert(entries.end(), r.begin(), r.end());
    EXPECT_TRUE(same_group(pw, PeriodGroup(entries)));
}

TEST(Lift, OmegaPowers) {
    ConstantFormX w2 = omega_power(2, 2);
    EXPECT_EQ(w2.terms().size(), 1U);
    EXPECT_EQ(w2.coefficient({0, 1, 2, 3}), Scalar(-2));  // 2 dx1^dp1^dx2^dp2
    EXPECT_TRUE(omega_power(1, 2).is_zero());
    ConstantFormX h = half() * omega_power(3, 2);
    EXPECT_EQ(h.terms().size(), 3U);
    for (const auto& [idx, c] : h.terms()) EXPECT_EQ(c, Scalar(-1));
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(omega_power(n, n + 1).is_zero());
        Integer fact = 1;
        for (int a = 2; a <= n; ++a) fact *= a;
        MultiIndex all;
        for (int a = 0; a < 2 * n; ++a) all.push_back(a);
        int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;  // dx1^dp1^... to dx^dp order
        EXPECT_EQ(omega_power(n, n).coefficient(all), Scalar(Integer(fact * sign)));
    }
}

TEST(Lift, PsiHatOfDeterminantalForm) {
    EXPECT_EQ(psi_hat(determinantal_form(3, 2, 1)), half() * omega_power(3, 2));
    ConstantFormX p10 = psi_hat(determinantal_form(1, 1, 0));
    EXPECT_EQ(p10.degree(), 2);
    EXPECT_EQ(p10, Scalar(-1) * symplectic_form(1));  // sign fixed by psi_hat(Omega^3_{2,1}) = +1/2 omega^2
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= n; ++j)
            for (int k = 0; j + k <= n; ++k)
                ASSERT_EQ(psi_hat(determinantal_form(n, j, k)), psi_hat_closed_form(n, j, k))
                    << "n=" << n << " j=" << j << " k=" << k;
}

TEST(Lift, PhiHatOfSegment) {
    TropicalTorus t = k4_torus();
    FramedChain c(3, 1, 1, t.lattice());
    ScalarVector v{Scalar::parse("a"), Scalar(1), Scalar(0)};
    c.add(make_cell(zero_vector(3), {v}, 1, {PureWedge{1, {{1, 0, 0}}}}));
    FramedChain x = phi_hat(c, t);
    ASSERT_EQ(x.cells.size(), 1U);
    const FramedCell& cell = x.cells[0];
    ASSERT_EQ(cell.spans.size(), 3U);
    ScalarVector p2(6), p3(6);
    p2[4] = Scalar(1);
    p3[5] = Scalar(1);
    EXPECT_EQ(cell.spans[1], p2);
    EXPECT_EQ(cell.spans[2], p3);
    EXPECT_EQ(cell.weight, 1);
    EXPECT_TRUE(equal_mod_lattice(phi_hat(c, t, Decomposition::Standard), x));

    FramedChain point(3, 0, 3, t.lattice());
    point.add(make_cell(zero_vector(3), {}, 1, {PureWedge{1, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}));
    FramedChain px = phi_hat(point, t);
    ASSERT_EQ(px.cells.size(), 1U);
    EXPECT_EQ(px.cells[0].dim(), 0);
}

TEST(Lift, PhiHatRejectsRationalFramings) {
    TropicalTorus t = k4_torus();
    FramedChain c(3, 1, 1, t.lattice());
    FramedCell cell = make_cell(zero_vector(3), {ScalarVector{Scalar(1), Scalar(0), Scalar(0)}}, 1, {});
    cell.framing = Scalar(Rational(1, 2)) * ExteriorElement::basis({0});
    c.cells.push_back(cell);
    EXPECT_THROW(phi_hat(c, t), PreconditionError);
}

TEST(Lift, CeresaPairing) {
    MetricGraph g = load_curve(std::string(TROPFLUX_DATA_DIR) + "/k4.json");
    CeresaData d = zharkov_chain_k4(g);
    ConstantCochain w = determinantal_form(3, 2, 1);
    PairingResult r = pairing(d.chain, w, d.torus);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.tropical, Scalar::parse("-a*d"));
    EXPECT_EQ(integrate_x(half() * omega_power(3, 2), phi_hat(d.chain, d.torus)), Scalar::parse("-a*d"));
    EXPECT_EQ(pairing(d.chain, w, d.torus, Decomposition::Conormal).symplectic, Scalar::parse("-a*d"));
    EXPECT_TRUE(pairing_check(FramedChain(3, 2, 1, d.torus.lattice()), w, d.torus));

    AbelJacobi aj = abel_jacobi_cycle(g, d.basis);
    FramedChain lifted = phi_hat(aj.chain, d.torus);
    EXPECT_EQ(lifted.j, 3);
    FramedChain shadow = x_shadow(lifted, 3);
    ASSERT_EQ(shadow.cells.size(), aj.chain.cells.size());
    for (std::size_t i = 0; i < shadow.cells.size(); ++i) EXPECT_EQ(shadow.cells[i].spans, aj.chain.cells[i].spans);
}

TEST(Lift, PairingPreservedOnRandomChains) {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = uniform_int(rng, 1, 4);
        int j = uniform_int(rng, 0, n);
        int k = uniform_int(rng, 0, n - j);
        TropicalTorus t = random_torus(rng, n);
        ConstantCochain w = random_cochain(rng, n, j, k);
        FramedChain c = random_framed_chain(rng, t, j, k);
        ASSERT_TRUE(pairing_check(c, w, t)) << c.str();
        PairingResult con = pairing(c, w, t, Decomposition::Conormal);
        ASSERT_TRUE(con.holds) << c.str();

        FramedChain shadow = x_shadow(phi_hat(c, t), n);
        for (const auto& cell : shadow.cells) {
            bool found = false;
            for (const auto& orig : c.cells) found = found || (orig.base == cell.base && orig.spans == cell.spans);
            ASSERT_TRUE(found);
        }
    }
}

TEST(Lift, SymplecticPeriodsMatchTropicalPeriods) {
    TropicalTorus t = k4_torus();
    EXPECT_TRUE(same_group(symplectic_period_group(half() * omega_power(3, 2), t),
                           period_group(determinantal_form(3, 2, 1), t)));
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial)
        for (int n = 1; n <= 4; ++n) {
            TropicalTorus r = random_torus(rng, n);
            for (int j = 0; j <= n; ++j)
                for (int k = 0; j + k <= n; ++k) {
                    ConstantCochain w = determinantal_form(n, j, k);
                    ASSERT_TRUE(same_group(symplectic_period_group(psi_hat(w), r), period_group(w, r)))
                        << "n=" << n << " j=" << j << " k=" << k;
                }
        }
}

TEST(Lift, LoopBoundaryCase) {
    MetricGraph g = load_curve(std::string(TROPFLUX_DATA_DIR) + "/loop.json");
    CycleBasis b = cycle_basis(g);
    AbelJacobi aj = abel_jacobi_cycle(g, b);
    aj.chain.k = 0;
    for (auto& cell : aj.chain.cells) cell.framing = ExteriorElement::one(), cell.factors = {PureWedge{1, {}}};
    EXPECT_EQ(integrate(determinantal_form(1, 1, 0), aj.chain), Scalar::parse("l"));
    TropicalTorus t = TropicalTorus::from_matrix(polarisation_matrix(g, b));
    EXPECT_TRUE(same_group(symplectic_period_group(symplectic_form(t), t), PeriodGroup({Scalar::parse("l")})));
}
