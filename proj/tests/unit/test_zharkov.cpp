#include <gtest/gtest.h>

#include "chains/flux.hpp"
#include "chains/zharkov.hpp"
#include "cli/curve_file.hpp"
#include "exact/errors.hpp"

using namespace tropflux;

namespace {

MetricGraph curve(const std::string& name) {
    return load_curve(std::string(TROPFLUX_DATA_DIR) + "/" + name);
}

}  // namespace

TEST(Zharkov, BoundaryIsTheCeresaCycle) {
    for (const char* name : {"k4.json", "k4_subdivided.json", "k4_numeric.json", "k4_equal.json"}) {
        CeresaData d = zharkov_chain_k4(curve(name));
        EXPECT_EQ(d.chain.cells.size(), 5U);
        EXPECT_TRUE(reduce_mod_lattice(boundary(d.chain) - (d.curve - d.inverse_curve)).empty()) << name;
    }
}

TEST(Zharkov, OnlyE3Contributes) {
    MetricGraph g = curve("k4.json");
    CeresaData d = zharkov_chain_k4(g);
    EXPECT_EQ(g.vertices[d.p], "t");
    EXPECT_EQ(g.vertices[d.p_prime], "g");
    EXPECT_EQ(g.vertices[d.m], "l");
    EXPECT_EQ(g.vertices[d.n], "pc");
    ConstantCochain w = determinantal_form(3, 2, 1);
    std::vector<Scalar> expected{Scalar(0), Scalar(0), Scalar::parse("-a*d"), Scalar(0), Scalar(0)};
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(integrate_cell(w, d.chain.cells[i]), expected[i]) << d.labels[i];
}

TEST(Zharkov, FluxAndVerdict) {
    CeresaData d = zharkov_chain_k4(curve("k4.json"));
    FluxResult r = tropical_flux(d.curve, d.inverse_curve, d.chain, d.torus, 2, 1);
    EXPECT_EQ(r.value, Scalar::parse("-a*d"));
    ASSERT_TRUE(std::holds_alternative<InfiniteOrder>(r.verdict));
    EXPECT_TRUE(verify_certificate(r.verdict, r.value, period_group(determinantal_form(3, 2, 1), d.torus)));
}

TEST(Zharkov, SpecialisationsAndSubdivision) {
    CeresaData eq = zharkov_chain_k4(curve("k4_equal.json"));
    FluxResult r = tropical_flux(eq.curve, eq.inverse_curve, eq.chain, eq.torus, 2, 1);
    EXPECT_EQ(r.value, Scalar::parse("-s^2"));
    ASSERT_TRUE(std::holds_alternative<Torsion>(r.verdict));
    EXPECT_EQ(std::get<Torsion>(r.verdict).order, 4);

    CeresaData num = zharkov_chain_k4(curve("k4_numeric.json"));
    EXPECT_EQ(tropical_flux(num.curve, num.inverse_curve, num.chain, num.torus, 2, 1).value, Scalar(-1));

    CeresaData sub = zharkov_chain_k4(curve("k4_subdivided.json"));
    EXPECT_EQ(tropical_flux(sub.curve, sub.inverse_curve, sub.chain, sub.torus, 2, 1).value, Scalar::parse("-a*(d+h)"));
}

TEST(Zharkov, Preconditions) {
    EXPECT_THROW(zharkov_chain_k4(curve("theta.json")), PreconditionError);
    MetricGraph g = curve("k4.json");
    g.basepoint2.reset();
    EXPECT_THROW(zharkov_chain_k4(g), PreconditionError);
    CeresaData d = zharkov_chain_k4(curve("k4.json"));
    FramedChain wrong = d.chain;
    wrong.cells.pop_back();
    EXPECT_THROW(tropical_flux(d.curve, d.inverse_curve, wrong, d.torus, 2, 1), PreconditionError);
}
