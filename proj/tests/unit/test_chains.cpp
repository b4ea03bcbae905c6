#include <gtest/gtest.h>

#include "chains/chain.hpp"
#include "exact/errors.hpp"
#include "lift/sampling.hpp"

using namespace tropflux;

namespace {

ScalarVector V(std::initializer_list<long> xs) {
    ScalarVector v;
    for (long x : xs) v.push_back(Scalar(x));
    return v;
}

}  // namespace

TEST(Chains, SquareBoundary) {
    FramedChain c(2, 2, 0, {V({1, 0}), V({0, 1})});
    c.add(make_cell(V({0, 0}), {V({1, 0}), V({0, 1})}, 1, {PureWedge{1, {}}}));
    FramedChain d = boundary(c);
    EXPECT_EQ(d.cells.size(), 4U);
    EXPECT_TRUE(reduce_mod_lattice(d).empty());  // opposite sides are lattice translates
    FramedChain big(2, 2, 0, {V({5, 0}), V({0, 5})});
    big.add(c.cells[0]);
    EXPECT_EQ(reduce_mod_lattice(boundary(big)).cells.size(), 4U);
}

TEST(Chains, RejectsMismatchedCells) {
    FramedChain c(2, 1, 0, {});
    EXPECT_THROW(c.add(make_cell(V({0, 0}), {V({1, 0}), V({0, 1})}, 1, {})), PreconditionError);
    EXPECT_THROW(c.add(make_cell(V({0}), {V({1})}, 1, {})), PreconditionError);
}

TEST(Chains, OrientationIsCanonicalised) {
    FramedChain a(1, 1, 0, {V({7})});
    a.add(make_cell(V({0}), {V({2})}, 1, {PureWedge{1, {}}}));
    FramedChain b(1, 1, 0, {V({7})});
    b.add(make_cell(V({2}), {V({-2})}, -1, {PureWedge{1, {}}}));
    EXPECT_TRUE(equal_mod_lattice(a, b));
    FramedChain shifted = translate(a, V({7}));
    EXPECT_TRUE(equal_mod_lattice(a, shifted));
    EXPECT_TRUE(reduce_mod_lattice(a - shifted).empty());
}

TEST(Chains, LatticeTranslationMatchesMonomials) {
    std::vector<ScalarVector> lattice{{Scalar::parse("a"), Scalar(0)}, {Scalar(0), Scalar::parse("b")}};
    auto m = lattice_translation(lattice, {Scalar::parse("2*a"), Scalar::parse("-b")});
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, (IntVector{2, -1}));
    EXPECT_FALSE(lattice_translation(lattice, {Scalar::parse("a/2"), Scalar(0)}));
    EXPECT_FALSE(lattice_translation(lattice, {Scalar::parse("b"), Scalar(0)}));
}

TEST(Chains, BoundaryOfBoundaryVanishes) {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = uniform_int(rng, 2, 4);
        int j = uniform_int(rng, 2, n);
        int k = uniform_int(rng, 0, n);
        FramedChain c = random_framed_chain(rng, random_torus(rng, n), j, k);
        ASSERT_TRUE(reduce_mod_lattice(boundary(boundary(c))).empty()) << c.str();
    }
}

TEST(Chains, IntegralIsSubdivisionAndTranslationInvariant) {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        int n = uniform_int(rng, 1, 4);
        int j = uniform_int(rng, 1, n);
        int k = uniform_int(rng, 0, n - j);
        TropicalTorus t = random_torus(rng, n);
        FramedChain c = random_framed_chain(rng, t, j, k);
        ConstantCochain w = random_cochain(rng, n, j, k);
        Scalar v = integrate(w, c);
        ASSERT_EQ(integrate(w, subdivide(c, uniform_int(rng, 0, j - 1))), v);
        ASSERT_EQ(integrate(w, translate(c, random_vectors(rng, n, 1)[0])), v);
    }
}

TEST(Chains, TautologicalCycleChecksDirections) {
    EXPECT_THROW(tautological_cycle(2, {TautologicalCell{V({0, 0}), {{2, 0}}, {Scalar(1)}, 1}}, {}), PreconditionError);
    FramedChain c = tautological_cycle(2, {TautologicalCell{V({0, 0}), {{1, 1}}, {Scalar::parse("l")}, 1}}, {});
    EXPECT_EQ(c.cells[0].spans[0], (ScalarVector{Scalar::parse("l"), Scalar::parse("l")}));
    EXPECT_EQ(c.cells[0].framing, ExteriorElement::vector(IntVector{1, 1}));
}

TEST(Chains, PointwiseDegeneracy) {
    FramedCell flat = make_cell(V({0, 0, 0}), {V({1, 0, 0}), V({2, 0, 0})}, 1, {PureWedge{1, {{0, 0, 1}}}});
    EXPECT_TRUE(is_pointwise_degenerate(flat, determinantal_form(3, 2, 1)));
    EXPECT_TRUE(vectors_dependent(flat.spans));
    FramedCell inside = make_cell(V({0, 0, 0}), {V({1, 0, 0}), V({0, 1, 0})}, 1, {PureWedge{1, {{1, 1, 0}}}});
    EXPECT_TRUE(is_pointwise_degenerate(inside, determinantal_form(3, 2, 1)));
    EXPECT_EQ(integrate_cell(determinantal_form(3, 2, 1), inside), Scalar(0));
    FramedCell transverse = make_cell(V({0, 0, 0}), {V({1, 0, 0}), V({0, 1, 0})}, 1, {PureWedge{1, {{0, 0, 1}}}});
    EXPECT_FALSE(is_pointwise_degenerate(transverse, determinantal_form(3, 2, 1)));
}
