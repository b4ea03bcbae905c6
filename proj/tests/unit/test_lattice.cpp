#include <gtest/gtest.h>

#include <random>

#include "exact/lattice.hpp"

using namespace tropflux;

namespace {

IntMatrix M(std::vector<IntVector> rows) {
    return IntMatrix::from_rows(rows);
}

bool unimodular(const IntMatrix& m) {
    Integer d = m.determinant();
    return d == 1 || d == -1;
}

}  // namespace

TEST(Smith, TextbookExample) {
    IntMatrix a = M({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    SmithForm f = snf(a);
    EXPECT_EQ(f.S, M({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
    EXPECT_EQ(f.U * a * f.V, f.S);
    EXPECT_EQ(f.rank, 3U);
}

TEST(Smith, RandomMatricesFactorWithUnimodularTransforms) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a(i, j) = entry(rng);
        SmithForm f = snf(a);
        ASSERT_EQ(f.U * a * f.V, f.S);
        ASSERT_TRUE(f.S.is_diagonal());
        ASSERT_TRUE(unimodular(f.U));
        ASSERT_TRUE(unimodular(f.V));
        for (std::size_t i = 0; i + 1 < f.rank; ++i) {
            ASSERT_GT(f.diagonal(i), 0);
            ASSERT_EQ(f.diagonal(i + 1) % f.diagonal(i), 0);
        }
    }
}

TEST(Lattice, SolveAndOrder) {
    IntMatrix a = M({{2, 0}, {0, 3}});
    EXPECT_EQ(solve_integer(a, {4, 9}), (IntVector{2, 3}));
    EXPECT_FALSE(solve_integer(a, {1, 0}));
    EXPECT_EQ(*lattice_order(a, {1, 1}), 6);
    EXPECT_EQ(*lattice_order(a, {2, 0}), 1);
    IntMatrix b = M({{1}, {1}});
    EXPECT_FALSE(lattice_order(b, {1, 0}));
    auto q = solve_rational(a, {1, 1});
    ASSERT_TRUE(q);
    EXPECT_EQ((*q)[0], Rational(1, 2));
    EXPECT_EQ((*q)[1], Rational(1, 3));
}

TEST(Lattice, KernelIsSaturated) {
    IntMatrix a = M({{2, 4, 6}});
    auto k = integer_kernel(a);
    ASSERT_EQ(k.size(), 2U);
    for (const auto& v : k) EXPECT_EQ(a * v, IntVector{0});
    // (-2, 1, 0) and (-3, 0, 1) span the kernel; check the index is 1
    IntMatrix basis(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) basis(i, j) = k[j][i];
    SmithForm f = snf(basis);
    EXPECT_EQ(f.diagonal(0), 1);
    EXPECT_EQ(f.diagonal(1), 1);
}

TEST(Lattice, IntegralizeScalesRows) {
    IntegerSystem s = integralize({{Rational(1, 2), Rational(1, 3)}}, {Rational(1, 6)});
    EXPECT_EQ(s.row_scale, IntVector{6});
    EXPECT_EQ(s.a, M({{3, 2}}));
    EXPECT_EQ(s.b, IntVector{1});
    EXPECT_EQ(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), 1U);
}
