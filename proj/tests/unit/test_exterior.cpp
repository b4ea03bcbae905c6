#include <gtest/gtest.h>

#include "exact/errors.hpp"
#include "exact/exterior.hpp"

using namespace tropflux;

TEST(Exterior, IndexCombinatorics) {
    EXPECT_EQ(subsets(4, 2).size(), 6U);
    EXPECT_EQ(subsets(3, 2), (std::vector<MultiIndex>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(complement({1}, 3), (MultiIndex{0, 2}));
    EXPECT_EQ(index_str({0, 2}), "(1,3)");
    EXPECT_EQ(merge_sign({1}, {0, 2}), -1);
    EXPECT_EQ(merge_sign({0, 1}, {2}), 1);
    EXPECT_EQ(merge_sign({0}, {0}), 0);
    EXPECT_EQ(perm_sign({0, 1, 2}, {2, 0, 1}), 1);
    EXPECT_EQ(perm_sign({0, 1, 2}, {1, 0, 2}), -1);
    EXPECT_THROW(perm_sign({0, 1}, {0, 2}), PreconditionError);
}

TEST(Exterior, WedgeIsGradedCommutative) {
    auto u = ExteriorElement::vector(IntVector{1, 2, 0});
    auto v = ExteriorElement::vector(IntVector{0, 1, 3});
    EXPECT_EQ(wedge(u, v), -wedge(v, u));
    EXPECT_TRUE(wedge(u, u).is_zero());
    auto uv = wedge(u, v);
    EXPECT_EQ(uv.coefficient({0, 1}), Scalar(1));
    EXPECT_EQ(uv.coefficient({0, 2}), Scalar(3));
    EXPECT_EQ(uv.coefficient({1, 2}), Scalar(6));
    EXPECT_EQ(ExteriorElement::pure({{1, 2, 0}, {0, 1, 3}}), uv);
    auto w = ExteriorElement::basis({2});
    EXPECT_EQ(wedge(uv, w), wedge(w, uv));
}

TEST(Exterior, PureWedgeOfDependentVectorsVanishes) {
    EXPECT_TRUE(ExteriorElement::pure({{1, 2, 3}, {2, 4, 6}}).is_zero());
    EXPECT_EQ(ExteriorElement::pure({}), ExteriorElement::one());
    EXPECT_TRUE(ExteriorElement::pure({{1, 0}, {0, 1}}).has_integer_coefficients());
}
