#include <gtest/gtest.h>

#include <random>

#include "exact/errors.hpp"
#include "exact/scalar.hpp"

using namespace tropflux;

namespace {

Scalar P(const char* s) {
    return Scalar::parse(s);
}

}  // namespace

TEST(Scalar, ParsesAndPrintsPolynomials) {
    EXPECT_EQ(P("a*b + a*d").str(), "a*b + a*d");
    EXPECT_EQ(P("(a+b)^2").str(), "a^2 + 2*a*b + b^2");
    EXPECT_EQ(P("3/2").str(), "3/2");
    EXPECT_EQ(P("0.5*x"), P("x/2"));
    EXPECT_EQ(P("05"), Scalar(5));
    EXPECT_EQ(P("-(a - b)"), P("b - a"));
    EXPECT_TRUE(P("a - a").is_zero());
}

TEST(Scalar, RejectsMalformedText) {
    EXPECT_THROW(P("a +"), InputError);
    EXPECT_THROW(P("(a"), InputError);
    EXPECT_THROW(P("a/b"), InputError);
    EXPECT_THROW(P("1/0"), InputError);
    EXPECT_THROW(P("a$"), InputError);
}

TEST(Scalar, OrderedPrintingFollowsDeclaredVariables) {
    Scalar s = P("d*a + e*f");
    EXPECT_EQ(s.str({"a", "b", "c", "d", "e", "f"}), "a*d + e*f");
    EXPECT_EQ(s.str({"f", "e", "d", "a"}), "e*f + a*d");
}

TEST(Scalar, Queries) {
    Scalar s = P("2*a^2*b - 3");
    EXPECT_EQ(s.degree(), 3U);
    EXPECT_FALSE(s.is_constant());
    EXPECT_EQ(s.coefficient({{"a", 2}, {"b", 1}}), Rational(2));
    EXPECT_EQ(s.variables(), (std::vector<std::string>{"a", "b"}));
    EXPECT_TRUE(Scalar(Rational(6, 3)).is_integer());
    EXPECT_THROW((void)s.constant_value(), PreconditionError);
    EXPECT_EQ(s.substitute({{"a", Scalar(1)}, {"b", Scalar(2)}}), Scalar(1));
    EXPECT_EQ(s.substitute({{"a", P("c+1")}}), P("2*b*c^2 + 4*b*c + 2*b - 3"));
}

TEST(Scalar, RingAxiomsOnRandomPolynomials) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), pick(0, 2);
    const char* names[] = {"a", "b", "c"};
    auto random_poly = [&] {
        Scalar s;
        for (int t = 0; t < 4; ++t) {
            Scalar m(coef(rng));
            for (int e = expo(rng); e > 0; --e) m *= Scalar::variable(names[pick(rng)]);
            s += m;
        }
        return s;
    };
    for (int i = 0; i < 100; ++i) {
        Scalar x = random_poly(), y = random_poly(), z = random_poly();
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        EXPECT_TRUE((x - x).is_zero());
        EXPECT_EQ(Scalar::parse(x.str()), x);
    }
}

TEST(Scalar, VectorHelpers) {
    ScalarVector v{Scalar(0), Scalar(-2), P("a")};
    EXPECT_EQ(leading_sign(v), -1);
    EXPECT_EQ(vadd(v, vneg(v)), zero_vector(3));
    ScalarMatrix m{{P("a"), Scalar(1)}, {Scalar(1), P("b")}};
    EXPECT_EQ(determinant(m), P("a*b - 1"));
}
