#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropflux {

using Integer = mpz_class;
using Rational = mpq_class;

// Sparse exponent vector: (variable, exponent) pairs sorted by name, exponents > 0.
using Monomial = std::vector<std::pair<std::string, unsigned>>;

unsigned total_degree(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

// Graded lex with alphabetical variable order; "less" puts the larger monomial first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Graded lex comparison on an explicit variable order: >0 if a > b.
int grlex_compare(const Monomial& a, const Monomial& b, const std::vector<std::string>& order);

// Element of Q[x_1, ..., x_m].
class Scalar {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(int v) : Scalar(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Integer& v);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)

    static Scalar variable(const std::string& name);
    static Scalar monomial(const Monomial& m, const Rational& c);
    // "a*b + 3/2*c^2 - 0.5". Throws InputError.
    static Scalar parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_integer() const;
    Rational constant_value() const;  // throws unless is_constant()
    Integer integer_value() const;    // throws unless is_integer()
    Rational coefficient(const Monomial& m) const;
    const Terms& terms() const { return terms_; }
    std::vector<std::string> variables() const;
    unsigned degree() const;
    // Rational content such that *this / content has integer coprime coefficients
    // and a positive leading coefficient.
    Rational content() const;
    Rational leading_coefficient() const;

    Scalar substitute(const std::map<std::string, Scalar>& values) const;
    Scalar pow(unsigned e) const;

    std::string str() const;
    std::string str(const std::vector<std::string>& order) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;  // row-major

std::string vector_str(const ScalarVector& v);

// Total order used to sort Scalars deterministically (not a ring order).
bool scalar_less(const Scalar& a, const Scalar& b);
bool vector_less(const ScalarVector& a, const ScalarVector& b);

// Sign of the leading coefficient of the first nonzero entry; 0 for the zero vector.
int leading_sign(const ScalarVector& v);

ScalarVector vadd(const ScalarVector& a, const ScalarVector& b);
ScalarVector vsub(const ScalarVector& a, const ScalarVector& b);
ScalarVector vneg(const ScalarVector& a);
ScalarVector vscale(const Scalar& s, const ScalarVector& a);
ScalarVector zero_vector(std::size_t n);

Scalar determinant(const ScalarMatrix& m);

}  // namespace tropflux
