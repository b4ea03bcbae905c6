#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/scalar.hpp"

namespace tropflux {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntVector column(std::size_t c) const;
    Integer determinant() const;  // Bareiss; square only
    bool is_diagonal() const;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

// U * M * V = S, U and V unimodular, S diagonal with d1 | d2 | ... and d_i >= 0.
struct SmithForm {
    IntMatrix U, S, V;
    std::size_t rank = 0;
    Integer diagonal(std::size_t i) const { return i < S.rows() && i < S.cols() ? S(i, i) : Integer(0); }
};

SmithForm snf(const IntMatrix& m);

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);
std::optional<RationalVector> solve_rational(const IntMatrix& a, const IntVector& b);
// Row-style Hermite normal form of the lattice spanned by `rows`; zero rows dropped.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);
// Basis of {x in Z^cols : a x = 0} in Hermite form; saturated by construction.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Smallest m >= 1 with m*b in the column span of a over Z; nullopt when b is
// not even in the rational span.
std::optional<Integer> lattice_order(const IntMatrix& a, const IntVector& b);

// Scale each row of a rational system (A | b) by the lcm of its denominators.
struct IntegerSystem {
    IntMatrix a;
    IntVector b;
    IntVector row_scale;
};
IntegerSystem integralize(const std::vector<RationalVector>& a, const RationalVector& b);

std::size_t rational_rank(std::vector<RationalVector> rows);

}  // namespace tropflux
