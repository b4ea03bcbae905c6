#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "exact/exterior.hpp"
#include "exact/scalar.hpp"

namespace tropflux {

// B(Q) = R^n / Q Z^n with integral structure Z^n.
struct TropicalTorus {
    int n = 0;
    ScalarMatrix Q;

    static TropicalTorus from_matrix(const ScalarMatrix& q);  // checks square + symmetric
    ScalarVector column(int c) const;
    std::vector<ScalarVector> lattice() const;  // the n columns of Q
    bool is_numeric() const;
};

// Sum of c * e*_K (x) dx_J with |K| = k, |J| = j.
class ConstantCochain {
public:
    using Key = std::pair<MultiIndex, MultiIndex>;  // (K, J)

    ConstantCochain(int n, int j, int k);

    int n() const { return n_; }
    int j() const { return j_; }
    int k() const { return k_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add(const MultiIndex& K, const MultiIndex& J, const Scalar& c);
    Scalar coefficient(const MultiIndex& K, const MultiIndex& J) const;
    std::string str() const;

    friend bool operator==(const ConstantCochain& a, const ConstantCochain& b) {
        return a.n_ == b.n_ && a.j_ == b.j_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }

private:
    int n_, j_, k_;
    std::map<Key, Scalar> terms_;
};

ConstantCochain determinantal_form(int n, int j, int k);

// det of rows `rows` of the matrix whose columns are `vectors`
Scalar column_minor(const std::vector<ScalarVector>& vectors, const MultiIndex& rows);
// det of Q[rows, cols]
Scalar matrix_minor(const ScalarMatrix& q, const MultiIndex& rows, const MultiIndex& cols);

Scalar evaluate_form(const ConstantCochain& omega, const ExteriorElement& coframe,
                     const std::vector<ScalarVector>& vectors);

}  // namespace tropflux
