#include "exact/lattice.hpp"

#include <utility>

#include "exact/errors.hpp"

namespace tropflux {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw PreconditionError("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix dimension mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw PreconditionError("matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += (*this)(i, j).get_str();
        }
        s += "]";
    }
    return s + "]";
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()), 0};
    IntMatrix& S = f.S;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing block becomes the pivot
            bool found = false;
            std::size_t pr = t, pc = t;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (S(i, j) == 0) continue;
                    Integer a = abs(S(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (!found) {
                f.rank = t;
                return f;
            }
            swap_rows(S, t, pr);
            swap_rows(f.U, t, pr);
            swap_cols(S, t, pc);
            swap_cols(f.V, t, pc);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (S(i, t) == 0) continue;
                Integer q = tdiv(S(i, t), S(t, t));
                row_axpy(S, i, t, q);
                row_axpy(f.U, i, t, q);
                if (S(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (S(t, j) == 0) continue;
                Integer q = tdiv(S(t, j), S(t, t));
                col_axpy(S, j, t, q);
                col_axpy(f.V, j, t, q);
                if (S(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            // pull the offending row into row t; the next pass shrinks the pivot
            row_axpy(S, t, bad, Integer(-1));
            row_axpy(f.U, t, bad, Integer(-1));
        }
        if (S(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) S(t, j) = -S(t, j);
            for (std::size_t j = 0; j < rows; ++j) f.U(t, j) = -f.U(t, j);
        }
    }
    f.rank = t;
    return f;
}

namespace {

// c = U b for the SNF of a; returns false if the system has no rational solution.
bool transformed_rhs(const SmithForm& f, const IntVector& b, IntVector& c) {
    c = f.U * b;
    for (std::size_t i = f.rank; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw PreconditionError("solve_integer: dimension mismatch");
    SmithForm f = snf(a);
    IntVector c;
    if (!transformed_rhs(f, b, c)) return std::nullopt;
    IntVector y(a.cols());
    for (std::size_t i = 0; i < f.rank; ++i) {
        const Integer& d = f.S(i, i);
        if (c[i] % d != 0) return std::nullopt;
        y[i] = c[i] / d;
    }
    return f.V * y;
}

std::optional<RationalVector> solve_rational(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw PreconditionError("solve_rational: dimension mismatch");
    SmithForm f = snf(a);
    IntVector c;
    if (!transformed_rhs(f, b, c)) return std::nullopt;
    RationalVector y(a.cols());
    for (std::size_t i = 0; i < f.rank; ++i) {
        y[i] = Rational(c[i], f.S(i, i));
        y[i].canonicalize();
    }
    RationalVector x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) x[i] += Rational(f.V(i, j)) * y[j];
    return x;
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
    if (rows.empty()) return rows;
    std::size_t n = rows[0].size(), pivot = 0;
    for (std::size_t col = 0; col < n && pivot < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[pivot], rows[best]);
            bool done = true;
            for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
                for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivot][col] == 0) continue;
        if (rows[pivot][col] < 0)
            for (auto& x : rows[pivot]) x = -x;
        for (std::size_t r = 0; r < pivot; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
            for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[pivot][c];
        }
        ++pivot;
    }
    rows.resize(pivot);
    return rows;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    SmithForm f = snf(a);
    std::vector<IntVector> basis;
    for (std::size_t j = f.rank; j < a.cols(); ++j) basis.push_back(f.V.column(j));
    return hermite_rows(std::move(basis));
}

std::optional<Integer> lattice_order(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw PreconditionError("lattice_order: dimension mismatch");
    SmithForm f = snf(a);
    IntVector c;
    if (!transformed_rhs(f, b, c)) return std::nullopt;
    Integer m = 1;
    for (std::size_t i = 0; i < f.rank; ++i) {
        const Integer& d = f.S(i, i);
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c[i].get_mpz_t());
        Integer need = d / g;
        mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), need.get_mpz_t());
    }
    return m;
}

IntegerSystem integralize(const std::vector<RationalVector>& a, const RationalVector& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    IntegerSystem out{IntMatrix(rows, cols), IntVector(rows), IntVector(rows)};
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = b[i].get_den();
        for (const auto& q : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = a[i][j] * Rational(l);
            out.a(i, j) = s.get_num();
        }
        Rational s = b[i] * Rational(l);
        out.b[i] = s.get_num();
        out.row_scale[i] = l;
    }
    return out;
}

std::size_t rational_rank(std::vector<RationalVector> rows) {
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational q = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace tropflux
