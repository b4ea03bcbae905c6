#include "lift/lefschetz.hpp"

#include "exact/errors.hpp"

namespace tropflux {

ConstantFormX omega_class(const TropicalTorus& t) {
    int n = t.n;
    ConstantFormX w(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.add({i, n + j}, t.Q[i][j]);
    return w;
}

namespace {

ConstantFormX power(const ConstantFormX& w, int e) {
    ConstantFormX out(w.n(), 0);
    out.add({}, Scalar(1));
    for (int a = 0; a < e; ++a) out = wedge_x(out, w);
    return out;
}

Integer lcm_denominators(const std::vector<RationalVector>& rows) {
    Integer l = 1;
    for (const auto& r : rows)
        for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

RationalVector coordinates(const ConstantFormX& f, const std::vector<MultiIndex>& basis) {
    RationalVector out;
    for (const auto& b : basis) out.push_back(f.coefficient(b).constant_value());
    return out;
}

}  // namespace

LefschetzLattice lefschetz_lattice(const TropicalTorus& t) {
    if (!t.is_numeric()) throw PreconditionError("lefschetz: Q must be numeric");
    if (determinant(t.Q).is_zero()) throw PreconditionError("lefschetz: Q must be invertible");
    int n = t.n;
    LefschetzLattice out;
    out.n = n;
    out.omega = omega_class(t);

    for (int i = 1; n - 2 * i + 1 >= 0; ++i) {
        LefschetzLevel level;
        level.i = i;
        level.source_degree = n - 2 * i + 1;
        int m = level.source_degree;
        ConstantFormX w2i = power(out.omega, 2 * i);
        auto src = subsets(2 * n, m);
        std::vector<IntVector> kernel;
        if (m + 4 * i > 2 * n) {
            for (std::size_t c = 0; c < src.size(); ++c) {
                IntVector e(src.size());
                e[c] = 1;
                kernel.push_back(std::move(e));
            }
        } else {
            auto dst = subsets(2 * n, m + 4 * i);
            std::vector<RationalVector> rows(dst.size(), RationalVector(src.size()));
            for (std::size_t c = 0; c < src.size(); ++c) {
                ConstantFormX e(n, m);
                e.add(src[c], Scalar(1));
                ConstantFormX img = wedge_x(w2i, e);
                for (std::size_t r = 0; r < dst.size(); ++r) rows[r][c] = img.coefficient(dst[r]).constant_value();
            }
            Integer scale = lcm_denominators(rows);
            IntMatrix a(dst.size(), src.size());
            for (std::size_t r = 0; r < dst.size(); ++r)
                for (std::size_t c = 0; c < src.size(); ++c) {
                    Rational v = rows[r][c] * scale;
                    a(r, c) = v.get_num();
                }
            kernel = integer_kernel(a);
        }
        ConstantFormX wi = power(out.omega, i);
        for (const auto& kv : kernel) {
            ConstantFormX e(n, m);
            for (std::size_t c = 0; c < src.size(); ++c) e.add(src[c], Scalar(kv[c]));
            level.classes.push_back(wedge_x(wi, e));
        }
        level.kernel = std::move(kernel);
        out.levels.push_back(std::move(level));
    }

    auto top = subsets(2 * n, n + 1);
    std::vector<RationalVector> all;
    for (const auto& l : out.levels)
        for (const auto& c : l.classes) all.push_back(coordinates(c, top));
    out.rank = rational_rank(all);

    bool fibre_ok = !out.levels.empty();
    if (fibre_ok) {
        const auto& level1 = out.levels.front().classes;
        for (const auto& J : subsets(n, n - 1)) {
            ConstantFormX f(n, n - 1);
            MultiIndex idx;
            for (int c : J) idx.push_back(n + c);
            f.add(idx, Scalar(1));
            if (!wedge_x(power(out.omega, 2), f).is_zero()) fibre_ok = false;
            ConstantFormX target = wedge_x(out.omega, f);
            std::vector<RationalVector> cols;
            for (const auto& c : level1) cols.push_back(coordinates(c, top));
            std::vector<RationalVector> a(top.size(), RationalVector(cols.size()));
            for (std::size_t r = 0; r < top.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = cols[c][r];
            IntegerSystem sys = integralize(a, coordinates(target, top));
            if (!solve_integer(sys.a, sys.b)) fibre_ok = false;
        }
    }
    out.fibre_classes_in_level1 = fibre_ok;

    bool block = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) block = block && out.omega.coefficient({i, n + j}) == t.Q[i][j];
    for (const auto& [idx, c] : out.omega.terms()) block = block && idx[0] < n && idx[1] >= n;
    out.omega_block_is_q = block;
    return out;
}

}  // namespace tropflux
