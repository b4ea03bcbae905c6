#include "lift/sampling.hpp"

namespace tropflux {

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

TropicalTorus random_torus(Rng& rng, int n, int bound) {
    ScalarMatrix q(n, ScalarVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) q[i][j] = q[j][i] = Scalar(uniform_int(rng, -bound, bound));
    return TropicalTorus::from_matrix(q);
}

ConstantCochain random_cochain(Rng& rng, int n, int j, int k, int bound) {
    ConstantCochain w(n, j, k);
    for (const auto& K : subsets(n, k))
        for (const auto& J : subsets(n, j)) w.add(K, J, Scalar(uniform_int(rng, -bound, bound)));
    return w;
}

std::vector<ScalarVector> random_vectors(Rng& rng, int n, int count, int bound) {
    std::vector<ScalarVector> out;
    for (int c = 0; c < count; ++c) {
        ScalarVector v(n);
        for (auto& x : v) x = Scalar(uniform_int(rng, -bound, bound));
        out.push_back(std::move(v));
    }
    return out;
}

FramedChain random_framed_chain(Rng& rng, const TropicalTorus& t, int j, int k, int max_cells) {
    int n = t.n;
    FramedChain c(n, j, k, t.lattice());
    int cells = uniform_int(rng, 1, max_cells);
    for (int a = 0; a < cells; ++a) {
        ScalarVector base(n);
        for (auto& x : base) {
            Rational r(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3));
            r.canonicalize();
            x = Scalar(r);
        }
        std::vector<PureWedge> framing;
        int summands = uniform_int(rng, 1, 2);
        for (int s = 0; s < summands; ++s) {
            PureWedge pw;
            pw.coefficient = uniform_int(rng, -2, 2);
            for (int f = 0; f < k; ++f) {
                IntVector u(n);
                for (auto& x : u) x = uniform_int(rng, -2, 2);
                pw.factors.push_back(std::move(u));
            }
            framing.push_back(std::move(pw));
        }
        int w = uniform_int(rng, 1, 3) * (uniform_int(rng, 0, 1) ? 1 : -1);
        c.add(make_cell(std::move(base), random_vectors(rng, n, j), w, std::move(framing)));
    }
    return c;
}

}  // namespace tropflux
