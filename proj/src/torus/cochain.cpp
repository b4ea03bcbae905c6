#include "torus/cochain.hpp"

#include "exact/errors.hpp"

namespace tropflux {

TropicalTorus TropicalTorus::from_matrix(const ScalarMatrix& q) {
    int n = static_cast<int>(q.size());
    for (const auto& row : q)
        if (static_cast<int>(row.size()) != n) throw PreconditionError("period matrix is not square");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (q[a][b] != q[b][a]) throw PreconditionError("period matrix is not symmetric");
    return TropicalTorus{n, q};
}

ScalarVector TropicalTorus::column(int c) const {
    ScalarVector v(n);
    for (int r = 0; r < n; ++r) v[r] = Q[r][c];
    return v;
}

std::vector<ScalarVector> TropicalTorus::lattice() const {
    std::vector<ScalarVector> cols;
    for (int c = 0; c < n; ++c) cols.push_back(column(c));
    return cols;
}

bool TropicalTorus::is_numeric() const {
    for (const auto& row : Q)
        for (const auto& s : row)
            if (!s.is_constant()) return false;
    return true;
}

ConstantCochain::ConstantCochain(int n, int j, int k) : n_(n), j_(j), k_(k) {
    if (n < 0 || j < 0 || k < 0 || j > n || k > n) throw PreconditionError("cochain degrees out of range");
}

void ConstantCochain::add(const MultiIndex& K, const MultiIndex& J, const Scalar& c) {
    if (static_cast<int>(K.size()) != k_ || static_cast<int>(J.size()) != j_ || !is_multi_index(K) ||
        !is_multi_index(J) || (!K.empty() && K.back() >= n_) || (!J.empty() && J.back() >= n_))
        throw PreconditionError("cochain key does not match bidegree");
    if (c.is_zero()) return;
    Key key{K, J};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar ConstantCochain::coefficient(const MultiIndex& K, const MultiIndex& J) const {
    auto it = terms_.find({K, J});
    return it == terms_.end() ? Scalar() : it->second;
}

std::string ConstantCochain::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        std::string coef = c.str();
        bool neg = !coef.empty() && coef[0] == '-' && c.is_constant();
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (neg) coef = coef.substr(1);
        if (coef != "1") s += "(" + coef + ")";
        s += "e*" + index_str(key.first) + "(x)dx" + index_str(key.second);
    }
    return s;
}

ConstantCochain determinantal_form(int n, int j, int k) {
    if (j < 0 || k < 0 || j + k > n) throw PreconditionError("determinantal form needs j + k <= n");
    ConstantCochain omega(n, j, k);
    for (const auto& I : subsets(n, j + k)) {
        for (const auto& pos : subsets(j + k, k)) {
            MultiIndex K, S;
            std::size_t p = 0;
            for (int a = 0; a < j + k; ++a) {
                if (p < pos.size() && pos[p] == a) {
                    K.push_back(I[a]);
                    ++p;
                } else {
                    S.push_back(I[a]);
                }
            }
            std::vector<int> target = K;
            target.insert(target.end(), S.begin(), S.end());
            omega.add(K, S, Scalar(perm_sign(I, target)));
        }
    }
    return omega;
}

Scalar column_minor(const std::vector<ScalarVector>& vectors, const MultiIndex& rows) {
    if (rows.size() != vectors.size()) throw PreconditionError("minor must be square");
    ScalarMatrix m(rows.size(), ScalarVector(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < vectors.size(); ++c) m[r][c] = vectors[c][rows[r]];
    return determinant(m);
}

Scalar matrix_minor(const ScalarMatrix& q, const MultiIndex& rows, const MultiIndex& cols) {
    if (rows.size() != cols.size()) throw PreconditionError("minor must be square");
    ScalarMatrix m(rows.size(), ScalarVector(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = q[rows[r]][cols[c]];
    return determinant(m);
}

Scalar evaluate_form(const ConstantCochain& omega, const ExteriorElement& coframe,
                     const std::vector<ScalarVector>& vectors) {
    if (coframe.degree() != omega.k() || static_cast<int>(vectors.size()) != omega.j())
        throw PreconditionError("evaluate_form: degrees do not match the form");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != omega.n()) throw PreconditionError("evaluate_form: wrong dimension");
    Scalar total;
    for (const auto& [key, c] : omega.terms()) {
        Scalar f = coframe.coefficient(key.first);
        if (f.is_zero()) continue;
        total += c * f * column_minor(vectors, key.second);
    }
    return total;
}

}  // namespace tropflux
