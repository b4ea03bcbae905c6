#include "lift/forms.hpp"

#include "exact/errors.hpp"

namespace tropflux {

ConstantFormX::ConstantFormX(int n, int degree) : n_(n), degree_(degree) {
    if (n < 0 || degree < 0) throw PreconditionError("form degree out of range");
}

Scalar ConstantFormX::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar() : it->second;
}

void ConstantFormX::add(const MultiIndex& i, const Scalar& c) {
    if (static_cast<int>(i.size()) != degree_ || !is_multi_index(i) || (!i.empty() && i.back() >= 2 * n_))
        throw PreconditionError("form index does not match degree");
    if (c.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ConstantFormX& ConstantFormX::operator+=(const ConstantFormX& o) {
    if (o.n_ != n_ || (o.degree_ != degree_ && !o.is_zero())) throw PreconditionError("adding forms of different degree");
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

ConstantFormX& ConstantFormX::operator-=(const ConstantFormX& o) {
    if (o.n_ != n_ || (o.degree_ != degree_ && !o.is_zero())) throw PreconditionError("subtracting forms of different degree");
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
}

ConstantFormX operator*(const Scalar& s, const ConstantFormX& a) {
    ConstantFormX out(a.n_, a.degree_);
    for (const auto& [i, c] : a.terms_) out.add(i, s * c);
    return out;
}

std::string ConstantFormX::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : terms_) {
        std::string coef = c.str();
        bool neg = c.is_constant() && c.constant_value() < 0;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (neg) coef = coef.substr(1);
        std::string mono;
        for (int x : idx) {
            if (!mono.empty()) mono += "^";
            mono += x < n_ ? "dx" + std::to_string(x + 1) : "dp" + std::to_string(x - n_ + 1);
        }
        if (mono.empty()) {
            s += coef;
        } else {
            if (coef != "1") s += (c.is_constant() ? coef : "(" + coef + ")") + "*";
            s += mono;
        }
    }
    return s;
}

ConstantFormX symplectic_form(int n) {
    ConstantFormX w(n, 2);
    for (int i = 0; i < n; ++i) w.add({i, n + i}, Scalar(1));
    return w;
}

ConstantFormX symplectic_form(const TropicalTorus& t) {
    return symplectic_form(t.n);
}

ConstantFormX wedge_x(const ConstantFormX& a, const ConstantFormX& b) {
    if (a.n() != b.n()) throw PreconditionError("wedge_x: forms live on different spaces");
    ConstantFormX out(a.n(), a.degree() + b.degree());
    if (a.degree() + b.degree() > 2 * a.n()) return out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            int s = merge_sign(ia, ib);
            if (s == 0) continue;
            Scalar c = ca * cb;
            out.add(merged(ia, ib), s > 0 ? c : -c);
        }
    return out;
}

ConstantFormX omega_power(int n, int j) {
    ConstantFormX out(n, 0);
    out.add({}, Scalar(1));
    ConstantFormX w = symplectic_form(n);
    for (int a = 0; a < j; ++a) out = wedge_x(out, w);
    return out;
}

ConstantFormX omega_power(const TropicalTorus& t, int j) {
    return omega_power(t.n, j);
}

int fibre_sign(int n, const MultiIndex& K, int j) {
    int k = static_cast<int>(K.size());
    int s = merge_sign(K, complement(K, n));
    if ((j * (j - 1) / 2 + j * (n - k)) % 2) s = -s;
    return s;
}

namespace {

MultiIndex p_block(const MultiIndex& idx, int n) {
    MultiIndex out;
    for (int c : idx) out.push_back(n + c);
    return out;
}

}  // namespace

ConstantFormX psi_hat(const ConstantCochain& omega) {
    int n = omega.n(), j = omega.j(), k = omega.k();
    ConstantFormX out(n, j + n - k);
    for (const auto& [key, c] : omega.terms()) {
        const auto& [K, J] = key;
        // dx_J ^ dp_{K^c} is already in coordinate order
        MultiIndex idx = J;
        MultiIndex p = p_block(complement(K, n), n);
        idx.insert(idx.end(), p.begin(), p.end());
        out.add(idx, Scalar(fibre_sign(n, K, j)) * c);
    }
    return out;
}

ConstantFormX psi_hat_closed_form(int n, int j, int k) {
    if (j < 0 || k < 0 || j + k > n) throw PreconditionError("closed form needs j + k <= n");
    ConstantFormX wj = omega_power(n, j);
    Integer fact = 1;
    for (int a = 2; a <= j; ++a) fact *= a;
    Scalar scale(Rational(Integer(1), fact));
    ConstantFormX out(n, j + n - k);
    for (const auto& I : subsets(n, j + k)) {
        MultiIndex Ic = complement(I, n);
        ConstantFormX vol(n, n - j - k);
        vol.add(p_block(Ic, n), Scalar(1));
        int s = merge_sign(I, Ic);
        if ((j * (n - k)) % 2) s = -s;
        out += Scalar(s) * scale * wedge_x(vol, wj);
    }
    return out;
}

std::vector<ScalarVector> lattice_x(const TropicalTorus& t) {
    int n = t.n;
    std::vector<ScalarVector> out;
    for (int i = 0; i < n; ++i) {
        ScalarVector v = t.column(i);
        v.resize(2 * n);
        out.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i) {
        ScalarVector v(2 * n);
        v[n + i] = Scalar(1);
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

ScalarVector lift_x(const ScalarVector& v, int n) {
    ScalarVector out = v;
    out.resize(2 * n);
    return out;
}

ScalarVector lift_p(const IntVector& v, int n) {
    ScalarVector out(2 * n);
    for (int i = 0; i < n; ++i) out[n + i] = Scalar(v[i]);
    return out;
}

FramedCell unit_framed(ScalarVector base, std::vector<ScalarVector> spans, Integer weight) {
    return FramedCell{std::move(base), std::move(spans), std::move(weight), ExteriorElement::one(),
                      {PureWedge{1, {}}}};
}

void standard_cells(const FramedCell& cell, int n, FramedChain& out) {
    int j = cell.dim();
    for (const auto& [K, beta] : cell.framing.terms()) {
        if (!beta.is_integer()) throw PreconditionError("phi_hat: framing has non-integer coefficients");
        std::vector<ScalarVector> spans;
        for (const auto& v : cell.spans) spans.push_back(lift_x(v, n));
        for (int c : complement(K, n)) {
            IntVector e(n);
            e[c] = 1;
            spans.push_back(lift_p(e, n));
        }
        Integer w = cell.weight * beta.integer_value() * fibre_sign(n, K, j);
        out.cells.push_back(unit_framed(lift_x(cell.base, n), std::move(spans), w));
    }
}

// Annihilator basis of the factors, scaled so the wedge matches the dual framing.
void conormal_cells(const FramedCell& cell, int n, int k, FramedChain& out) {
    int j = cell.dim();
    int eps = ((j * (j - 1) / 2 + j * (n - k)) % 2) ? -1 : 1;
    for (const auto& pw : cell.factors) {
        ExteriorElement beta = Scalar(pw.coefficient) * ExteriorElement::pure(pw.factors);
        if (beta.is_zero()) continue;
        ExteriorElement target(n - k);
        for (const auto& [K, b] : beta.terms()) target.add(complement(K, n), Scalar(merge_sign(K, complement(K, n))) * b);
        IntMatrix rows(pw.factors.size(), n);
        for (std::size_t r = 0; r < pw.factors.size(); ++r)
            for (int c = 0; c < n; ++c) rows(r, c) = pw.factors[r][c];
        std::vector<IntVector> alpha = integer_kernel(rows);
        ExteriorElement a = ExteriorElement::pure(alpha);
        const auto& [key, av] = *a.terms().begin();
        Scalar lambda = target.coefficient(key) * Scalar(Rational(1) / av.constant_value());
        if (!lambda.is_integer() || lambda * a != target)
            throw PreconditionError("phi_hat: framing factor has no integral conormal lift");
        std::vector<ScalarVector> spans;
        for (const auto& v : cell.spans) spans.push_back(lift_x(v, n));
        for (const auto& v : alpha) spans.push_back(lift_p(v, n));
        Integer w = cell.weight * lambda.integer_value() * eps;
        out.cells.push_back(unit_framed(lift_x(cell.base, n), std::move(spans), w));
    }
}

}  // namespace

FramedChain phi_hat(const FramedChain& c, const TropicalTorus& t, Decomposition d) {
    int n = c.n;
    if (t.n != n) throw PreconditionError("phi_hat: chain and torus dimensions differ");
    FramedChain out(2 * n, c.j + n - c.k, 0, lattice_x(t));
    for (const auto& cell : c.cells) {
        if (!cell.framing.has_integer_coefficients())
            throw PreconditionError("phi_hat: framing has no integer pure-wedge decomposition");
        if (d == Decomposition::Conormal && !cell.factors.empty()) {
            conormal_cells(cell, n, c.k, out);
        } else {
            standard_cells(cell, n, out);
        }
    }
    return out;
}

FramedChain x_shadow(const FramedChain& cx, int n) {
    int j = -1;
    FramedChain out;
    for (const auto& cell : cx.cells) {
        FramedCell s;
        s.base.assign(cell.base.begin(), cell.base.begin() + n);
        for (const auto& v : cell.spans) {
            bool x_zero = true, p_zero = true;
            for (int c = 0; c < n; ++c) x_zero = x_zero && v[c].is_zero();
            for (int c = n; c < 2 * n; ++c) p_zero = p_zero && v[c].is_zero();
            if (x_zero && !p_zero) continue;
            s.spans.emplace_back(v.begin(), v.begin() + n);
        }
        s.weight = cell.weight;
        s.framing = ExteriorElement::one();
        j = s.dim();
        out.cells.push_back(std::move(s));
    }
    out.n = n;
    out.j = j < 0 ? 0 : j;
    return out;
}

Scalar integrate_x(const ConstantFormX& alpha, const FramedChain& cx) {
    Scalar total;
    for (const auto& cell : cx.cells) {
        if (cell.dim() != alpha.degree()) throw PreconditionError("integrate_x: form degree != cell dimension");
        Scalar unit = cell.framing.coefficient({});
        if (unit.is_zero()) continue;
        Scalar sum;
        for (const auto& [idx, c] : alpha.terms()) sum += c * column_minor(cell.spans, idx);
        total += Scalar(cell.weight) * unit * sum;
    }
    return total;
}

PairingResult pairing(const FramedChain& c, const ConstantCochain& omega, const TropicalTorus& t, Decomposition d) {
    PairingResult r;
    r.tropical = integrate(omega, c);
    r.symplectic = integrate_x(psi_hat(omega), phi_hat(c, t, d));
    r.holds = r.tropical == r.symplectic;
    return r;
}

bool pairing_check(const FramedChain& c, const ConstantCochain& omega, const TropicalTorus& t) {
    return pairing(c, omega, t).holds;
}

PeriodGroup symplectic_period_group(const ConstantFormX& alpha, const TropicalTorus& t) {
    int n = t.n;
    if (alpha.n() != n || alpha.degree() > 2 * n) throw PreconditionError("symplectic_period_group: bad degree");
    std::vector<ScalarVector> basis = lattice_x(t);
    std::vector<Scalar> gens;
    for (const auto& S : subsets(2 * n, alpha.degree())) {
        std::vector<ScalarVector> spans;
        for (int s : S) spans.push_back(basis[s]);
        Scalar v;
        for (const auto& [idx, c] : alpha.terms()) v += c * column_minor(spans, idx);
        gens.push_back(v);
    }
    return PeriodGroup(gens);
}

}  // namespace tropflux
