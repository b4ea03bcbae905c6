#include "exact/exterior.hpp"

#include <algorithm>

#include "exact/errors.hpp"

namespace tropflux {

bool is_multi_index(const MultiIndex& i) {
    for (std::size_t a = 1; a < i.size(); ++a)
        if (i[a - 1] >= i[a]) return false;
    return i.empty() || i[0] >= 0;
}

std::string index_str(const MultiIndex& i) {
    std::string s = "(";
    for (std::size_t a = 0; a < i.size(); ++a) {
        if (a) s += ",";
        s += std::to_string(i[a] + 1);
    }
    return s + ")";
}

MultiIndex complement(const MultiIndex& i, int n) {
    MultiIndex out;
    std::size_t a = 0;
    for (int x = 0; x < n; ++x) {
        if (a < i.size() && i[a] == x) {
            ++a;
        } else {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<MultiIndex> subsets(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    MultiIndex cur(k);
    for (int a = 0; a < k; ++a) cur[a] = a;
    for (;;) {
        out.push_back(cur);
        int a = k - 1;
        while (a >= 0 && cur[a] == n - k + a) --a;
        if (a < 0) break;
        ++cur[a];
        for (int b = a + 1; b < k; ++b) cur[b] = cur[b - 1] + 1;
    }
    return out;
}

int perm_sign(const std::vector<int>& src, const std::vector<int>& dst) {
    if (src.size() != dst.size()) throw PreconditionError("perm_sign: length mismatch");
    std::vector<std::size_t> pos(dst.size());
    std::vector<bool> used(src.size(), false);
    for (std::size_t a = 0; a < dst.size(); ++a) {
        std::size_t b = 0;
        while (b < src.size() && (used[b] || src[b] != dst[a])) ++b;
        if (b == src.size()) throw PreconditionError("perm_sign: not a permutation");
        used[b] = true;
        pos[a] = b;
    }
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = a + 1; b < pos.size(); ++b)
            if (pos[a] > pos[b]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

int merge_sign(const MultiIndex& a, const MultiIndex& b) {
    std::size_t inversions = 0;
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j < b.size() && b[j] == x) return 0;
        inversions += j;
    }
    return inversions % 2 ? -1 : 1;
}

MultiIndex merged(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ExteriorElement ExteriorElement::one() {
    ExteriorElement e(0);
    e.add({}, Scalar(1));
    return e;
}

ExteriorElement ExteriorElement::basis(const MultiIndex& i) {
    if (!is_multi_index(i)) throw PreconditionError("basis: index not strictly increasing");
    ExteriorElement e(static_cast<int>(i.size()));
    e.add(i, Scalar(1));
    return e;
}

ExteriorElement ExteriorElement::vector(const ScalarVector& v) {
    ExteriorElement e(1);
    for (std::size_t a = 0; a < v.size(); ++a) e.add({static_cast<int>(a)}, v[a]);
    return e;
}

ExteriorElement ExteriorElement::vector(const IntVector& v) {
    ExteriorElement e(1);
    for (std::size_t a = 0; a < v.size(); ++a) e.add({static_cast<int>(a)}, Scalar(v[a]));
    return e;
}

ExteriorElement ExteriorElement::pure(const std::vector<IntVector>& factors) {
    ExteriorElement e = one();
    for (const auto& f : factors) e = wedge(e, vector(f));
    return e;
}

Scalar ExteriorElement::coefficient(const MultiIndex& i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar() : it->second;
}

bool ExteriorElement::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

void ExteriorElement::add(const MultiIndex& i, const Scalar& c) {
    if (static_cast<int>(i.size()) != degree_) throw PreconditionError("exterior degree mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_.emplace(i, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
}

ExteriorElement ExteriorElement::operator-() const {
    ExteriorElement out(degree_);
    for (const auto& [i, c] : terms_) out.terms_.emplace(i, -c);
    return out;
}

ExteriorElement operator*(const Scalar& s, const ExteriorElement& a) {
    ExteriorElement out(a.degree_);
    if (s.is_zero()) return out;
    for (const auto& [i, c] : a.terms_) out.add(i, s * c);
    return out;
}

std::string ExteriorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")e" + index_str(i);
    }
    return s;
}

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
    ExteriorElement out(u.degree() + v.degree());
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            int s = merge_sign(a, b);
            if (s == 0) continue;
            Scalar c = ca * cb;
            out.add(merged(a, b), s > 0 ? c : -c);
        }
    return out;
}

}  // namespace tropflux
