#include "exact/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "exact/errors.hpp"

namespace tropflux {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
        ++i;
    }
    return i < a.size() && i == b.size();
}

int grlex_compare(const Monomial& a, const Monomial& b, const std::vector<std::string>& order) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    auto exponent = [](const Monomial& m, const std::string& v) -> unsigned {
        for (const auto& [name, e] : m)
            if (name == v) return e;
        return 0;
    };
    for (const auto& v : order) {
        unsigned ea = exponent(a, v), eb = exponent(b, v);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    // variables outside the declared order fall back to the alphabetical rule
    MonomialOrder alpha;
    if (alpha(a, b)) return 1;
    if (alpha(b, a)) return -1;
    return 0;
}

Scalar::Scalar(long v) {
    if (v != 0) terms_.emplace(Monomial{}, Rational(v));
}

Scalar::Scalar(const Integer& v) {
    if (v != 0) terms_.emplace(Monomial{}, Rational(v));
}

Scalar::Scalar(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Scalar Scalar::variable(const std::string& name) {
    return monomial(Monomial{{name, 1U}}, Rational(1));
}

Scalar Scalar::monomial(const Monomial& m, const Rational& c) {
    Scalar s;
    s.add_term(m, c);
    return s;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Scalar::is_integer() const {
    return is_constant() && constant_value().get_den() == 1;
}

Rational Scalar::constant_value() const {
    if (!is_constant()) throw PreconditionError("scalar is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Integer Scalar::integer_value() const {
    Rational c = constant_value();
    if (c.get_den() != 1) throw PreconditionError("scalar is not an integer: " + str());
    return c.get_num();
}

Rational Scalar::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> Scalar::variables() const {
    std::vector<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

unsigned Scalar::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

Rational Scalar::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Scalar::content() const {
    if (terms_.empty()) return Rational(1);
    Integer num = 0, den = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(num, den);
    out.canonicalize();
    if (leading_coefficient() < 0) out = -out;
    return out;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& values) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
        Scalar term(c);
        Monomial kept;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                kept.emplace_back(v, e);
            } else {
                term *= it->second.pow(e);
            }
        }
        out += term * monomial(kept, Rational(1));
    }
    return out;
}

Scalar Scalar::pow(unsigned e) const {
    Scalar out(1L);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1U) out *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return out;
}

namespace {

std::string rational_str(const Rational& q) {
    return q.get_str();
}

std::string render(const std::vector<std::pair<Monomial, Rational>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (m.empty()) {
            s += rational_str(a);
        } else if (a == 1) {
            s += monomial_str(m);
        } else {
            s += rational_str(a) + "*" + monomial_str(m);
        }
    }
    return s;
}

}  // namespace

std::string Scalar::str() const {
    return render({terms_.begin(), terms_.end()});
}

std::string Scalar::str(const std::vector<std::string>& order) const {
    std::vector<std::pair<Monomial, Rational>> terms(terms_.begin(), terms_.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return grlex_compare(a.first, b.first, order) > 0;
    });
    return render(terms);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
}

// ---- parser ----

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Scalar run() {
        skip();
        if (pos_ == text_.size()) fail("empty expression");
        Scalar s = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("cannot parse \"" + std::string(text_) + "\" at offset " +
                         std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar s = term();
        for (;;) {
            if (accept('+')) {
                s += term();
            } else if (accept('-')) {
                s -= term();
            } else {
                return s;
            }
        }
    }

    Scalar term() {
        Scalar s = unary();
        for (;;) {
            if (accept('*')) {
                s *= unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                s *= Scalar(Rational(1) / d.constant_value());
            } else {
                return s;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 64) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (pos_ == text_.size()) fail("unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = expr();
            if (!accept(')')) fail("expected ')'");
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return Scalar::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Scalar number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string whole(text_.substr(start, pos_ - start));
        std::string frac;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t fs = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            frac = std::string(text_.substr(fs, pos_ - fs));
        }
        if (whole.empty() && frac.empty()) fail("malformed number");
        std::string digits = whole + frac;
        Integer num(digits, 10);
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return Scalar(q);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    return Parser(text).run();
}

// ---- vectors ----

std::string vector_str(const ScalarVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    MonomialOrder order;
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return order(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

bool vector_less(const ScalarVector& a, const ScalarVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
}

int leading_sign(const ScalarVector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return s.leading_coefficient() > 0 ? 1 : -1;
    return 0;
}

ScalarVector vadd(const ScalarVector& a, const ScalarVector& b) {
    ScalarVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

ScalarVector vsub(const ScalarVector& a, const ScalarVector& b) {
    ScalarVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

ScalarVector vneg(const ScalarVector& a) {
    ScalarVector out = a;
    for (auto& s : out) s = -s;
    return out;
}

ScalarVector vscale(const Scalar& s, const ScalarVector& a) {
    ScalarVector out = a;
    for (auto& x : out) x = s * x;
    return out;
}

ScalarVector zero_vector(std::size_t n) {
    return ScalarVector(n);
}

Scalar determinant(const ScalarMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return Scalar(1L);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // cofactor expansion along the first row; sizes here stay small
    Scalar det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        ScalarMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            ScalarVector row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Scalar t = m[0][c] * determinant(minor);
        if (c % 2) {
            det -= t;
        } else {
            det += t;
        }
    }
    return det;
}

}  // namespace tropflux
