#include "chains/chain.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "exact/errors.hpp"

namespace tropflux {

std::string FramedCell::str() const {
    std::string s = "[" + vector_str(base) + ";";
    for (std::size_t i = 0; i < spans.size(); ++i) s += (i ? ", " : " ") + vector_str(spans[i]);
    s += "] weight " + weight.get_str() + " framing " + framing.str();
    return s;
}

ExteriorElement expand(const std::vector<PureWedge>& factors, int k) {
    ExteriorElement total(k);
    for (const auto& w : factors) {
        if (static_cast<int>(w.factors.size()) != k) throw PreconditionError("framing factor count != framing degree");
        total += Scalar(w.coefficient) * ExteriorElement::pure(w.factors);
    }
    return total;
}

FramedCell make_cell(ScalarVector base, std::vector<ScalarVector> spans, Integer weight,
                     std::vector<PureWedge> factors) {
    int k = factors.empty() ? 0 : static_cast<int>(factors[0].factors.size());
    FramedCell c{std::move(base), std::move(spans), std::move(weight), ExteriorElement(k), std::move(factors)};
    c.framing = expand(c.factors, k);
    return c;
}

void FramedChain::add(FramedCell cell) {
    if (cell.dim() != j) throw PreconditionError("cell dimension does not match chain degree");
    if (static_cast<int>(cell.base.size()) != n) throw PreconditionError("cell base has wrong dimension");
    for (const auto& v : cell.spans)
        if (static_cast<int>(v.size()) != n) throw PreconditionError("spanning vector has wrong dimension");
    if (!cell.framing.is_zero() && cell.framing.degree() != k)
        throw PreconditionError("framing degree does not match chain");
    if (cell.framing.is_zero()) cell.framing = ExteriorElement(k);
    cells.push_back(std::move(cell));
}

FramedChain FramedChain::operator-() const {
    FramedChain out = *this;
    for (auto& c : out.cells) c.weight = -c.weight;
    return out;
}

FramedChain& FramedChain::operator+=(const FramedChain& o) {
    if (o.n != n || o.j != j || o.k != k) throw PreconditionError("adding chains of different degrees");
    cells.insert(cells.end(), o.cells.begin(), o.cells.end());
    return *this;
}

std::string FramedChain::str() const {
    if (cells.empty()) return "0";
    std::string s;
    for (const auto& c : cells) s += c.str() + "\n";
    return s;
}

FramedChain boundary(const FramedChain& c) {
    if (c.j < 1) throw PreconditionError("boundary of a 0-chain");
    FramedChain out(c.n, c.j - 1, c.k, c.lattice);
    for (const auto& cell : c.cells) {
        for (int i = 0; i < cell.dim(); ++i) {
            std::vector<ScalarVector> rest;
            for (int a = 0; a < cell.dim(); ++a)
                if (a != i) rest.push_back(cell.spans[a]);
            Integer sign = i % 2 ? -1 : 1;
            FramedCell far{vadd(cell.base, cell.spans[i]), rest, sign * cell.weight, cell.framing, cell.factors};
            FramedCell near{cell.base, rest, -sign * cell.weight, cell.framing, cell.factors};
            out.cells.push_back(std::move(far));
            out.cells.push_back(std::move(near));
        }
    }
    return out;
}

std::optional<IntVector> lattice_translation(const std::vector<ScalarVector>& lattice, const ScalarVector& diff) {
    std::size_t n = diff.size();
    std::size_t m = lattice.size();
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<Monomial, MonomialOrder> monos;
        for (const auto& [mono, c] : diff[i].terms()) monos.insert(mono);
        for (const auto& col : lattice)
            for (const auto& [mono, c] : col[i].terms()) monos.insert(mono);
        for (const auto& mono : monos) {
            RationalVector row(m);
            for (std::size_t c = 0; c < m; ++c) row[c] = lattice[c][i].coefficient(mono);
            rows.push_back(std::move(row));
            rhs.push_back(diff[i].coefficient(mono));
        }
    }
    if (rows.empty()) return IntVector(m);
    if (m == 0) return std::nullopt;
    IntegerSystem sys = integralize(rows, rhs);
    return solve_integer(sys.a, sys.b);
}

namespace {

struct Canonical {
    ScalarVector base;
    std::vector<ScalarVector> spans;
    int sign = 1;
};

Canonical canonical(const FramedCell& cell) {
    Canonical c{cell.base, cell.spans, 1};
    for (auto& v : c.spans) {
        if (leading_sign(v) < 0) {
            c.base = vadd(c.base, v);
            v = vneg(v);
            c.sign = -c.sign;
        }
    }
    std::vector<int> order(c.spans.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return vector_less(c.spans[a], c.spans[b]); });
    std::vector<int> ident(order.size());
    std::iota(ident.begin(), ident.end(), 0);
    c.sign *= perm_sign(ident, order);
    std::vector<ScalarVector> sorted;
    for (int a : order) sorted.push_back(c.spans[a]);
    c.spans = std::move(sorted);
    return c;
}

}  // namespace

FramedChain reduce_mod_lattice(const FramedChain& c) {
    struct Entry {
        Canonical shape;
        ExteriorElement coefficient;
        std::vector<std::size_t> sources;
    };
    std::vector<Entry> entries;
    for (std::size_t idx = 0; idx < c.cells.size(); ++idx) {
        const FramedCell& cell = c.cells[idx];
        Canonical shape = canonical(cell);
        ExteriorElement coef = Scalar(Integer(shape.sign * cell.weight)) * cell.framing;
        bool merged = false;
        for (auto& e : entries) {
            if (e.shape.spans != shape.spans) continue;
            if (!lattice_translation(c.lattice, vsub(shape.base, e.shape.base))) continue;
            e.coefficient += coef;
            e.sources.push_back(idx);
            merged = true;
            break;
        }
        if (!merged) entries.push_back(Entry{std::move(shape), coef, {idx}});
    }
    FramedChain out(c.n, c.j, c.k, c.lattice);
    for (auto& e : entries) {
        if (e.coefficient.is_zero()) continue;
        if (e.sources.size() == 1) {
            const FramedCell& src = c.cells[e.sources[0]];
            out.cells.push_back(FramedCell{e.shape.base, e.shape.spans, e.shape.sign * src.weight,
                                           src.framing, src.factors});
        } else {
            out.cells.push_back(FramedCell{e.shape.base, e.shape.spans, 1, e.coefficient, {}});
        }
    }
    return out;
}

bool equal_mod_lattice(const FramedChain& a, const FramedChain& b) {
    return reduce_mod_lattice(a - b).empty();
}

FramedChain tautological_cycle(int n, const std::vector<TautologicalCell>& cells,
                               const std::vector<ScalarVector>& lattice) {
    int k = cells.empty() ? 0 : static_cast<int>(cells[0].directions.size());
    FramedChain out(n, k, k, lattice);
    for (const auto& t : cells) {
        if (static_cast<int>(t.directions.size()) != k || t.lengths.size() != t.directions.size())
            throw PreconditionError("tautological cell: inconsistent spanning data");
        std::vector<ScalarVector> spans;
        for (std::size_t i = 0; i < t.directions.size(); ++i) {
            const IntVector& d = t.directions[i];
            if (static_cast<int>(d.size()) != n) throw PreconditionError("tautological cell: wrong dimension");
            Integer g = 0;
            for (const auto& x : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g != 1) throw PreconditionError("tautological cell: direction is not primitive");
            ScalarVector v(n);
            for (int a = 0; a < n; ++a) v[a] = t.lengths[i] * Scalar(d[a]);
            spans.push_back(std::move(v));
        }
        FramedCell cell = make_cell(t.base, std::move(spans), t.weight, {PureWedge{1, t.directions}});
        if (cell.framing.is_zero()) throw PreconditionError("tautological cell: dependent directions");
        out.add(std::move(cell));
    }
    return out;
}

Scalar integrate_cell(const ConstantCochain& omega, const FramedCell& cell) {
    Scalar total;
    for (const auto& [key, c] : omega.terms()) {
        Scalar f = cell.framing.coefficient(key.first);
        if (f.is_zero()) continue;
        total += c * f * column_minor(cell.spans, key.second);
    }
    return Scalar(cell.weight) * total;
}

Scalar integrate(const ConstantCochain& omega, const FramedChain& c) {
    if (c.cells.empty()) return Scalar();
    if (omega.n() != c.n || omega.j() != c.j || omega.k() != c.k)
        throw PreconditionError("integrate: form bidegree does not match the chain");
    Scalar total;
    for (const auto& cell : c.cells) total += integrate_cell(omega, cell);
    return total;
}

bool vectors_dependent(const std::vector<ScalarVector>& vectors) {
    if (vectors.empty()) return false;
    int n = static_cast<int>(vectors[0].size());
    int m = static_cast<int>(vectors.size());
    if (m > n) return true;
    for (const auto& rows : subsets(n, m))
        if (!column_minor(vectors, rows).is_zero()) return false;
    return true;
}

bool is_pointwise_degenerate(const FramedCell& cell, const ConstantCochain& omega) {
    if (cell.factors.empty()) throw PreconditionError("framing has no recorded factorization");
    if (omega.j() != cell.dim() || omega.k() != cell.framing.degree())
        throw PreconditionError("cell does not match the form bidegree");
    for (const auto& w : cell.factors) {
        std::vector<ScalarVector> all;
        for (const auto& u : w.factors) {
            ScalarVector v;
            for (const auto& x : u) v.emplace_back(x);
            all.push_back(std::move(v));
        }
        all.insert(all.end(), cell.spans.begin(), cell.spans.end());
        if (!vectors_dependent(all)) return false;
    }
    return true;
}

FramedChain translate(const FramedChain& c, const ScalarVector& shift) {
    FramedChain out = c;
    for (auto& cell : out.cells) cell.base = vadd(cell.base, shift);
    return out;
}

FramedChain subdivide(const FramedChain& c, int axis) {
    FramedChain out(c.n, c.j, c.k, c.lattice);
    Scalar half(Rational(1, 2));
    for (const auto& cell : c.cells) {
        FramedCell a = cell;
        a.spans[axis] = vscale(half, cell.spans[axis]);
        FramedCell b = a;
        b.base = vadd(cell.base, a.spans[axis]);
        out.cells.push_back(std::move(a));
        out.cells.push_back(std::move(b));
    }
    return out;
}

}  // namespace tropflux
