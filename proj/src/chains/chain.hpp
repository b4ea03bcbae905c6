#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/exterior.hpp"
#include "exact/lattice.hpp"
#include "torus/cochain.hpp"

namespace tropflux {

// coefficient * u_1 ^ ... ^ u_k
struct PureWedge {
    Integer coefficient = 1;
    std::vector<IntVector> factors;
};

struct FramedCell {
    ScalarVector base;
    std::vector<ScalarVector> spans;
    Integer weight = 1;
    ExteriorElement framing;
    std::vector<PureWedge> factors;  // recorded decomposition of `framing`; empty if unknown

    int dim() const { return static_cast<int>(spans.size()); }
    std::string str() const;
};

// Framing built from its factorization.
FramedCell make_cell(ScalarVector base, std::vector<ScalarVector> spans, Integer weight,
                     std::vector<PureWedge> factors);
ExteriorElement expand(const std::vector<PureWedge>& factors, int k);

struct FramedChain {
    int n = 0;  // ambient dimension
    int j = 0;  // cell dimension
    int k = 0;  // framing degree
    std::vector<ScalarVector> lattice;
    std::vector<FramedCell> cells;

    FramedChain() = default;
    FramedChain(int n, int j, int k, std::vector<ScalarVector> lattice)
        : n(n), j(j), k(k), lattice(std::move(lattice)) {}

    void add(FramedCell cell);  // checks degrees
    bool empty() const { return cells.empty(); }
    FramedChain operator-() const;
    FramedChain& operator+=(const FramedChain& o);
    friend FramedChain operator+(FramedChain a, const FramedChain& b) { return a += b; }
    friend FramedChain operator-(FramedChain a, const FramedChain& b) { return a += -b; }
    std::string str() const;
};

FramedChain boundary(const FramedChain& c);

// Integer m with lattice * m = diff, matched monomial by monomial.
std::optional<IntVector> lattice_translation(const std::vector<ScalarVector>& lattice, const ScalarVector& diff);

// Canonical representative: orientations normalised, lattice translates merged,
// zero cells dropped.
FramedChain reduce_mod_lattice(const FramedChain& c);
bool equal_mod_lattice(const FramedChain& a, const FramedChain& b);

struct TautologicalCell {
    ScalarVector base;
    std::vector<IntVector> directions;  // primitive, independent
    std::vector<Scalar> lengths;        // span_i = lengths[i] * directions[i]
    Integer weight = 1;
};

FramedChain tautological_cycle(int n, const std::vector<TautologicalCell>& cells,
                               const std::vector<ScalarVector>& lattice);

Scalar integrate_cell(const ConstantCochain& omega, const FramedCell& cell);
Scalar integrate(const ConstantCochain& omega, const FramedChain& c);

bool is_pointwise_degenerate(const FramedCell& cell, const ConstantCochain& omega);

FramedChain translate(const FramedChain& c, const ScalarVector& shift);
// Split every cell along spans[axis] at its midpoint.
FramedChain subdivide(const FramedChain& c, int axis);

bool vectors_dependent(const std::vector<ScalarVector>& vectors);

}  // namespace tropflux
