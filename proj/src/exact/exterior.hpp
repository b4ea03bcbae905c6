#pragma once

#include <map>
#include <string>
#include <vector>

#include "exact/lattice.hpp"
#include "exact/scalar.hpp"

namespace tropflux {

// Strictly increasing, 0-based. Printed 1-based.
using MultiIndex = std::vector<int>;

bool is_multi_index(const MultiIndex& i);
std::string index_str(const MultiIndex& i);
MultiIndex complement(const MultiIndex& i, int n);
std::vector<MultiIndex> subsets(int n, int k);

// Parity of the permutation taking src to dst, as +1/-1. Throws if dst is not
// a rearrangement of src.
int perm_sign(const std::vector<int>& src, const std::vector<int>& dst);
// Sign of sorting the concatenation (a, b); 0 if a and b overlap.
int merge_sign(const MultiIndex& a, const MultiIndex& b);
MultiIndex merged(const MultiIndex& a, const MultiIndex& b);

class ExteriorElement {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    explicit ExteriorElement(int degree = 0) : degree_(degree) {}

    static ExteriorElement one();
    static ExteriorElement basis(const MultiIndex& i);
    static ExteriorElement vector(const ScalarVector& v);
    static ExteriorElement vector(const IntVector& v);
    // u_1 ^ ... ^ u_k
    static ExteriorElement pure(const std::vector<IntVector>& factors);

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const MultiIndex& i) const;
    bool has_integer_coefficients() const;

    void add(const MultiIndex& i, const Scalar& c);
    ExteriorElement& operator+=(const ExteriorElement& o);
    ExteriorElement& operator-=(const ExteriorElement& o);
    ExteriorElement operator-() const;
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    friend ExteriorElement operator*(const Scalar& s, const ExteriorElement& a);
    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int degree_;
    Terms terms_;
};

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v);

}  // namespace tropflux
