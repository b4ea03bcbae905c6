#include "chains/zharkov.hpp"

#include "exact/errors.hpp"

namespace tropflux {

namespace {

struct Segment {
    ScalarVector displacement;
    IntVector direction;
};

Segment segment(const MetricGraph& g, const CycleBasis& b, const SuppressedGraph& s, int from, int to) {
    for (const auto& br : s.branches) {
        if (br.from == from && br.to == to)
            return {branch_displacement(g, b, br), branch_direction(b, br)};
        if (br.from == to && br.to == from) {
            IntVector d = branch_direction(b, br);
            for (auto& x : d) x = -x;
            return {vneg(branch_displacement(g, b, br)), d};
        }
    }
    throw PreconditionError("vertices " + g.vertices[from] + " and " + g.vertices[to] + " are not adjacent");
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

CeresaData zharkov_chain_k4(const MetricGraph& g) {
    if (!is_k4(g)) throw PreconditionError("zharkov_chain_k4: curve is not of type K4");
    if (!g.basepoint2) throw PreconditionError("zharkov_chain_k4: basepoint2 is required");
    SuppressedGraph s = suppress_two_valent(g);
    int p = g.basepoint, pp = *g.basepoint2;
    auto kept = [&](int v) {
        for (int x : s.vertices)
            if (x == v) return true;
        return false;
    };
    if (!kept(p) || !kept(pp) || p == pp)
        throw PreconditionError("zharkov_chain_k4: basepoints must be distinct trivalent vertices");
    std::vector<int> rest;
    for (int v : s.vertices)
        if (v != p && v != pp) rest.push_back(v);
    int n = rest[0], m = rest[1];

    CeresaData out;
    out.basis = cycle_basis(g);
    out.torus = TropicalTorus::from_matrix(polarisation_matrix(g, out.basis));
    out.p = p;
    out.p_prime = pp;
    out.m = m;
    out.n = n;
    const CycleBasis& b = out.basis;

    Segment x = segment(g, b, s, p, pp);
    Segment y = segment(g, b, s, p, m);
    Segment z = segment(g, b, s, pp, m);
    Segment w = segment(g, b, s, m, n);
    Segment y2 = segment(g, b, s, pp, n);
    Segment z2 = segment(g, b, s, p, n);

    int dim = out.torus.n;
    ScalarVector origin = zero_vector(dim);
    auto framed = [](const IntVector& v) { return std::vector<PureWedge>{PureWedge{1, {v}}}; };

    out.chain = FramedChain(dim, 2, 1, out.torus.lattice());
    out.chain.add(make_cell(origin, {y.displacement, vneg(z.displacement)}, 1, framed(negated(z.direction))));
    out.chain.add(make_cell(vsub(x.displacement, y.displacement), {y.displacement, vneg(w.displacement)}, 1,
                            framed(negated(w.direction))));
    out.chain.add(make_cell(origin, {y.displacement, vneg(y2.displacement)}, 1, framed(w.direction)));
    out.chain.add(make_cell(vadd(x.displacement, y2.displacement), {vneg(y2.displacement), vneg(w.displacement)}, 1,
                            framed(w.direction)));
    out.chain.add(make_cell(origin, {z2.displacement, vneg(y2.displacement)}, 1, framed(z2.direction)));
    out.labels = {"E1", "E2", "E3", "E4", "E5"};

    out.curve = branch_cycle(g, b, p);
    out.inverse_curve = involution_image(branch_cycle(g, b, pp));
    return out;
}

}  // namespace tropflux
