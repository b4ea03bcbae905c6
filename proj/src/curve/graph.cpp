#include "curve/graph.hpp"

#include <deque>

#include "exact/errors.hpp"

namespace tropflux {

int MetricGraph::genus() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int MetricGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int MetricGraph::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    return -1;
}

bool MetricGraph::is_numeric() const {
    for (const auto& e : edges)
        if (!e.length.is_constant()) return false;
    return true;
}

bool MetricGraph::is_connected() const {
    if (vertices.empty()) return false;
    std::vector<bool> seen(vertices.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& e : edges) {
            int w = e.tail == v ? e.head : (e.head == v ? e.tail : -1);
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

void MetricGraph::validate() const {
    if (vertices.empty()) throw PreconditionError("graph has no vertices");
    int nv = static_cast<int>(vertices.size());
    for (const auto& e : edges) {
        if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
            throw PreconditionError("edge " + e.name + " has an unknown endpoint");
        const Scalar& l = e.length;
        if (l.is_constant()) {
            if (l.constant_value() <= 0) throw PreconditionError("edge " + e.name + " has non-positive length");
        } else {
            bool single_var = l.terms().size() == 1 && l.terms().begin()->second == 1 &&
                              l.terms().begin()->first.size() == 1 && l.terms().begin()->first[0].second == 1;
            if (!single_var)
                throw PreconditionError("edge " + e.name + " length must be a positive rational or one variable");
        }
    }
    if (basepoint < 0 || basepoint >= nv) throw PreconditionError("basepoint is not a vertex");
    if (basepoint2 && (*basepoint2 < 0 || *basepoint2 >= nv)) throw PreconditionError("basepoint2 is not a vertex");
    if (!is_connected()) throw PreconditionError("graph is not connected");
}

CycleBasis cycle_basis(const MetricGraph& g) {
    if (!g.is_connected()) throw PreconditionError("cycle_basis: graph is not connected");
    std::size_t ne = g.edges.size(), nv = g.vertices.size();
    CycleBasis b;
    b.root = 0;
    b.root_paths.assign(nv, IntVector(ne));
    std::vector<bool> seen(nv, false), in_tree(ne, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < ne; ++e) {
            const Edge& ed = g.edges[e];
            int w;
            int dir;
            if (ed.tail == v) {
                w = ed.head;
                dir = 1;
            } else if (ed.head == v) {
                w = ed.tail;
                dir = -1;
            } else {
                continue;
            }
            if (seen[w]) continue;
            seen[w] = true;
            in_tree[e] = true;
            b.root_paths[w] = b.root_paths[v];
            b.root_paths[w][e] += dir;
            queue.push_back(w);
        }
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (in_tree[e]) {
            b.tree_edges.push_back(static_cast<int>(e));
            continue;
        }
        const Edge& ed = g.edges[e];
        IntVector cyc(ne);
        // tail -> head along e, then back to tail through the tree
        for (std::size_t f = 0; f < ne; ++f) cyc[f] = b.root_paths[ed.tail][f] - b.root_paths[ed.head][f];
        cyc[e] += 1;
        b.nontree_edges.push_back(static_cast<int>(e));
        b.cycles.push_back(std::move(cyc));
    }
    return b;
}

bool is_flow(const MetricGraph& g, const IntVector& cycle) {
    std::vector<Integer> net(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        net[g.edges[e].head] += cycle[e];
        net[g.edges[e].tail] -= cycle[e];
    }
    for (const auto& x : net)
        if (x != 0) return false;
    return true;
}

ScalarMatrix polarisation_matrix(const MetricGraph& g, const CycleBasis& b) {
    std::size_t n = b.cycles.size();
    ScalarMatrix q(n, ScalarVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                Integer w = b.cycles[i][e] * b.cycles[j][e];
                if (w != 0) q[i][j] += Scalar(w) * g.edges[e].length;
            }
    return q;
}

bool is_positive_definite(const ScalarMatrix& q) {
    for (std::size_t k = 1; k <= q.size(); ++k) {
        MultiIndex idx(k);
        for (std::size_t a = 0; a < k; ++a) idx[a] = static_cast<int>(a);
        ScalarMatrix m(k, ScalarVector(k));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) m[r][c] = q[r][c];
        Scalar d = determinant(m);
        if (!d.is_constant()) throw PreconditionError("positive-definiteness needs numeric entries");
        if (d.constant_value() <= 0) return false;
    }
    return true;
}

IntVector edge_direction(const CycleBasis& b, int edge) {
    IntVector d(b.cycles.size());
    for (std::size_t i = 0; i < b.cycles.size(); ++i) d[i] = b.cycles[i][edge];
    return d;
}

IntVector primitive(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

namespace {

ScalarVector root_position(const MetricGraph& g, const CycleBasis& b, int v) {
    ScalarVector pos(b.cycles.size());
    for (int e : b.tree_edges) {
        const Integer& s = b.root_paths[v][e];
        if (s == 0) continue;
        IntVector d = edge_direction(b, e);
        for (std::size_t i = 0; i < d.size(); ++i) pos[i] += Scalar(Integer(s * d[i])) * g.edges[e].length;
    }
    return pos;
}

}  // namespace

AbelJacobi abel_jacobi_cycle(const MetricGraph& g, const CycleBasis& b, std::optional<int> basepoint) {
    int genus = static_cast<int>(b.cycles.size());
    int base = basepoint.value_or(g.basepoint);
    TropicalTorus t = TropicalTorus::from_matrix(polarisation_matrix(g, b));
    AbelJacobi aj;
    ScalarVector origin = root_position(g, b, base);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        aj.positions.push_back(vsub(root_position(g, b, static_cast<int>(v)), origin));
    std::vector<TautologicalCell> cells;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        IntVector d = edge_direction(b, static_cast<int>(e));
        Integer content = 0;
        for (const auto& x : d) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content == 0) continue;
        cells.push_back(TautologicalCell{aj.positions[g.edges[e].tail], {primitive(d)},
                                         {Scalar(content) * g.edges[e].length}, 1});
    }
    aj.chain = tautological_cycle(genus, cells, t.lattice());
    aj.chain.j = 1;
    aj.chain.k = 1;
    return aj;
}

FramedChain involution_image(const FramedChain& c) {
    FramedChain out = c;
    Scalar sign = c.k % 2 ? Scalar(-1) : Scalar(1);
    for (auto& cell : out.cells) {
        cell.base = vneg(cell.base);
        for (auto& v : cell.spans) v = vneg(v);
        cell.framing = sign * cell.framing;
        for (auto& w : cell.factors)
            for (auto& u : w.factors)
                for (auto& x : u) x = -x;
    }
    return out;
}

SuppressedGraph suppress_two_valent(const MetricGraph& g) {
    std::size_t nv = g.vertices.size(), ne = g.edges.size();
    std::vector<int> valence(nv, 0);
    for (const auto& e : g.edges) {
        ++valence[e.tail];
        ++valence[e.head];
    }
    SuppressedGraph s;
    std::vector<bool> kept(nv, false);
    for (std::size_t v = 0; v < nv; ++v)
        if (valence[v] != 2) {
            kept[v] = true;
            s.vertices.push_back(static_cast<int>(v));
        }
    if (s.vertices.empty() && nv > 0) {
        kept[0] = true;
        s.vertices.push_back(0);
    }
    std::vector<bool> used(ne, false);
    for (int start : s.vertices) {
        for (std::size_t e0 = 0; e0 < ne; ++e0) {
            if (used[e0]) continue;
            const Edge& first = g.edges[e0];
            if (first.tail != start && first.head != start) continue;
            Branch br;
            br.from = start;
            int cur = start;
            int e = static_cast<int>(e0);
            for (;;) {
                used[e] = true;
                const Edge& ed = g.edges[e];
                int dir = ed.tail == cur ? 1 : -1;
                int next = dir > 0 ? ed.head : ed.tail;
                br.pieces.emplace_back(e, dir);
                cur = next;
                if (kept[cur]) break;
                int nxt = -1;
                for (std::size_t f = 0; f < ne; ++f)
                    if (!used[f] && (g.edges[f].tail == cur || g.edges[f].head == cur)) {
                        nxt = static_cast<int>(f);
                        break;
                    }
                if (nxt < 0) break;
                e = nxt;
            }
            br.to = cur;
            s.branches.push_back(std::move(br));
        }
    }
    return s;
}

bool is_k4(const MetricGraph& g) {
    if (!g.is_connected()) return false;
    SuppressedGraph s = suppress_two_valent(g);
    if (s.vertices.size() != 4 || s.branches.size() != 6) return false;
    int adj[4][4] = {};
    auto slot = [&](int v) {
        for (int i = 0; i < 4; ++i)
            if (s.vertices[i] == v) return i;
        return -1;
    };
    for (const auto& br : s.branches) {
        int a = slot(br.from), b = slot(br.to);
        if (a < 0 || b < 0 || a == b) return false;
        ++adj[a][b];
        ++adj[b][a];
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b && adj[a][b] != 1) return false;
    return true;
}

ScalarVector branch_displacement(const MetricGraph& g, const CycleBasis& b, const Branch& br) {
    ScalarVector total(b.cycles.size());
    for (const auto& [e, dir] : br.pieces) {
        IntVector d = edge_direction(b, e);
        for (std::size_t i = 0; i < d.size(); ++i) total[i] += Scalar(Integer(dir * d[i])) * g.edges[e].length;
    }
    return total;
}

IntVector branch_direction(const CycleBasis& b, const Branch& br) {
    IntVector out;
    for (const auto& [e, dir] : br.pieces) {
        IntVector d = primitive(edge_direction(b, e));
        for (auto& x : d) x *= dir;
        if (out.empty()) {
            out = d;
        } else if (out != d) {
            throw PreconditionError("branch pieces point in different directions");
        }
    }
    return out;
}

FramedChain branch_cycle(const MetricGraph& g, const CycleBasis& b, int basepoint) {
    AbelJacobi aj = abel_jacobi_cycle(g, b, basepoint);
    FramedChain out = aj.chain;
    out.cells.clear();
    for (const auto& br : suppress_two_valent(g).branches) {
        IntVector d = branch_direction(b, br);
        bool zero = true;
        for (const auto& x : d) zero = zero && x == 0;
        if (zero) continue;
        out.add(make_cell(aj.positions[br.from], {branch_displacement(g, b, br)}, 1, {PureWedge{1, {d}}}));
    }
    return out;
}

}  // namespace tropflux
