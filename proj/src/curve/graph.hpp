#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chains/chain.hpp"
#include "exact/lattice.hpp"
#include "exact/scalar.hpp"

namespace tropflux {

struct Edge {
    std::string name;
    int tail = 0;
    int head = 0;
    Scalar length;
};

struct MetricGraph {
    std::vector<std::string> variables;  // declared order, used for printing
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    int basepoint = 0;
    std::optional<int> basepoint2;

    int genus() const;
    int vertex_index(const std::string& name) const;  // -1 if absent
    int edge_index(const std::string& name) const;
    bool is_numeric() const;
    bool is_connected() const;
    // connectivity and length positivity; throws PreconditionError
    void validate() const;
};

struct CycleBasis {
    std::vector<IntVector> cycles;   // g signed incidence vectors over the edges
    std::vector<int> tree_edges;
    std::vector<int> nontree_edges;  // nontree_edges[i] generates cycles[i]
    std::vector<IntVector> root_paths;  // per vertex: signed tree-edge path from the root
    int root = 0;
};

CycleBasis cycle_basis(const MetricGraph& g);
bool is_flow(const MetricGraph& g, const IntVector& cycle);

ScalarMatrix polarisation_matrix(const MetricGraph& g, const CycleBasis& b);
// Leading principal minors of a numeric matrix all positive.
bool is_positive_definite(const ScalarMatrix& q);

// d_e = ((gamma_1)_e, ..., (gamma_g)_e)
IntVector edge_direction(const CycleBasis& b, int edge);

struct AbelJacobi {
    FramedChain chain;
    std::vector<ScalarVector> positions;  // per vertex, basepoint at the origin
};

// Edges with d_e = 0 (bridges) map to points and are left out of the chain.
AbelJacobi abel_jacobi_cycle(const MetricGraph& g, const CycleBasis& b, std::optional<int> basepoint = {});
FramedChain involution_image(const FramedChain& c);

// Path between two vertices of valence != 2 through 2-valent vertices.
struct Branch {
    int from = 0;
    int to = 0;
    std::vector<std::pair<int, int>> pieces;  // (edge, +1 along tail->head / -1 against)
};

struct SuppressedGraph {
    std::vector<int> vertices;  // kept vertex indices, in input order
    std::vector<Branch> branches;
};

SuppressedGraph suppress_two_valent(const MetricGraph& g);
bool is_k4(const MetricGraph& g);

// Displacement in R^g along a branch, and its primitive direction.
ScalarVector branch_displacement(const MetricGraph& g, const CycleBasis& b, const Branch& br);
IntVector branch_direction(const CycleBasis& b, const Branch& br);

IntVector primitive(const IntVector& v);

// AJ image with each branch as a single segment.
FramedChain branch_cycle(const MetricGraph& g, const CycleBasis& b, int basepoint);

}  // namespace tropflux
