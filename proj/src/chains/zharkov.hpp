#pragma once

#include <string>
#include <vector>

#include "chains/chain.hpp"
#include "curve/graph.hpp"

namespace tropflux {

struct CeresaData {
    CycleBasis basis;
    TropicalTorus torus;
    FramedChain chain;                 // E1..E5, in order
    std::vector<std::string> labels;   // "E1".."E5"
    FramedChain curve;                 // tautological AJ_p(C)
    FramedChain inverse_curve;         // (-1) AJ_p'(C)
    int p = 0, p_prime = 0, m = 0, n = 0;  // vertex indices used by the construction
};

// Five-parallelogram 2-chain bounding AJ_p(C) - (-1)AJ_p'(C) on a (possibly
// subdivided) K4 curve. p, p' are the graph's two basepoints; they must be
// adjacent trivalent vertices.
CeresaData zharkov_chain_k4(const MetricGraph& g);

}  // namespace tropflux
