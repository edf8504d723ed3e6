#pragma once

#include <vector>

#include "ccn/graph.hpp"

namespace ccn {

// Colours are 1..k and every colour in that range is used at least once.
struct ColourAssignment {
    std::vector<int> colours;  // indexed by vertex
    int k = 0;
};

struct ImproperColouringError : std::invalid_argument {
    ImproperColouringError(int u, int v);
    Edge edge;
};

// Class sizes in colour order: theta[i] = |{v : colour(v) == i+1}|.
// Throws ImproperColouringError on the first monochromatic edge.
std::vector<long long> classSizes(const Graph& g, const ColourAssignment& a);

struct ChromaticCurlingResult {
    int chi;
    std::vector<long long> theta;  // class sizes, non-increasing for chiMinus
    long long cnChi;               // max theta
    long long cncChi;              // product of theta
    ColourAssignment witness;      // class i+1 has exactly theta[i] vertices
};

// Exact chromatic number. Iterative deepening between a greedy clique lower
// bound and a greedy colouring upper bound; the backtracking search breaks
// colour symmetry by allowing at most 1 + (max colour used so far).
int chromaticNumber(const Graph& g);

// Among all proper colourings with exactly chi(g) colours, maximizes the
// class-size vector sorted descending, lexicographically: first the largest
// class, then the next, and so on. Ties between partitions are broken by the
// lowest witness colour sequence in vertex-index order, so the result is
// deterministic. Branch and bound; vertices are visited in descending-degree
// order (ties by index), and a branch dies when even moving every uncoloured
// vertex into its classes cannot beat the incumbent vector.
ChromaticCurlingResult chiMinus(const Graph& g);

// Label reversal i -> chi+1-i of a chiMinus result. Reverses theta and
// leaves cnChi/cncChi unchanged.
ChromaticCurlingResult chiPlus(const ChromaticCurlingResult& r);

}  // namespace ccn
