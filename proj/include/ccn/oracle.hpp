#pragma once

#include <vector>

#include "ccn/graph.hpp"

namespace ccn {

// Brute-force reference for the colouring engine. Deliberately naive so a
// bug in the engine's ordering or pruning cannot be mirrored here: vertices
// are taken in raw index order, the only symmetry reduction is first-use
// colour canonicalization, and there is no bounding of any kind. Keep it
// that way; it is the ground truth the fast path is measured against.

struct BudgetExceededError : std::invalid_argument {
    BudgetExceededError(int n, int budget);
    int n;
    int budget;
};

struct OracleResult {
    int chi;
    std::vector<long long> lexMaxTheta;  // sorted descending
    long long count;  // proper chi-colourings, up to colour permutation
};

constexpr int kDefaultVertexBudget = 14;

OracleResult oracleChromatic(const Graph& g, int vertexBudget = kDefaultVertexBudget);

}  // namespace ccn
