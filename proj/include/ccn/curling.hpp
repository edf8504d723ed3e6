#pragma once

#include "ccn/graph.hpp"

namespace ccn {

// Degree-sequence curling: write the sorted degree sequence as runs
// d1^k1 d2^k2 ... dl^kl; cn is the largest ki, cnCompound the product.
struct CurlingResult {
    long long cn;
    long long cnCompound;
    DegreeSequence runs;
};

CurlingResult curlingNumbers(const Graph& g);

}  // namespace ccn
