#pragma once

#include <random>
#include <string>

#include "ccn/graph.hpp"

namespace ccn {

// Engine-vs-oracle equivalence on seeded random connected graphs. The graphs
// are a random spanning tree plus random extra edges, so connectivity is by
// construction; mt19937_64 plus modulo keeps the stream identical everywhere.

Graph randomConnectedGraph(std::mt19937_64& rng, int maxN);

struct SelfcheckOptions {
    long long count = 200;
    unsigned long long seed = 1;
    int maxN = 9;
};

struct SelfcheckResult {
    long long checked = 0;
    long long mismatches = 0;
    std::string report;
};

SelfcheckResult selfcheck(const SelfcheckOptions& opts);

}  // namespace ccn
