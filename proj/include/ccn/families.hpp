#pragma once

#include <optional>
#include <string>

#include "ccn/graph.hpp"

namespace ccn {

enum class Family {
    Path,
    Cycle,
    Wheel,          // parameterized by rim size n; reported as W_{n+1}
    DoubleWheel,    // two disjoint n-cycles joined to one hub
    Helm,           // wheel + a pendant at every rim vertex
    ClosedHelm,     // helm + cycle through the pendants
    Flower,         // helm + pendant-to-hub edges
    Djembe,         // prism (C_n x K_2) joined to one hub
    Sunflower,      // wheel + outer vertex per rim edge (triangle replacement)
    ClosedSunflower,// sunflower + cycle through the outer vertices
    Antiprism,      // two n-cycles, inner i adjacent to outer i and i+1
    Blossom,        // closed sunflower + outer-to-hub edges
};

struct FamilySpec {
    Family family;
    int n;
};

struct ParameterTooSmallError : std::invalid_argument {
    ParameterTooSmallError(const std::string& family, int n, int minimum);
};

// Vertex layout is fixed: rim (or path/inner cycle) occupies 0..n-1, outer or
// pendant vertices occupy n..2n-1 where the family has them, and the centre
// is always the last vertex. Outer vertex j sits between rim j and rim j+1
// for the sunflower-derived families; for the antiprism, inner i is adjacent
// to outer i and outer i+1 (both read mod n).
struct IndexRange {
    int lo;  // inclusive
    int hi;  // exclusive
    bool operator==(const IndexRange&) const = default;
};

struct VertexLayout {
    IndexRange rim;
    std::optional<IndexRange> outer;
    std::optional<int> centre;
    int total;
};

// Minimum n: 1 for Path, 3 for everything built on a cycle.
Graph generate(const FamilySpec& spec);
VertexLayout vertexLayout(const FamilySpec& spec);

// Lowercase stable names used by the CLI and reports ("closedhelm", ...).
const std::string& familyName(Family f);
std::optional<Family> parseFamily(const std::string& name);

// Display label, e.g. P5, C7, W11 (wheel labels use rim+1), DW4, CSF6.
std::string familyLabel(const FamilySpec& spec);

int familyMinimumN(Family f);

}  // namespace ccn
