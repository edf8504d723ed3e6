#pragma once

#include <optional>
#include <string>

#include "ccn/families.hpp"

namespace ccn {

// Published closed-form claims for the chromatic curling numbers of the
// twelve families, tabulated as data so the verifier can adjudicate them.
// Values are evaluated in exact integer arithmetic; every division in the
// table is checked to be exact.
struct ClaimRecord {
    Family family;
    int n;
    std::optional<long long> cn;
    std::optional<long long> cnc;
    std::string source;  // claim id, e.g. "helm/even"
};

struct UnsupportedParameterError : std::invalid_argument {
    UnsupportedParameterError(const std::string& family, int n, int minimum);
};

// Minimum n: 2 for Path, 3 otherwise.
ClaimRecord claimedValues(Family f, int n);

int claimMinimumN(Family f);

}  // namespace ccn
