#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccn/chroma.hpp"
#include "ccn/families.hpp"
#include "ccn/formulas.hpp"

namespace ccn {

// Adjudication of the tabulated claims against the exact engine, with the
// brute-force oracle as referee wherever it fits the budget.
//
//   CONFIRMED              engine == claim (oracle, when run, agrees with engine)
//   PAPER_MISMATCH         engine != claim; the claim is wrong, not the engine
//   ENGINE_ORACLE_MISMATCH engine != oracle; always a defect, always fatal
//   SKIPPED                no claim exists for this (family, n)
enum class Verdict {
    Confirmed,
    PaperMismatch,
    EngineOracleMismatch,
    Skipped,
};

const std::string& verdictName(Verdict v);

struct VerdictRecord {
    Family family;
    int n;
    std::optional<long long> claimedCn;
    std::optional<long long> claimedCnc;
    long long computedCn;
    long long computedCnc;
    std::optional<long long> oracleCn;   // empty when the oracle was skipped
    std::optional<long long> oracleCnc;
    Verdict verdict;
    std::string source;
};

struct VerifyOptions {
    int vertexBudget = 14;  // oracle runs when the graph fits
};

std::vector<VerdictRecord> verifyFamily(Family f, int nMin, int nMax,
                                        const VerifyOptions& opts = {});

// True iff the assignment is a proper colouring of generate({family, n})
// whose class sizes realize the claimed values: max class == claimed cn and
// product of classes == claimed cnc. Improper assignments throw.
bool witnessCheck(Family f, int n, const ColourAssignment& a);

// Renderers. All deterministic: same records, same bytes.
std::string renderTable(const std::vector<VerdictRecord>& records);
std::string renderJsonLines(const std::vector<VerdictRecord>& records);
std::string renderCsv(const std::vector<VerdictRecord>& records);

// Claims table export (verify --emit-claims).
std::string claimsCsv(const std::vector<Family>& families, int nMin, int nMax);

// 2 if any ENGINE_ORACLE_MISMATCH, else 0.
int verifyExitCode(const std::vector<VerdictRecord>& records);

}  // namespace ccn
