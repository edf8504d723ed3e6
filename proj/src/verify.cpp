#include "ccn/verify.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ccn/oracle.hpp"

namespace ccn {

namespace {

std::string cell(const std::optional<long long>& v)
{
    return v ? std::to_string(*v) : "SKIPPED";
}

nlohmann::ordered_json maybe(const std::optional<long long>& v)
{
    if (v) return *v;
    return nullptr;
}

}  // namespace

const std::string& verdictName(Verdict v)
{
    static const std::string names[] = {"CONFIRMED", "PAPER_MISMATCH",
                                        "ENGINE_ORACLE_MISMATCH", "SKIPPED"};
    return names[static_cast<size_t>(v)];
}

std::vector<VerdictRecord> verifyFamily(Family f, int nMin, int nMax,
                                        const VerifyOptions& opts)
{
    std::vector<VerdictRecord> records;
    for (int n = std::max(nMin, familyMinimumN(f)); n <= nMax; ++n) {
        const Graph g = generate({f, n});
        const ChromaticCurlingResult engine = chiMinus(g);

        VerdictRecord rec;
        rec.family = f;
        rec.n = n;
        rec.computedCn = engine.cnChi;
        rec.computedCnc = engine.cncChi;

        bool oracleAgrees = true;
        if (g.vertexCount() <= opts.vertexBudget) {
            const OracleResult o = oracleChromatic(g, opts.vertexBudget);
            long long oCn = o.lexMaxTheta.front();
            long long oCnc = 1;
            for (long long t : o.lexMaxTheta) oCnc *= t;
            rec.oracleCn = oCn;
            rec.oracleCnc = oCnc;
            oracleAgrees = o.chi == engine.chi && o.lexMaxTheta == engine.theta;
        }

        if (n >= claimMinimumN(f)) {
            ClaimRecord claim = claimedValues(f, n);
            rec.claimedCn = claim.cn;
            rec.claimedCnc = claim.cnc;
            rec.source = claim.source;
        }

        if (!oracleAgrees) {
            rec.verdict = Verdict::EngineOracleMismatch;
        } else if (!rec.claimedCn) {
            rec.verdict = Verdict::Skipped;
        } else if (*rec.claimedCn == rec.computedCn &&
                   *rec.claimedCnc == rec.computedCnc) {
            rec.verdict = Verdict::Confirmed;
        } else {
            rec.verdict = Verdict::PaperMismatch;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

bool witnessCheck(Family f, int n, const ColourAssignment& a)
{
    const Graph g = generate({f, n});
    const std::vector<long long> theta = classSizes(g, a);  // throws if improper

    long long maxClass = 0;
    long long product = 1;
    for (long long t : theta) {
        maxClass = std::max(maxClass, t);
        product *= t;
    }
    const ClaimRecord claim = claimedValues(f, n);
    return maxClass == *claim.cn && product == *claim.cnc;
}

std::string renderTable(const std::vector<VerdictRecord>& records)
{
    const std::vector<std::string> header = {"family",  "n",         "label",
                                             "claim cn", "claim cnc", "engine cn",
                                             "engine cnc", "oracle cn", "oracle cnc",
                                             "verdict", "source"};
    std::vector<std::vector<std::string>> rows;
    rows.push_back(header);
    for (const auto& r : records) {
        rows.push_back({familyName(r.family), std::to_string(r.n),
                        familyLabel({r.family, r.n}), cell(r.claimedCn),
                        cell(r.claimedCnc), std::to_string(r.computedCn),
                        std::to_string(r.computedCnc), cell(r.oracleCn),
                        cell(r.oracleCnc), verdictName(r.verdict), r.source});
    }

    std::vector<size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << row[i];
            if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string renderJsonLines(const std::vector<VerdictRecord>& records)
{
    std::ostringstream out;
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["family"] = familyName(r.family);
        j["n"] = r.n;
        j["label"] = familyLabel({r.family, r.n});
        j["claimedCn"] = maybe(r.claimedCn);
        j["claimedCnc"] = maybe(r.claimedCnc);
        j["computedCn"] = r.computedCn;
        j["computedCnc"] = r.computedCnc;
        j["oracleCn"] = maybe(r.oracleCn);
        j["oracleCnc"] = maybe(r.oracleCnc);
        j["verdict"] = verdictName(r.verdict);
        j["source"] = r.source;
        out << j.dump() << "\n";
    }
    return out.str();
}

std::string renderCsv(const std::vector<VerdictRecord>& records)
{
    std::ostringstream out;
    out << "family,n,label,claimed_cn,claimed_cnc,computed_cn,computed_cnc,"
           "oracle_cn,oracle_cnc,verdict,source\n";
    for (const auto& r : records) {
        out << familyName(r.family) << ',' << r.n << ',' << familyLabel({r.family, r.n})
            << ',' << cell(r.claimedCn) << ',' << cell(r.claimedCnc) << ','
            << r.computedCn << ',' << r.computedCnc << ',' << cell(r.oracleCn) << ','
            << cell(r.oracleCnc) << ',' << verdictName(r.verdict) << ',' << r.source
            << "\n";
    }
    return out.str();
}

std::string claimsCsv(const std::vector<Family>& families, int nMin, int nMax)
{
    std::ostringstream out;
    out << "family,n,label,cn,cnc,source\n";
    for (Family f : families) {
        for (int n = std::max(nMin, claimMinimumN(f)); n <= nMax; ++n) {
            const ClaimRecord c = claimedValues(f, n);
            out << familyName(f) << ',' << n << ',' << familyLabel({f, n}) << ','
                << *c.cn << ',' << *c.cnc << ',' << c.source << "\n";
        }
    }
    return out.str();
}

int verifyExitCode(const std::vector<VerdictRecord>& records)
{
    for (const auto& r : records)
        if (r.verdict == Verdict::EngineOracleMismatch) return 2;
    return 0;
}

}  // namespace ccn
