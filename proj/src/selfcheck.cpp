#include "ccn/selfcheck.hpp"

#include <sstream>

#include "ccn/chroma.hpp"
#include "ccn/oracle.hpp"

namespace ccn {

Graph randomConnectedGraph(std::mt19937_64& rng, int maxN)
{
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxN));
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);

    const unsigned threshold = 10 + rng() % 50;  // percent, per graph
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 100 < threshold) edges.emplace_back(u, v);

    return makeGraph(n, edges);
}

SelfcheckResult selfcheck(const SelfcheckOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    SelfcheckResult result;
    std::ostringstream report;

    for (long long i = 0; i < opts.count; ++i) {
        const Graph g = randomConnectedGraph(rng, opts.maxN);
        const ChromaticCurlingResult engine = chiMinus(g);
        const OracleResult oracle = oracleChromatic(g, opts.maxN);
        ++result.checked;
        if (engine.chi != oracle.chi || engine.theta != oracle.lexMaxTheta) {
            ++result.mismatches;
            report << "mismatch on graph " << i << " " << toJson(g) << ": engine chi="
                   << engine.chi << " oracle chi=" << oracle.chi << "\n";
        }
    }
    report << "selfcheck: " << result.checked << " random connected graphs, "
           << result.mismatches << " engine/oracle mismatches\n";
    result.report = report.str();
    return result;
}

}  // namespace ccn
