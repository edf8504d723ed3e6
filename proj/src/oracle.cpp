#include "ccn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ccn {

BudgetExceededError::BudgetExceededError(int n, int budget)
    : std::invalid_argument("oracle budget is " + std::to_string(budget) +
                            " vertices, graph has " + std::to_string(n)),
      n(n),
      budget(budget)
{
}

OracleResult oracleChromatic(const Graph& g, int vertexBudget)
{
    const int n = g.vertexCount();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n > vertexBudget) throw BudgetExceededError(n, vertexBudget);

    // Adjacency matrix; nothing fancier is wanted here.
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

    std::vector<int> colour(n, 0);
    std::vector<long long> bestTheta;
    long long count = 0;

    // All assignments in raw vertex order 0..n-1. First-use canonicalization
    // is the one concession (colour c+1 cannot appear before colour c), which
    // makes each partition into colour classes come up exactly once.
    std::function<void(int, int, int)> enumerate = [&](int v, int maxUsed, int k) {
        if (v == n) {
            if (maxUsed != k) return;
            std::vector<long long> theta(k, 0);
            for (int u = 0; u < n; ++u) ++theta[colour[u] - 1];
            std::sort(theta.begin(), theta.end(), std::greater<>());
            ++count;
            if (bestTheta.empty() || theta > bestTheta) bestTheta = std::move(theta);
            return;
        }
        int limit = std::min(k, maxUsed + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int u = 0; u < v; ++u)
                if (adj[v][u] && colour[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colour[v] = c;
            enumerate(v + 1, std::max(maxUsed, c), k);
            colour[v] = 0;
        }
    };

    for (int k = 1; k <= n; ++k) {
        bestTheta.clear();
        count = 0;
        enumerate(0, 0, k);
        if (count > 0) {
            // Lex-max over all colour permutations of all proper colourings
            // is reached at a sorted vector, so the winner must be one.
            if (!std::is_sorted(bestTheta.begin(), bestTheta.end(), std::greater<>()))
                throw std::logic_error("oracle winner not non-increasing");
            return {k, bestTheta, count};
        }
    }
    throw std::logic_error("no colouring found");  // unreachable: k = n always works
}

}  // namespace ccn
