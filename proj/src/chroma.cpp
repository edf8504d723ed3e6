#include "ccn/chroma.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ccn {

namespace {

long long checkedMul(long long a, long long b)
{
    if (a != 0 && b > std::numeric_limits<long long>::max() / a)
        throw std::overflow_error("class-size product overflows 64 bits");
    return a * b;
}

// Descending degree, ties by index. Shared by the feasibility search and the
// lex-max search so both are deterministic.
std::vector<int> searchOrder(const Graph& g)
{
    std::vector<int> order(g.vertexCount());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

int greedyCliqueBound(const Graph& g, const std::vector<int>& order)
{
    int best = g.vertexCount() > 0 ? 1 : 0;
    std::vector<int> clique;
    for (int seed : order) {
        clique.clear();
        clique.push_back(seed);
        for (int v : order) {
            if (v == seed) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

int greedyColouringBound(const Graph& g, const std::vector<int>& order)
{
    std::vector<int> colour(g.vertexCount(), 0);
    int used = 0;
    for (int v : order) {
        int c = 1;
        for (bool clash = true; clash; ++c) {
            clash = false;
            for (int u : g.neighbours(v))
                if (colour[u] == c) {
                    clash = true;
                    break;
                }
            if (!clash) {
                colour[v] = c;
                break;
            }
        }
        used = std::max(used, colour[v]);
    }
    return used;
}

bool extendColouring(const Graph& g, const std::vector<int>& order, size_t idx, int k,
                     std::vector<int>& colour, int maxUsed)
{
    if (idx == order.size()) return true;
    int v = order[idx];
    int limit = std::min(k, maxUsed + 1);
    for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (int u : g.neighbours(v))
            if (colour[u] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colour[v] = c;
        if (extendColouring(g, order, idx + 1, k, colour, std::max(maxUsed, c)))
            return true;
        colour[v] = 0;
    }
    return false;
}

// A proper colouring with at most k colours, or empty if none exists. Since
// k is probed in increasing order by the caller, a hit uses exactly k.
std::vector<int> findColouring(const Graph& g, const std::vector<int>& order, int k)
{
    std::vector<int> colour(g.vertexCount(), 0);
    if (extendColouring(g, order, 0, k, colour, 0)) return colour;
    return {};
}

// Relabels a complete assignment so class sizes are non-increasing and, among
// equal sizes, the class seen earliest (lowest vertex) gets the lower colour.
// That makes the returned sequence the lex-least one consistent with sorted
// sizes, which is the published tie-break.
struct Canonical {
    std::vector<long long> sizes;  // sorted descending
    std::vector<int> sequence;     // colour per vertex, 1..chi
};

Canonical canonicalize(const std::vector<int>& colour, int chi)
{
    struct Cls {
        long long size = 0;
        int firstVertex = std::numeric_limits<int>::max();
        int oldLabel = 0;
    };
    std::vector<Cls> classes(chi);
    for (int c = 0; c < chi; ++c) classes[c].oldLabel = c + 1;
    for (size_t v = 0; v < colour.size(); ++v) {
        Cls& cls = classes[colour[v] - 1];
        ++cls.size;
        cls.firstVertex = std::min(cls.firstVertex, static_cast<int>(v));
    }
    std::sort(classes.begin(), classes.end(), [](const Cls& a, const Cls& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.firstVertex < b.firstVertex;
    });

    Canonical out;
    out.sizes.reserve(chi);
    std::vector<int> relabel(chi + 1, 0);
    for (int i = 0; i < chi; ++i) {
        out.sizes.push_back(classes[i].size);
        relabel[classes[i].oldLabel] = i + 1;
    }
    out.sequence.reserve(colour.size());
    for (int c : colour) out.sequence.push_back(relabel[c]);
    return out;
}

struct LexSearch {
    const Graph& g;
    std::vector<int> order;
    int chi;
    std::vector<int> colour;
    std::vector<int> counts;  // counts[c] for c in 1..chi
    Canonical best;
    bool haveBest = false;

    LexSearch(const Graph& graph, int k)
        : g(graph), order(searchOrder(graph)), chi(k),
          colour(graph.vertexCount(), 0), counts(k + 1, 0)
    {
    }

    void seed(const std::vector<int>& assignment)
    {
        best = canonicalize(assignment, chi);
        haveBest = true;
    }

    // Even shovelling every uncoloured vertex into each class at once cannot
    // push class rank i beyond (i-th largest current count) + uncoloured, so
    // a branch whose padded profile already trails the incumbent is dead.
    bool beatable(int coloured) const
    {
        if (!haveBest) return true;
        long long u = g.vertexCount() - coloured;
        std::vector<long long> padded(counts.begin() + 1, counts.end());
        std::sort(padded.begin(), padded.end(), std::greater<>());
        for (int i = 0; i < chi; ++i) {
            long long cap = padded[i] + u;
            if (cap > best.sizes[i]) return true;
            if (cap < best.sizes[i]) return false;
        }
        return true;  // can still tie; ties matter for the witness
    }

    void dfs(size_t idx, int maxUsed)
    {
        if (idx == order.size()) {
            if (maxUsed != chi) return;
            Canonical cand = canonicalize(colour, chi);
            if (!haveBest || cand.sizes > best.sizes ||
                (cand.sizes == best.sizes && cand.sequence < best.sequence)) {
                best = std::move(cand);
                haveBest = true;
            }
            return;
        }
        int remaining = static_cast<int>(order.size() - idx);
        if (chi - maxUsed > remaining) return;  // can't open the unused colours
        if (!beatable(static_cast<int>(idx))) return;

        int v = order[idx];
        int limit = std::min(chi, maxUsed + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (int u : g.neighbours(v))
                if (colour[u] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colour[v] = c;
            ++counts[c];
            dfs(idx + 1, std::max(maxUsed, c));
            --counts[c];
            colour[v] = 0;
        }
    }
};

}  // namespace

ImproperColouringError::ImproperColouringError(int u, int v)
    : std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") is monochromatic"),
      edge(u, v)
{
}

std::vector<long long> classSizes(const Graph& g, const ColourAssignment& a)
{
    if (static_cast<int>(a.colours.size()) != g.vertexCount())
        throw std::invalid_argument("assignment size does not match graph");
    for (auto [u, v] : g.edges())
        if (a.colours[u] == a.colours[v]) throw ImproperColouringError(u, v);

    std::vector<long long> theta(a.k, 0);
    for (int c : a.colours) {
        if (c < 1 || c > a.k) throw std::invalid_argument("colour out of range");
        ++theta[c - 1];
    }
    for (long long t : theta)
        if (t == 0) throw std::invalid_argument("unused colour in assignment");
    return theta;
}

int chromaticNumber(const Graph& g)
{
    if (g.vertexCount() == 0) throw std::invalid_argument("empty graph");
    if (g.edgeCount() == 0) return 1;

    auto order = searchOrder(g);
    int lb = greedyCliqueBound(g, order);
    int ub = greedyColouringBound(g, order);
    for (int k = lb; k < ub; ++k)
        if (!findColouring(g, order, k).empty()) return k;
    return ub;
}

ChromaticCurlingResult chiMinus(const Graph& g)
{
    const int chi = chromaticNumber(g);

    LexSearch search(g, chi);
    search.seed(findColouring(g, search.order, chi));
    search.dfs(0, 0);

    ChromaticCurlingResult r;
    r.chi = chi;
    r.theta = search.best.sizes;
    r.cnChi = r.theta.front();
    r.cncChi = 1;
    for (long long t : r.theta) r.cncChi = checkedMul(r.cncChi, t);
    r.witness = {search.best.sequence, chi};
    return r;
}

ChromaticCurlingResult chiPlus(const ChromaticCurlingResult& r)
{
    ChromaticCurlingResult out = r;
    std::reverse(out.theta.begin(), out.theta.end());
    for (int& c : out.witness.colours) c = r.chi + 1 - c;
    return out;
}

}  // namespace ccn
