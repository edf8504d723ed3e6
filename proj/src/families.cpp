#include "ccn/families.hpp"

#include <array>
#include <unordered_map>

namespace ccn {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    const char* labelPrefix;
    int minimumN;
};

constexpr std::array<FamilyInfo, 12> kFamilies{{
    {Family::Path, "path", "P", 1},
    {Family::Cycle, "cycle", "C", 3},
    {Family::Wheel, "wheel", "W", 3},
    {Family::DoubleWheel, "doublewheel", "DW", 3},
    {Family::Helm, "helm", "H", 3},
    {Family::ClosedHelm, "closedhelm", "CH", 3},
    {Family::Flower, "flower", "F", 3},
    {Family::Djembe, "djembe", "Dj", 3},
    {Family::Sunflower, "sunflower", "SF", 3},
    {Family::ClosedSunflower, "closedsunflower", "CSF", 3},
    {Family::Antiprism, "antiprism", "A", 3},
    {Family::Blossom, "blossom", "Bl", 3},
}};

const FamilyInfo& info(Family f)
{
    return kFamilies[static_cast<size_t>(f)];
}

void requireMinimum(const FamilySpec& spec)
{
    int minimum = info(spec.family).minimumN;
    if (spec.n < minimum)
        throw ParameterTooSmallError(info(spec.family).name, spec.n, minimum);
}

void addCycle(std::vector<Edge>& edges, int first, int n)
{
    for (int i = 0; i < n; ++i) edges.emplace_back(first + i, first + (i + 1) % n);
}

void addStar(std::vector<Edge>& edges, int centre, int first, int n)
{
    for (int i = 0; i < n; ++i) edges.emplace_back(first + i, centre);
}

void addMatching(std::vector<Edge>& edges, int firstA, int firstB, int n)
{
    for (int i = 0; i < n; ++i) edges.emplace_back(firstA + i, firstB + i);
}

// outer j between rim j and rim j+1 (sunflower-derived families)
void addTriangleFans(std::vector<Edge>& edges, int n)
{
    for (int j = 0; j < n; ++j) {
        edges.emplace_back(j, n + j);
        edges.emplace_back((j + 1) % n, n + j);
    }
}

}  // namespace

ParameterTooSmallError::ParameterTooSmallError(const std::string& family, int n,
                                               int minimum)
    : std::invalid_argument(family + " needs n >= " + std::to_string(minimum) +
                            ", got " + std::to_string(n))
{
}

Graph generate(const FamilySpec& spec)
{
    requireMinimum(spec);
    const int n = spec.n;
    std::vector<Edge> edges;

    switch (spec.family) {
        case Family::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return makeGraph(n, edges);
        case Family::Cycle:
            addCycle(edges, 0, n);
            return makeGraph(n, edges);
        case Family::Wheel:
            addCycle(edges, 0, n);
            addStar(edges, n, 0, n);
            return makeGraph(n + 1, edges);
        case Family::DoubleWheel:
            addCycle(edges, 0, n);
            addCycle(edges, n, n);
            addStar(edges, 2 * n, 0, 2 * n);
            return makeGraph(2 * n + 1, edges);
        case Family::Helm:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addMatching(edges, 0, n, n);
            return makeGraph(2 * n + 1, edges);
        case Family::ClosedHelm:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addMatching(edges, 0, n, n);
            addCycle(edges, n, n);
            return makeGraph(2 * n + 1, edges);
        case Family::Flower:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addMatching(edges, 0, n, n);
            addStar(edges, 2 * n, n, n);
            return makeGraph(2 * n + 1, edges);
        case Family::Djembe:
            addCycle(edges, 0, n);
            addCycle(edges, n, n);
            addMatching(edges, 0, n, n);
            addStar(edges, 2 * n, 0, 2 * n);
            return makeGraph(2 * n + 1, edges);
        case Family::Sunflower:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addTriangleFans(edges, n);
            return makeGraph(2 * n + 1, edges);
        case Family::ClosedSunflower:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addTriangleFans(edges, n);
            addCycle(edges, n, n);
            return makeGraph(2 * n + 1, edges);
        case Family::Antiprism:
            addCycle(edges, 0, n);
            addCycle(edges, n, n);
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(i, n + i);
                edges.emplace_back(i, n + (i + 1) % n);
            }
            return makeGraph(2 * n, edges);
        case Family::Blossom:
            addCycle(edges, 0, n);
            addStar(edges, 2 * n, 0, n);
            addTriangleFans(edges, n);
            addCycle(edges, n, n);
            addStar(edges, 2 * n, n, n);
            return makeGraph(2 * n + 1, edges);
    }
    throw std::logic_error("unreachable");
}

VertexLayout vertexLayout(const FamilySpec& spec)
{
    requireMinimum(spec);
    const int n = spec.n;
    switch (spec.family) {
        case Family::Path:
        case Family::Cycle:
            return {{0, n}, std::nullopt, std::nullopt, n};
        case Family::Wheel:
            return {{0, n}, std::nullopt, n, n + 1};
        case Family::Antiprism:
            return {{0, n}, IndexRange{n, 2 * n}, std::nullopt, 2 * n};
        default:
            return {{0, n}, IndexRange{n, 2 * n}, 2 * n, 2 * n + 1};
    }
}

const std::string& familyName(Family f)
{
    static const std::array<std::string, 12> names = [] {
        std::array<std::string, 12> out;
        for (const auto& fi : kFamilies) out[static_cast<size_t>(fi.family)] = fi.name;
        return out;
    }();
    return names[static_cast<size_t>(f)];
}

std::optional<Family> parseFamily(const std::string& name)
{
    for (const auto& fi : kFamilies)
        if (name == fi.name) return fi.family;
    return std::nullopt;
}

std::string familyLabel(const FamilySpec& spec)
{
    int shown = spec.family == Family::Wheel ? spec.n + 1 : spec.n;
    return info(spec.family).labelPrefix + std::to_string(shown);
}

int familyMinimumN(Family f)
{
    return info(f).minimumN;
}

}  // namespace ccn
