#include "ccn/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ccn {

SelfLoopError::SelfLoopError(int v)
    : std::invalid_argument("self-loop at vertex " + std::to_string(v)), vertex(v)
{
}

VertexOutOfRangeError::VertexOutOfRangeError(int v, int n)
    : std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n)),
      vertex(v),
      n(n)
{
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n)
{
    if (n < 0) throw std::invalid_argument("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw SelfLoopError(u);
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const
{
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph makeGraph(int n, const std::vector<Edge>& edges)
{
    return Graph(n, edges);
}

DegreeSequence degreeSequence(const Graph& g)
{
    std::vector<int> degs(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());

    DegreeSequence seq;
    for (int i = 0; i < static_cast<int>(degs.size());) {
        int j = i;
        while (j < static_cast<int>(degs.size()) && degs[j] == degs[i]) ++j;
        seq.runs.push_back({degs[i], j - i});
        i = j;
    }
    return seq;
}

bool isConnected(const Graph& g)
{
    const int n = g.vertexCount();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbours(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

std::string toJson(const Graph& g)
{
    nlohmann::ordered_json j;
    j["n"] = g.vertexCount();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph fromJson(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs {\"n\", \"edges\"}");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge must be a pair [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return makeGraph(n, edges);
}

std::string toDot(const Graph& g)
{
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertexCount(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ccn
