#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccn {

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v, sorted lexicographically), so equal graphs serialize to equal bytes.
// Disconnected graphs are fine; self-loops are not.

using Edge = std::pair<int, int>;

struct SelfLoopError : std::invalid_argument {
    explicit SelfLoopError(int v);
    int vertex;
};

struct VertexOutOfRangeError : std::invalid_argument {
    VertexOutOfRangeError(int v, int n);
    int vertex;
    int n;
};

class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertexCount() const { return n_; }
    int edgeCount() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // u < v, lexicographic
    std::vector<std::vector<int>> adj_;  // sorted neighbour lists
};

// Validates, normalizes (u,v)->(min,max), drops duplicates.
Graph makeGraph(int n, const std::vector<Edge>& edges);

struct DegreeRun {
    int degree;
    int count;
    bool operator==(const DegreeRun&) const = default;
};

// Run-length encoding of the sorted degree sequence, degree ascending.
struct DegreeSequence {
    std::vector<DegreeRun> runs;
    int distinctCount() const { return static_cast<int>(runs.size()); }
};

DegreeSequence degreeSequence(const Graph& g);

// True iff every vertex is reachable from vertex 0 (n >= 1).
bool isConnected(const Graph& g);

// Wire format: {"n": <int>, "edges": [[u,v], ...]} with the normalization
// above, so serialize/deserialize is the identity on canonical bytes.
std::string toJson(const Graph& g);
Graph fromJson(const std::string& text);

// Undirected DOT. Isolated vertices get bare node statements so nothing
// is lost on round trips through other tools.
std::string toDot(const Graph& g);

}  // namespace ccn
