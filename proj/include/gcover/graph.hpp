#pragma once

#include "gcover/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gcover {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
/// The constructor rejects self-loops, repeated edges and out-of-range ends,
/// so every Graph value is simple. Disconnected graphs are allowed.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Common valency, or nothing if the graph is not regular (or empty).
    std::optional<int> valency() const;

    IntMatrix adjacency_matrix() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Generators. Vertex labels are canonical: hypercube vertices are bitstrings
// read as integers; kneser/johnson vertices are k-subsets in lexicographic
// rank order.

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
/// Complete multipartite graph with the given part sizes, parts laid out consecutively.
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph hypercube(int n);
/// Q_{n-1} plus the perfect matching v <-> complement(v).
Graph folded_cube(int n);
Graph kneser(int n, int k);
Graph johnson(int n, int k);
Graph petersen();
Graph line_graph(const Graph& g);

/// k-subsets of {0..n-1} in lexicographic order, each sorted ascending.
std::vector<std::vector<int>> k_subsets(int n, int k);

// ---------------------------------------------------------------------------
// Combinatorial queries.

/// All-pairs hop distances; unreachable pairs hold `unreachable`.
class DistanceTable {
public:
    static constexpr int unreachable = -1;

    explicit DistanceTable(const Graph& g);

    int order() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const
    {
        return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    bool connected() const noexcept { return connected_; }
    /// Largest finite distance.
    int max_distance() const noexcept { return max_; }

private:
    int n_;
    std::vector<int> dist_;
    bool connected_ = true;
    int max_ = 0;
};

DistanceTable distances(const Graph& g);

/// BFS hop distances from a single source (unreachable = -1).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Shortest cycle length; nothing for forests.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);

/// Diameter of a connected graph; nothing when disconnected.
std::optional<int> diameter(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Edges of a BFS spanning tree rooted at `root`, normalized (u < v).
/// Throws ContractViolation when g is disconnected.
std::vector<Edge> bfs_spanning_tree(const Graph& g, Vertex root = 0);

bool is_bipartite(const Graph& g);

} // namespace gcover
