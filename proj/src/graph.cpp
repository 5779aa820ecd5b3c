#include "gcover/graph.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace gcover {

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges))
{
    if (n < 0)
        throw ParameterError("graph order must be non-negative");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
        if (u == v)
            throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ParameterError("repeated edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");

    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::valency() const
{
    if (n_ == 0)
        return std::nullopt;
    int k = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != k)
            return std::nullopt;
    return k;
}

IntMatrix Graph::adjacency_matrix() const
{
    auto n = static_cast<std::size_t>(n_);
    IntMatrix a(n, n);
    for (auto [u, v] : edges_) {
        a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
        a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
    }
    return a;
}

// ---------------------------------------------------------------------------

Graph complete_graph(int n)
{
    if (n < 1)
        throw ParameterError("complete_graph: empty graph requested");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return {n, std::move(e)};
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    if (parts.empty())
        throw ParameterError("complete_multipartite: no parts");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1)
            throw ParameterError("complete_multipartite: part sizes must be positive");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    int n = static_cast<int>(part_of.size());
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                e.emplace_back(u, v);
    return {n, std::move(e)};
}

Graph complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw ParameterError("complete_bipartite: sides must be positive");
    return complete_multipartite({m, n});
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw ParameterError("cycle: n must be at least 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return {n, std::move(e)};
}

Graph path_graph(int n)
{
    if (n < 1)
        throw ParameterError("path: n must be positive");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return {n, std::move(e)};
}

Graph hypercube(int n)
{
    if (n < 0 || n > 24)
        throw ParameterError("hypercube: dimension out of range");
    int size = 1 << n;
    std::vector<Edge> e;
    for (int v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b) {
            int w = v ^ (1 << b);
            if (v < w)
                e.emplace_back(v, w);
        }
    return {size, std::move(e)};
}

Graph folded_cube(int n)
{
    if (n < 2 || n > 25)
        throw ParameterError("folded_cube: n must be at least 2");
    Graph q = hypercube(n - 1);
    int size = q.order();
    int mask = size - 1;
    auto e = q.edges();
    for (int v = 0; v < size; ++v) {
        int w = v ^ mask;
        // At n = 2 the matching edge coincides with the single cube edge.
        if (v < w && !q.adjacent(v, w))
            e.emplace_back(v, w);
    }
    return {size, std::move(e)};
}

std::vector<std::vector<int>> k_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b)
{
    int count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

Graph subset_graph(int n, int k, int wanted_intersection)
{
    auto subsets = k_subsets(n, k);
    int size = static_cast<int>(subsets.size());
    std::vector<Edge> e;
    for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v)
            if (intersection_size(subsets[static_cast<std::size_t>(u)], subsets[static_cast<std::size_t>(v)]) == wanted_intersection)
                e.emplace_back(u, v);
    return {size, std::move(e)};
}

} // namespace

Graph kneser(int n, int k)
{
    if (k < 1 || n < 2 * k)
        throw ParameterError("kneser: need k >= 1 and n >= 2k");
    return subset_graph(n, k, 0);
}

Graph johnson(int n, int k)
{
    if (k < 1 || n < k)
        throw ParameterError("johnson: need n >= k >= 1");
    return subset_graph(n, k, k - 1);
}

Graph petersen()
{
    return kneser(5, 2);
}

Graph line_graph(const Graph& g)
{
    const auto& edges = g.edges();
    int m = static_cast<int>(edges.size());
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[static_cast<std::size_t>(i)];
            auto [c, d] = edges[static_cast<std::size_t>(j)];
            if (a == c || a == d || b == c || b == d)
                e.emplace_back(i, j);
        }
    return {m, std::move(e)};
}

// ---------------------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceTable::unreachable);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[static_cast<std::size_t>(w)] == DistanceTable::unreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(w);
            }
    }
    return dist;
}

DistanceTable::DistanceTable(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
{
    for (Vertex s = 0; s < n_; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s) * n_);
        for (int d : row) {
            if (d == unreachable)
                connected_ = false;
            else
                max_ = std::max(max_, d);
        }
    }
}

DistanceTable distances(const Graph& g)
{
    return DistanceTable(g);
}

std::optional<int> girth(const Graph& g)
{
    // From each root, any non-tree edge (u,w) closes a closed walk of length
    // d(u)+d(w)+1 through the root; the minimum over all roots is attained by
    // a shortest cycle (odd cycles via an edge between equal levels, even
    // cycles via an edge between consecutive levels).
    int best = std::numeric_limits<int>::max();
    int n = g.order();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            if (2 * dist[static_cast<std::size_t>(u)] >= best)
                break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == DistanceTable::unreachable; });
}

std::optional<int> diameter(const Graph& g)
{
    DistanceTable t(g);
    if (!t.connected())
        return std::nullopt;
    return t.max_distance();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (Vertex w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

std::vector<Edge> bfs_spanning_tree(const Graph& g, Vertex root)
{
    int n = g.order();
    if (n == 0)
        return {};
    if (root < 0 || root >= n)
        throw ContractViolation("spanning tree root out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Edge> tree;
    std::queue<Vertex> q;
    seen[static_cast<std::size_t>(root)] = true;
    q.push(root);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                tree.emplace_back(std::min(u, w), std::max(u, w));
                q.push(w);
            }
    }
    if (static_cast<int>(tree.size()) != n - 1)
        throw ContractViolation("spanning tree requested for a disconnected graph");
    std::sort(tree.begin(), tree.end());
    return tree;
}

bool is_bipartite(const Graph& g)
{
    int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace gcover
