#include "gcover/gain_graph.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <queue>

namespace gcover {

GainGraph::GainGraph(Graph base, GroupSpec group, std::vector<GroupElement> gains)
    : base_(std::move(base)), group_(std::move(group)), gains_(std::move(gains))
{
    if (gains_.size() != base_.size())
        throw ContractViolation("gain count does not match edge count");
    for (const auto& g : gains_)
        if (!group_.contains(g))
            throw ContractViolation("gain '" + group_.format(g) + "' is not an element of " + group_.describe());
}

GainGraph GainGraph::trivial(Graph base, GroupSpec group)
{
    std::vector<GroupElement> gains(base.size(), group.identity());
    return {std::move(base), std::move(group), std::move(gains)};
}

std::size_t GainGraph::edge_index(Vertex u, Vertex v) const
{
    Edge key{std::min(u, v), std::max(u, v)};
    const auto& edges = base_.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key)
        throw ContractViolation("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    return static_cast<std::size_t>(it - edges.begin());
}

GroupElement GainGraph::gain(Vertex u, Vertex v) const
{
    const auto& g = gains_[edge_index(u, v)];
    return u < v ? g : group_.inverse(g);
}

GainGraph GainGraph::with_gain(Vertex u, Vertex v, const GroupElement& g) const
{
    auto gains = gains_;
    gains[edge_index(u, v)] = u < v ? g : group_.inverse(g);
    return {base_, group_, std::move(gains)};
}

std::vector<Vertex> CoverGraph::fiber(Vertex base_vertex) const
{
    std::vector<Vertex> out;
    for (int j = 0; j < sheets; ++j)
        out.push_back(vertex(base_vertex, j));
    return out;
}

CoverGraph lift(const GainGraph& f)
{
    const auto& group = f.group();
    const int n = f.base().order();
    const int r = group.sheets();

    CoverGraph c;
    c.base_order = n;
    c.sheets = r;
    c.fiber_of.resize(static_cast<std::size_t>(n * r));
    c.sheet_of.resize(static_cast<std::size_t>(n * r));
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < r; ++j) {
            c.fiber_of[static_cast<std::size_t>(c.vertex(v, j))] = v;
            c.sheet_of[static_cast<std::size_t>(c.vertex(v, j))] = j;
        }

    std::vector<Edge> edges;
    edges.reserve(f.base().size() * static_cast<std::size_t>(r));
    const auto& base_edges = f.base().edges();
    for (std::size_t e = 0; e < base_edges.size(); ++e) {
        auto [u, v] = base_edges[e];
        const auto& g = f.gains()[e]; // f(u, v): sheet j over v joins sheet g j over u
        for (int j = 0; j < r; ++j)
            edges.emplace_back(c.vertex(v, j), c.vertex(u, group.act(g, j)));
    }
    c.graph = Graph(n * r, std::move(edges));
    return c;
}

namespace {

void check_spanning_tree(const Graph& base, const std::vector<Edge>& tree)
{
    const int n = base.order();
    if (n == 0)
        return;
    if (static_cast<int>(tree.size()) != n - 1)
        throw ContractViolation("tree does not have n-1 edges");
    for (auto [u, v] : tree)
        if (u < 0 || v < 0 || u >= n || v >= n || !base.adjacent(u, v))
            throw ContractViolation("tree edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not a base edge");
    Graph t(n, tree);
    if (!is_connected(t))
        throw ContractViolation("tree does not span the base");
}

} // namespace

GainGraph normalize(const GainGraph& f, const std::vector<Edge>& tree)
{
    const auto& base = f.base();
    const auto& group = f.group();
    if (!is_connected(base))
        throw ContractViolation("normalize requires a connected base");
    check_spanning_tree(base, tree);

    const int n = base.order();
    if (n == 0)
        return f;
    Graph t(n, tree);

    // Fiber relabelings s_v, chosen so g(p, c) = s_p^{-1} f(p, c) s_c = id on
    // tree edges: s_c = f(p, c)^{-1} s_p.
    std::vector<GroupElement> relabel(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    const Vertex root = tree.empty() ? 0 : tree.front().first;
    relabel[static_cast<std::size_t>(root)] = group.identity();
    seen[static_cast<std::size_t>(root)] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
        Vertex p = q.front();
        q.pop();
        for (Vertex c : t.neighbors(p)) {
            if (seen[static_cast<std::size_t>(c)])
                continue;
            seen[static_cast<std::size_t>(c)] = true;
            relabel[static_cast<std::size_t>(c)] = group.compose(group.inverse(f.gain(p, c)), relabel[static_cast<std::size_t>(p)]);
            q.push(c);
        }
    }

    std::vector<GroupElement> gains;
    gains.reserve(base.size());
    for (std::size_t e = 0; e < base.size(); ++e) {
        auto [u, v] = base.edges()[e];
        const auto& su = relabel[static_cast<std::size_t>(u)];
        const auto& sv = relabel[static_cast<std::size_t>(v)];
        gains.push_back(group.compose(group.inverse(su), group.compose(f.gains()[e], sv)));
    }
    return {base, group, std::move(gains)};
}

GainGraph normalize_at(const GainGraph& f, Vertex root)
{
    if (!is_connected(f.base()))
        throw ContractViolation("normalize requires a connected base");
    return normalize(f, bfs_spanning_tree(f.base(), root));
}

bool is_balanced(const GainGraph& f)
{
    if (!is_connected(f.base()))
        throw ContractViolation("is_balanced requires a connected base");
    if (f.base().order() == 0)
        return true;
    auto g = normalize_at(f, 0);
    return std::all_of(g.gains().begin(), g.gains().end(),
                       [&](const GroupElement& x) { return g.group().is_identity(x); });
}

std::vector<std::vector<Vertex>> components(const CoverGraph& c)
{
    return connected_components(c.graph);
}

} // namespace gcover
