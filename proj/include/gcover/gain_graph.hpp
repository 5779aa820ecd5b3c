#pragma once

#include "gcover/graph.hpp"
#include "gcover/group.hpp"

#include <vector>

namespace gcover {

/// A graph with a group element on every oriented edge, f(v,u) = f(u,v)^{-1}.
///
/// One gain is stored per undirected edge, for the orientation (u, v) with
/// u < v, aligned with base().edges(). The reverse orientation is the inverse,
/// so the symmetric arc condition holds by construction.
class GainGraph {
public:
    GainGraph(Graph base, GroupSpec group, std::vector<GroupElement> gains);

    /// Every edge carries the identity.
    static GainGraph trivial(Graph base, GroupSpec group);

    const Graph& base() const noexcept { return base_; }
    const GroupSpec& group() const noexcept { return group_; }
    /// Gains aligned with base().edges() (orientation u < v).
    const std::vector<GroupElement>& gains() const noexcept { return gains_; }

    /// f(u, v) for an edge {u, v}; throws ContractViolation for non-edges.
    GroupElement gain(Vertex u, Vertex v) const;
    std::size_t edge_index(Vertex u, Vertex v) const;

    /// Copy with f(u, v) := g (and f(v, u) := g^{-1}).
    GainGraph with_gain(Vertex u, Vertex v, const GroupElement& g) const;

    bool operator==(const GainGraph& o) const
    {
        return base_ == o.base_ && group_ == o.group_ && gains_ == o.gains_;
    }

private:
    Graph base_;
    GroupSpec group_;
    std::vector<GroupElement> gains_;
};

/// The lifted graph on n*r vertices together with the covering map.
/// Vertex (v, j) has index v * r + j.
struct CoverGraph {
    Graph graph;
    std::vector<Vertex> fiber_of;
    std::vector<int> sheet_of;
    int base_order = 0;
    int sheets = 0;

    Vertex vertex(Vertex base_vertex, int sheet) const { return base_vertex * sheets + sheet; }
    std::vector<Vertex> fiber(Vertex base_vertex) const;
};

/// (v, j) ~ (u, k) exactly when {u, v} is a base edge and f(u, v) j = k
/// (left action: translation for abelian groups, the given permutation
/// otherwise).
CoverGraph lift(const GainGraph& f);

/// Relabels each fiber so that every edge of `tree` carries the identity:
/// g(i, j) = s_i^{-1} f(i, j) s_j. The lift of the result is isomorphic to the
/// lift of f. Throws ContractViolation if the base is disconnected or `tree`
/// is not a spanning tree of it.
GainGraph normalize(const GainGraph& f, const std::vector<Edge>& tree);

/// normalize() against the BFS tree rooted at `root`; every edge at `root`
/// becomes the identity.
GainGraph normalize_at(const GainGraph& f, Vertex root);

/// True iff every cycle has identity net gain (co-tree gains vanish after
/// normalization). Throws ContractViolation for a disconnected base.
bool is_balanced(const GainGraph& f);

std::vector<std::vector<Vertex>> components(const CoverGraph& c);

} // namespace gcover
