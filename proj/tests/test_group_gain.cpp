#include "gcover/errors.hpp"
#include "gcover/families.hpp"
#include "gcover/gain_graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gcover;

TEST_CASE("group arithmetic")
{
    auto z = GroupSpec::cyclic(5);
    CHECK(z.order() == 5);
    CHECK(z.orders() == std::vector<int>{5});
    CHECK(z.compose({{3}}, {{4}}) == GroupElement{{2}});
    CHECK(z.inverse({{2}}) == GroupElement{{3}});

    auto v = GroupSpec::abelian({2, 2});
    CHECK(v.order() == 4);
    CHECK_FALSE(v.is_cyclic());
    for (std::int64_t i = 0; i < 4; ++i) {
        auto g = v.element_at(i);
        CHECK(v.index_of(g) == i);
        CHECK(v.is_identity(v.compose(g, v.inverse(g))));
    }
    // First component most significant.
    CHECK(v.element_at(1) == GroupElement{{0, 1}});
    CHECK(v.element_at(2) == GroupElement{{1, 0}});

    auto s3 = GroupSpec::permutation(3);
    const GroupElement a{{1, 0, 2}};
    const GroupElement b{{0, 2, 1}};
    // compose(a, b)(j) = a(b(j))
    CHECK(s3.compose(a, b) == GroupElement{{1, 2, 0}});
    CHECK(s3.compose(s3.compose(a, b), a) == s3.compose(a, s3.compose(b, a)));
    CHECK(s3.inverse(GroupElement{{1, 2, 0}}) == GroupElement{{2, 0, 1}});
    CHECK(s3.act(GroupElement{{1, 2, 0}}, 0) == 1);

    CHECK_THROWS_AS(GroupSpec::cyclic(1), ParameterError);
    CHECK_THROWS_AS(GroupSpec::abelian({}), ParameterError);
    CHECK_THROWS_AS(s3.parse("0,0,1"), ParameterError);
    CHECK_THROWS_AS(z.parse("5"), ParameterError);
    CHECK(v.parse("1,0") == GroupElement{{1, 0}});
    CHECK(v.format({{1, 0}}) == "1,0");
}

TEST_CASE("gain graph stores one orientation")
{
    auto f = GainGraph::trivial(complete_graph(3), GroupSpec::cyclic(3)).with_gain(2, 0, {{1}});
    CHECK(f.gain(2, 0) == GroupElement{{1}});
    CHECK(f.gain(0, 2) == GroupElement{{2}});
    CHECK_THROWS_AS(f.gain(0, 0), ContractViolation);
    CHECK_THROWS_AS(GainGraph(complete_graph(3), GroupSpec::cyclic(2), {{{0}}}), ContractViolation);
}

TEST_CASE("lift structure")
{
    SUBCASE("balanced gains give disjoint copies")
    {
        auto c = lift(GainGraph::trivial(complete_graph(3), GroupSpec::cyclic(2)));
        CHECK(c.graph.order() == 6);
        CHECK(components(c).size() == 2);
        for (const auto& comp : components(c))
            CHECK(comp.size() == 3);
    }
    SUBCASE("huang signing of Q2 lifts to the 8-cycle")
    {
        auto c = lift(huang_signing(2));
        CHECK(c.graph.order() == 8);
        CHECK(c.graph.valency() == 2);
        CHECK(is_connected(c.graph));
        CHECK(girth(c.graph) == 8);
    }
    SUBCASE("S3 gains on K5")
    {
        auto c = lift(s3_cover_k5());
        CHECK(c.graph.order() == 15);
        CHECK(c.graph.valency() == 4);
    }
    SUBCASE("component counts")
    {
        CHECK(components(lift(GainGraph::trivial(complete_graph(4), GroupSpec::cyclic(3)))).size() == 3);
        CHECK(components(cohen_tits_cover(3)).size() == 1);
        CHECK(components(lift(GainGraph::trivial(Graph(3, {}), GroupSpec::cyclic(2)))).size() == 6);
    }
}

TEST_CASE("lift matches the block permutation-matrix construction")
{
    std::mt19937_64 rng(11);
    const std::vector<GroupSpec> groups{GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::abelian({2, 2}),
                                        GroupSpec::permutation(3)};
    for (int trial = 0; trial < 60; ++trial) {
        auto base = oracle::random_graph(4 + static_cast<int>(rng() % 3), 0.6, rng);
        const auto& group = groups[static_cast<std::size_t>(trial) % groups.size()];
        std::vector<GroupElement> gains;
        for (std::size_t e = 0; e < base.size(); ++e) {
            if (group.kind() == GroupSpec::Kind::permutation) {
                std::vector<int> p{0, 1, 2};
                std::shuffle(p.begin(), p.end(), rng);
                gains.push_back({p});
            } else {
                gains.push_back(group.element_at(static_cast<std::int64_t>(rng() % group.order())));
            }
        }
        GainGraph f(base, group, gains);
        auto c = lift(f);
        CHECK(c.graph.adjacency_matrix() == oracle::kronecker_lift(f));
    }
}

TEST_CASE("fibers are cocliques, edges lift to perfect matchings, projection is a homomorphism")
{
    auto f = huang_signing(3);
    auto c = lift(f);
    for (Vertex v = 0; v < f.base().order(); ++v) {
        auto fiber = c.fiber(v);
        CHECK(fiber.size() == 2);
        CHECK_FALSE(c.graph.adjacent(fiber[0], fiber[1]));
    }
    for (auto [u, v] : f.base().edges()) {
        for (Vertex x : c.fiber(u)) {
            int matched = 0;
            for (Vertex y : c.fiber(v))
                matched += c.graph.adjacent(x, y);
            CHECK(matched == 1);
        }
    }
    for (auto [x, y] : c.graph.edges())
        CHECK(f.base().adjacent(c.fiber_of[static_cast<std::size_t>(x)], c.fiber_of[static_cast<std::size_t>(y)]));
}

TEST_CASE("translation on sheets is an automorphism of an abelian lift")
{
    auto group = GroupSpec::abelian({2, 3});
    std::mt19937_64 rng(3);
    auto base = complete_graph(4);
    std::vector<GroupElement> gains;
    for (std::size_t e = 0; e < base.size(); ++e)
        gains.push_back(group.element_at(static_cast<std::int64_t>(rng() % 6)));
    GainGraph f(base, group, gains);
    auto c = lift(f);
    for (std::int64_t s = 0; s < 6; ++s) {
        auto g = group.element_at(s);
        auto image = [&](Vertex x) {
            const int sheet = c.sheet_of[static_cast<std::size_t>(x)];
            return c.vertex(c.fiber_of[static_cast<std::size_t>(x)],
                            static_cast<int>(group.index_of(group.compose(group.element_at(sheet), g))));
        };
        for (auto [x, y] : c.graph.edges())
            CHECK(c.graph.adjacent(image(x), image(y)));
    }
}

TEST_CASE("normalization")
{
    SUBCASE("already normal input is unchanged")
    {
        auto base = cycle_graph(5);
        auto tree = bfs_spanning_tree(base, 0);
        auto f = GainGraph::trivial(base, GroupSpec::cyclic(3)).with_gain(2, 3, {{1}});
        auto g = normalize(f, tree);
        bool on_tree = false;
        for (auto [u, v] : tree)
            on_tree |= std::min(u, v) == 2 && std::max(u, v) == 3;
        if (!on_tree)
            CHECK(g == f);
    }
    SUBCASE("huang signing of Q3")
    {
        auto f = huang_signing(3);
        auto tree = bfs_spanning_tree(f.base(), 0);
        auto g = normalize(f, tree);
        CHECK(tree.size() == 7);
        for (auto [u, v] : tree)
            CHECK(f.group().is_identity(g.gain(u, v)));
        CHECK(girth(lift(g).graph) == 6);
        CHECK(oracle::faddeev_leverrier(lift(g).graph.adjacency_matrix()) ==
              oracle::faddeev_leverrier(lift(f).graph.adjacency_matrix()));
    }
    SUBCASE("cycle gains collapse onto the co-tree edge")
    {
        auto group = GroupSpec::cyclic(5);
        auto f = GainGraph(cycle_graph(6), group, {{{1}}, {{2}}, {{0}}, {{4}}, {{3}}, {{1}}});
        // Net gain around 0-1-2-3-4-5-0.
        GroupElement net = group.identity();
        for (int i = 0; i < 6; ++i)
            net = group.compose(net, f.gain(i, (i + 1) % 6));
        auto g = normalize_at(f, 0);
        int non_identity = 0;
        GroupElement found = group.identity();
        for (auto [u, v] : g.base().edges())
            if (!group.is_identity(g.gain(u, v))) {
                ++non_identity;
                found = g.gain(u, v);
            }
        CHECK(non_identity <= 1);
        // Going around once in some direction recovers the net gain.
        GroupElement around = group.identity();
        for (int i = 0; i < 6; ++i)
            around = group.compose(around, g.gain(i, (i + 1) % 6));
        CHECK(around == net);
        (void)found;
    }
    SUBCASE("disconnected base is rejected")
    {
        auto f = GainGraph::trivial(Graph(4, {{0, 1}, {2, 3}}), GroupSpec::cyclic(2));
        CHECK_THROWS_AS(normalize_at(f, 0), ContractViolation);
        CHECK_THROWS_AS(is_balanced(f), ContractViolation);
    }
}

TEST_CASE("balance")
{
    auto z2 = GroupSpec::cyclic(2);
    CHECK(is_balanced(GainGraph::trivial(petersen(), z2)));
    CHECK_FALSE(is_balanced(huang_signing(2)));
    GainGraph k3(complete_graph(3), z2, {{{1}}, {{1}}, {{0}}});
    CHECK(is_balanced(k3));
    CHECK(components(lift(k3)).size() == 2);
}
