#include "gcover/errors.hpp"
#include "gcover/families.hpp"
#include "gcover/io.hpp"
#include "gcover/report.hpp"

#include <doctest.h>

#include <random>

using namespace gcover;

TEST_CASE("edge lists")
{
    auto g = parse_edge_list("# petersen-ish\ngraph 3\n\nedge 0 1  # first\nedge 2 1\n");
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(format_edge_list(g) == "graph 3\nedge 0 1\nedge 1 2\n");
    CHECK(parse_edge_list(format_edge_list(petersen())) == petersen());
}

TEST_CASE("edge-list errors carry line numbers")
{
    auto line_of = [](const std::string& text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("graph 3\nedge 0 1\nedge 1 1\n") == 3);
    CHECK(line_of("graph 3\nedge 0 5\n") == 2);
    CHECK(line_of("graph 3\n\nedge 0 1\nedge 1 0\n") == 4);
    CHECK(line_of("graph x\n") == 1);
    CHECK(line_of("graph 3\nvertex 1\n") == 2);
    CHECK(line_of("graph 3\nedge 0\n") == 2);
}

TEST_CASE("gain files")
{
    const std::string text = "gainfile 1\ngroup cyclic 3\nvertices 3\nedge 1 0 1\nedge 1 2 2\nedge 0 2 0\n";
    auto f = parse_gain_file(text);
    // Written as f(1, 0) = 1, so the stored u < v gain is its inverse.
    CHECK(f.gain(1, 0) == GroupElement{{1}});
    CHECK(f.gain(0, 1) == GroupElement{{2}});
    CHECK(format_gain_file(f) == "gainfile 1\ngroup cyclic 3\nvertices 3\nedge 0 1 2\nedge 0 2 0\nedge 1 2 2\n");

    auto p = parse_gain_file("gainfile 1\ngroup perm 3\nvertices 2\nedge 1 0 perm 1,2,0\n");
    CHECK(p.gain(1, 0) == GroupElement{{1, 2, 0}});
    CHECK(p.gain(0, 1) == GroupElement{{2, 0, 1}});

    auto v = parse_gain_file("gainfile 1\ngroup abelian 2 2\nvertices 2\nedge 0 1 1,1\n");
    CHECK(v.gain(0, 1) == GroupElement{{1, 1}});
}

TEST_CASE("gain-file errors carry line numbers")
{
    auto line_of = [](const std::string& text) {
        try {
            parse_gain_file(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("gainfile 2\n") == 1);
    CHECK(line_of("gainfile 1\ngroup cyclic 1\n") == 2);
    CHECK(line_of("gainfile 1\ngroup cyclic 3\nvertices 2\nedge 0 1 3\n") == 4);
    CHECK(line_of("gainfile 1\ngroup cyclic 3\nvertices 2\nedge 0 1 1\nedge 1 0 2\n") == 5);
    CHECK(line_of("gainfile 1\ngroup perm 3\nvertices 2\n# c\nedge 0 1 perm 0,0,1\n") == 5);
    CHECK(line_of("gainfile 1\ngroup perm 3\nvertices 2\nedge 0 1 1,0,2\n") == 4);
    CHECK(line_of("gainfile 1\ngroup dihedral 3\n") == 2);
    CHECK(line_of("gainfile 1\ngroup cyclic 2\nvertices 2\nedge 0 2 1\n") == 4);
}

TEST_CASE("gain files round-trip byte for byte")
{
    std::mt19937_64 rng(2024);
    const std::vector<GroupSpec> groups{GroupSpec::cyclic(2), GroupSpec::cyclic(7), GroupSpec::abelian({2, 3, 2}),
                                        GroupSpec::permutation(4)};
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        Graph base(n, edges);
        const auto& group = groups[static_cast<std::size_t>(trial) % groups.size()];
        std::vector<GroupElement> gains;
        for (std::size_t e = 0; e < base.size(); ++e) {
            if (group.kind() == GroupSpec::Kind::permutation) {
                std::vector<int> p{0, 1, 2, 3};
                std::shuffle(p.begin(), p.end(), rng);
                gains.push_back({p});
            } else {
                gains.push_back(group.element_at(static_cast<std::int64_t>(rng() % group.order())));
            }
        }
        GainGraph f(base, group, gains);
        const std::string once = format_gain_file(f);
        const GainGraph back = parse_gain_file(once);
        CHECK(back == f);
        CHECK(format_gain_file(back) == once);
    }
}

TEST_CASE("reports")
{
    auto r = analyze_gain(huang_signing(3), {});
    CHECK(r["two_ev"]["is_two_ev"] == true);
    CHECK(r["two_ev"]["theta"] == format_real(std::sqrt(3.0)));
    CHECK(r["spectra"]["base"]["spectrum"][0] == Json::array({3, 1}));
    const auto& nontrivial = r["spectra"]["characters"][1]["spectrum"];
    REQUIRE(nontrivial.size() == 2);
    CHECK(nontrivial[0][1] == 4);
    CHECK(r["spectra"]["characters"][1]["minpoly"]["status"] == "ok");
    CHECK_FALSE(r.contains("timing"));
    CHECK(analyze_gain(huang_signing(3), {}).dump() == r.dump());

    auto b = analyze_gain(butson_gain(fourier_butson(3)), {});
    CHECK(b["regularity"]["drg"] == "{3,2,2,1;1,1,2,3}");

    auto k = analyze_gain(k3n_nonexample(2), {});
    CHECK(k["two_ev"]["is_two_ev"] == false);

    auto s = analyze_gain(s3_cover_k5(), {});
    CHECK_FALSE(s["spectra"].contains("characters"));
    CHECK(s["two_ev"]["theta"] == 2);

    CertifyChecks drg;
    drg.drg = true;
    auto p = certify_graph(petersen(), drg, {});
    CHECK(p["regularity"]["drg"] == "{3,2;1,1}");
    CHECK_FALSE(p["regularity"].contains("walk_regular"));

    auto q = certify_graph(hypercube(3), CertifyChecks::all(), {});
    CHECK(q["regularity"]["drackn"]["n"] == 4);
    CHECK(q["regularity"]["drackn"]["t"] == 2);
}
