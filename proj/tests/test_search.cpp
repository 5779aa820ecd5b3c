#include "gcover/errors.hpp"
#include "gcover/families.hpp"
#include "gcover/io.hpp"
#include "gcover/search.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace gcover;

namespace {

SearchSpec exhaustive(Graph base, int r, std::uint64_t budget = 1'000'000)
{
    return SearchSpec::make(std::move(base), GroupSpec::cyclic(r), SearchSpec::Mode::exhaustive, budget);
}

} // namespace

TEST_CASE("exhaustive enumeration sizes")
{
    CHECK(enumerate_gains(exhaustive(complete_graph(4), 2)).size() == 8);
    CHECK(enumerate_gains(exhaustive(petersen(), 2)).size() == 64);
    CHECK(enumerate_gains(exhaustive(complete_graph(5), 2)).size() == 64);
    CHECK(enumerate_gains(exhaustive(complete_graph(4), 3)).size() == 27);
    CHECK(cotree_size(petersen()) == 6);
    CHECK_THROWS_AS(GainStream(exhaustive(complete_graph(6), 2, 1000)), BudgetExceeded);
}

TEST_CASE("exhaustive enumeration is distinct, normalized and ordered")
{
    auto spec = exhaustive(complete_graph(4), 3);
    auto all = enumerate_gains(spec);
    std::set<std::vector<GroupElement>> seen;
    for (const auto& f : all) {
        seen.insert(f.gains());
        for (auto [u, v] : spec.tree)
            CHECK(f.group().is_identity(f.gain(u, v)));
    }
    CHECK(seen.size() == 27);
    // The last co-tree edge varies fastest.
    CHECK(all[0].gains() != all[1].gains());
    CHECK(all.front().gains() == GainGraph::trivial(complete_graph(4), GroupSpec::cyclic(3)).gains());
}

TEST_CASE("random streams are reproducible")
{
    auto spec = SearchSpec::make(complete_graph(5), GroupSpec::abelian({2, 2}), SearchSpec::Mode::random, 20, 42);
    auto a = enumerate_gains(spec);
    auto b = enumerate_gains(spec);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
    spec.seed = 43;
    auto c = enumerate_gains(spec);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs |= !(a[i] == c[i]);
    CHECK(differs);
}

TEST_CASE("search contract checks")
{
    CHECK_THROWS_AS(GainStream(SearchSpec::make(complete_graph(4), GroupSpec::permutation(3),
                                                SearchSpec::Mode::random, 5)),
                    ContractViolation);
    auto spec = exhaustive(complete_graph(4), 2);
    spec.tree = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(GainStream{spec}, ContractViolation);
}

TEST_CASE("K4 with two sheets finds the cube")
{
    auto result = search_two_ev(exhaustive(complete_graph(4), 2));
    CHECK(result.sampled == 8);
    int connected = 0;
    for (const auto& h : result.hits)
        if (h.two_ev.cover_connected) {
            ++connected;
            CHECK(h.two_ev.cover_poly == char_poly(hypercube(3)));
            REQUIRE(h.regularity.drackn.has_value());
            CHECK(*h.regularity.drackn == DracknParams{4, 2, 2});
        }
    CHECK(connected >= 1);
}

TEST_CASE("Petersen with two sheets has no 2ev gains")
{
    CHECK(prefilter_rules_out(petersen(), GroupSpec::cyclic(2)));
    auto filtered = search_two_ev(exhaustive(petersen(), 2));
    CHECK(filtered.prefilter_empty);
    auto full = search_two_ev(exhaustive(petersen(), 2), SearchOptions{false});
    CHECK(full.sampled == 64);
    CHECK(full.hits.empty());
    CHECK_FALSE(prefilter_rules_out(complete_graph(5), GroupSpec::cyclic(2)));
    CHECK_FALSE(prefilter_rules_out(complete_bipartite(2, 2), GroupSpec::cyclic(2)));
}

TEST_CASE("walk-regular cover suite")
{
    auto s = verify_walk_regular_covers({complete_graph(4), cycle_graph(6)},
                                        {GroupSpec::cyclic(2), GroupSpec::abelian({2, 2})}, 30, 1);
    CHECK(s.sampled == 120);
    CHECK(s.two_ev >= 1);
    CHECK(s.verified == s.two_ev);
    CHECK_THROWS_AS(verify_walk_regular_covers({path_graph(3)}, {GroupSpec::cyclic(2)}, 1, 0), ContractViolation);
}

TEST_CASE("drackn verification")
{
    auto k4 = verify_drackn_covers(4, 2, 1000);
    CHECK(k4.sampled == 8);
    CHECK(k4.verified >= 1);
    REQUIRE(k4.drackns.size() == 1);
    CHECK(k4.drackns[0] == DracknParams{4, 2, 2});
    CHECK(k4.arrays[0].to_string() == "{3,2,1;1,2,3}");

    auto k43 = verify_drackn_covers(4, 3, 1000);
    CHECK(k43.sampled == 27);
    for (const auto& d : k43.drackns) {
        CHECK(d.n == 4);
        CHECK(d.r == 3);
    }
    auto k5 = verify_drackn_covers(5, 2, 1000);
    CHECK(k5.sampled == 64);
    CHECK(k5.verified + k5.not_applicable == k5.two_ev);
}

TEST_CASE("strongly regular base equivalence")
{
    auto butson = verify_srg_cover(butson_gain(fourier_butson(3)));
    CHECK(butson.theorem_checks.at("drg_iff_a_equals_lambda") == CheckStatus::pass);
    CHECK(butson.theorem_checks.at("intersection_array") == CheckStatus::pass);
    CHECK(butson.regularity.drg->to_string() == "{3,2,2,1;1,1,2,3}");
    CHECK(butson.two_ev.lambda_exact == 0);

    auto [u, v] = petersen().edges().front();
    auto non = GainGraph::trivial(petersen(), GroupSpec::cyclic(2)).with_gain(u, v, {{1}});
    auto rec = verify_srg_cover(non);
    CHECK(rec.theorem_checks.at("drg_iff_a_equals_lambda") == CheckStatus::not_applicable);

    for (const auto& f : enumerate_gains(exhaustive(complete_multipartite({2, 2, 2}), 2)))
        CHECK_NOTHROW(verify_srg_cover(f));

    CHECK_THROWS_AS(verify_srg_cover(huang_signing(3)), ContractViolation);
    CHECK_THROWS_AS(verify_srg_cover(s3_cover_k5()), ContractViolation);
}

TEST_CASE("bipartite base verification")
{
    auto k23 = verify_bipartite_covers(2, 3, 2, 1000);
    CHECK(k23.two_ev - k23.not_applicable == 0);
    auto k22 = verify_bipartite_covers(2, 2, 2, 1000);
    CHECK(k22.verified >= 1);
    CHECK(k22.arrays[0].to_string() == "{2,1,1,1;1,1,1,2}");
    auto k33 = verify_bipartite_covers(3, 3, 2, 1000);
    CHECK(k33.verified == 0);
}

TEST_CASE("passing runs leave no reproducer behind")
{
    auto dir = std::filesystem::temp_directory_path() / "gcover-repro-test";
    std::filesystem::remove_all(dir);
    VerifyOptions opts{dir};
    CHECK_NOTHROW(verify_drackn_covers(4, 2, 1000, opts));
    CHECK_FALSE(std::filesystem::exists(dir));
}
