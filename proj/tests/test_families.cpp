#include "gcover/errors.hpp"
#include "gcover/families.hpp"
#include "gcover/regularity.hpp"
#include "gcover/spectral.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gcover;

TEST_CASE("huang signing reproduces the recursive matrix")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(signed_adjacency(huang_signing(n)) == huang_matrix(n));
    auto a1 = huang_matrix(1);
    CHECK(a1(0, 1) == 1);
    CHECK(a1(1, 0) == 1);
    CHECK(huang_signing(1).gains().front() == GroupElement{{0}});
}

TEST_CASE("huang matrices square to n I")
{
    for (int n = 1; n <= 6; ++n) {
        auto a = huang_matrix(n);
        auto expected = IntMatrix::identity(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            expected(i, i) = n;
        CHECK(a * a == expected);
    }
}

TEST_CASE("every 4-cycle of Q4 carries an odd number of negative edges")
{
    auto f = huang_signing(4);
    const auto& q = f.base();
    int cycles = 0;
    // A 4-cycle of Q_n is v, v^a, v^a^b, v^b for bits a < b.
    for (Vertex v = 0; v < q.order(); ++v)
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                if ((v >> a) & 1 || (v >> b) & 1)
                    continue;
                const Vertex w[4] = {v, v ^ (1 << a), v ^ (1 << a) ^ (1 << b), v ^ (1 << b)};
                int negative = 0;
                for (int i = 0; i < 4; ++i)
                    negative += f.gain(w[i], w[(i + 1) % 4]).values[0];
                CHECK(negative % 2 == 1);
                ++cycles;
            }
    CHECK(cycles == 24);
}

TEST_CASE("cohen-tits covers")
{
    auto c2 = cohen_tits_cover(2).graph;
    CHECK(c2.order() == 8);
    CHECK(c2.valency() == 2);
    CHECK(girth(c2) == 8);

    auto c3 = cohen_tits_cover(3).graph;
    CHECK(c3.order() == 16);
    CHECK(girth(c3) == 6);
    CHECK_FALSE(is_distance_regular(c3).has_value());

    CHECK(is_walk_regular(cohen_tits_cover(4).graph));
    CHECK_THROWS_AS(cohen_tits_cover(1), ParameterError);
}

TEST_CASE("butson covers")
{
    auto h = fourier_butson(4);
    CHECK(h.entries(2, 3) == 2);
    CHECK_NOTHROW(validate_butson(h));

    ButsonMatrix bad{2, 2, Matrix<int>(2, 2)};
    CHECK_THROWS_AS(validate_butson(bad), ParameterError);
    ButsonMatrix out_of_range{2, 2, Matrix<int>(2, 2)};
    out_of_range.entries(1, 1) = 5;
    CHECK_THROWS_AS(validate_butson(out_of_range), ParameterError);

    auto c2 = lift(butson_gain(fourier_butson(2))).graph;
    CHECK(girth(c2) == 8);
    CHECK(c2.order() == 8);
    CHECK(is_distance_regular(c2)->to_string() == "{2,1,1,1;1,1,1,2}");

    auto c3 = lift(butson_gain(fourier_butson(3))).graph;
    CHECK(c3.order() == 18);
    CHECK(is_bipartite(c3));
    auto array = is_distance_regular(c3);
    REQUIRE(array.has_value());
    CHECK(array->to_string() == "{3,2,2,1;1,1,2,3}");
}

TEST_CASE("the order-4 Fourier matrix does not give a 2ev cover")
{
    // Its entrywise square, seen by the character j = 2, has dependent rows.
    auto f = butson_gain(fourier_butson(4));
    auto c = lift(f);
    CHECK_FALSE(classify_two_ev(f, c).is_two_ev);
    CHECK_FALSE(is_distance_regular(c.graph).has_value());
    CHECK(hermitian_spectrum(rep_matrix(f, {2}).entries).distinct() == 3);
}

TEST_CASE("GF(4) products over Z2 x Z2 give the 4-fold cover of K_{4,4}")
{
    // GF(4) = {0, 1, w, w + 1} as bit pairs; multiplication by w is (a, b) -> (a ^ b, a).
    auto mul = [](int x, int y) {
        int acc = 0;
        for (int bit = 0; bit < 2; ++bit) {
            if ((y >> bit) & 1)
                acc ^= x;
            x = ((x << 1) & 3) ^ ((x >> 1) & 1 ? 3 : 0);
        }
        return acc;
    };
    auto group = GroupSpec::abelian({2, 2});
    auto base = complete_bipartite(4, 4);
    std::vector<GroupElement> gains;
    for (auto [u, v] : base.edges()) {
        const int p = mul(u, v - 4);
        gains.push_back({{p >> 1, p & 1}});
    }
    GainGraph f(base, group, gains);
    auto c = lift(f);
    CHECK(classify_two_ev(f, c).is_two_ev);
    auto array = is_distance_regular(c.graph);
    REQUIRE(array.has_value());
    CHECK(array->to_string() == "{4,3,3,1;1,1,3,4}");
}

TEST_CASE("S3 cover of K5")
{
    auto f = s3_cover_k5();
    auto c = lift(f);
    CHECK(c.graph.order() == 15);
    CHECK(c.graph.valency() == 4);
    const auto p = char_poly(c.graph);
    CHECK(p == char_poly(line_graph(petersen())));
    CHECK(p.coefficients() == oracle::faddeev_leverrier(line_graph(petersen()).adjacency_matrix()));
    auto cert = classify_two_ev(f, c);
    CHECK(cert.is_two_ev);
    CHECK(cert.theta == doctest::Approx(2.0));
    CHECK(cert.tau == doctest::Approx(-2.0));
    CHECK(cert.mult_theta == 5);
    CHECK(cert.mult_tau == 5);
}

TEST_CASE("non-example on K_{3n}")
{
    for (int n = 2; n <= 3; ++n) {
        auto f = k3n_nonexample(n);
        auto s = hermitian_spectrum(signed_adjacency(f));
        REQUIRE(s.distinct() == 3);
        CHECK(std::abs(s.entries[0].value - (2 * n - 1)) < 1e-9);
        CHECK(s.entries[0].multiplicity == 2);
        CHECK(std::abs(s.entries[1].value + 1) < 1e-9);
        CHECK(s.entries[1].multiplicity == 3 * n - 3);
        CHECK(std::abs(s.entries[2].value + n + 1) < 1e-9);
        CHECK(s.entries[2].multiplicity == 1);

        auto c = lift(f);
        CHECK_FALSE(classify_two_ev(f, c).is_two_ev);
        CHECK_FALSE(is_distance_regular(c.graph).has_value());
    }
}
