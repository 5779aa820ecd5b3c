#include "gcover/errors.hpp"
#include "gcover/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gcover;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending)
{
    std::vector<mpz_class> c;
    for (long x : ascending)
        c.emplace_back(x);
    return IntPolynomial(c);
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    auto p = poly({-2, 0, 1});  // x^2 - 2
    auto q = poly({1, 1});      // x + 1
    CHECK((p * q) == poly({-2, -2, 1, 1}));
    CHECK((p + q) == poly({-1, 1, 1}));
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 2);
    CHECK(p.is_monic());
    CHECK(p.evaluate(mpz_class(3)) == 7);
    CHECK(p.derivative() == poly({0, 2}));
    CHECK(q.reflected() == poly({1, -1}));
    CHECK(q.pow(3) == poly({1, 3, 3, 1}));
    CHECK(IntPolynomial::linear(mpz_class(4)) == poly({-4, 1}));
    CHECK(poly({0, 0, 0}).is_zero());
}

TEST_CASE("exact division")
{
    auto a = IntPolynomial::linear(mpz_class(2)) * IntPolynomial::linear(mpz_class(-1)).pow(2);
    auto [quo, rem] = divide(a, IntPolynomial::linear(mpz_class(-1)));
    CHECK(rem.is_zero());
    CHECK(quo == IntPolynomial::linear(mpz_class(2)) * IntPolynomial::linear(mpz_class(-1)));

    auto [q2, r2] = divide(poly({1, 0, 1}), poly({-1, 1}));
    CHECK(q2 == poly({1, 1}));
    CHECK(r2 == poly({2}));
}

TEST_CASE("gcd, square-free part and roots")
{
    auto a = IntPolynomial::linear(mpz_class(10)) * IntPolynomial::linear(mpz_class(1)).pow(14) *
             IntPolynomial::linear(mpz_class(-4)).pow(6);
    auto sf = square_free_part(a);
    CHECK(sf.degree() == 3);
    CHECK(distinct_root_count(a) == 3);
    CHECK(root_multiplicity(a, mpz_class(1)) == 14);
    CHECK(root_multiplicity(a, mpz_class(2)) == 0);
    auto roots = integer_roots(a);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == std::pair<mpz_class, int>{10, 1});
    CHECK(roots[1] == std::pair<mpz_class, int>{1, 14});
    CHECK(roots[2] == std::pair<mpz_class, int>{-4, 6});

    auto x2m3 = poly({-3, 0, 1});
    CHECK(square_free_part(x2m3.pow(4)) == x2m3);
    CHECK(integer_roots(x2m3).empty());
    CHECK(gcd(x2m3.pow(2) * poly({1, 1}), x2m3 * poly({-1, 1})) == x2m3);
}

TEST_CASE("real roots oracle sanity")
{
    auto p = IntPolynomial::linear(mpz_class(3)) * poly({-2, 0, 1}).pow(2);
    auto roots = oracle::real_roots(p.coefficients());
    REQUIRE(roots.size() == 5);
    CHECK(roots[0] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
    CHECK(roots[1] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
    CHECK(roots[4] == doctest::Approx(3.0).epsilon(1e-10));
}
