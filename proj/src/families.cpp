#include "gcover/families.hpp"

#include "gcover/errors.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

namespace gcover {

IntMatrix huang_matrix(int n)
{
    if (n < 1 || n > 14)
        throw ParameterError("huang_matrix: n out of range");
    IntMatrix a(2, 2);
    a(0, 1) = a(1, 0) = 1;
    for (int level = 2; level <= n; ++level) {
        const std::size_t half = a.rows();
        IntMatrix next(2 * half, 2 * half);
        for (std::size_t i = 0; i < half; ++i) {
            for (std::size_t j = 0; j < half; ++j) {
                next(i, j) = a(i, j);
                next(half + i, half + j) = -a(i, j);
            }
            next(i, half + i) = 1;
            next(half + i, i) = 1;
        }
        a = std::move(next);
    }
    return a;
}

GainGraph huang_signing(int n)
{
    if (n < 1 || n > 20)
        throw ParameterError("huang_signing: n out of range");
    Graph q = hypercube(n);
    auto group = GroupSpec::cyclic(2);
    std::vector<GroupElement> gains;
    gains.reserve(q.size());
    for (auto [u, v] : q.edges()) {
        // u and v differ in one bit b; each recursion level above b that puts
        // the pair in the lower-right block flips the sign.
        const int bit = std::countr_zero(static_cast<unsigned>(u ^ v));
        const int flips = std::popcount(static_cast<unsigned>(u) >> (bit + 1));
        gains.push_back({{flips % 2}});
    }
    return {std::move(q), std::move(group), std::move(gains)};
}

CoverGraph cohen_tits_cover(int n)
{
    if (n < 2)
        throw ParameterError("cohen_tits_cover: n must be at least 2");
    return lift(huang_signing(n));
}

ButsonMatrix fourier_butson(int q)
{
    if (q < 2)
        throw ParameterError("fourier_butson: q must be at least 2");
    ButsonMatrix h{q, q, Matrix<int>(static_cast<std::size_t>(q), static_cast<std::size_t>(q))};
    for (int j = 0; j < q; ++j)
        for (int k = 0; k < q; ++k)
            h.entries(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = (j * k) % q;
    return h;
}

void validate_butson(const ButsonMatrix& h)
{
    if (h.q < 1 || h.r < 2)
        throw ParameterError("Butson matrix: q must be positive and r at least 2");
    const auto q = static_cast<std::size_t>(h.q);
    if (h.entries.rows() != q || h.entries.cols() != q)
        throw ParameterError("Butson matrix: entries must be q x q");
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (h.entries(i, j) < 0 || h.entries(i, j) >= h.r)
                throw ParameterError("Butson matrix: entry is not a residue mod r");
    // H H^* = q I with H_{jk} = w^{h(j,k)}.
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            std::complex<double> inner = 0;
            for (std::size_t k = 0; k < q; ++k) {
                const int d = ((h.entries(a, k) - h.entries(b, k)) % h.r + h.r) % h.r;
                inner += std::polar(1.0, 2 * std::numbers::pi * d / h.r);
            }
            if (std::abs(inner) > 1e-9)
                throw ParameterError("Butson matrix: rows are not orthogonal");
        }
}

GainGraph butson_gain(const ButsonMatrix& h)
{
    validate_butson(h);
    Graph base = complete_bipartite(h.q, h.q);
    auto group = GroupSpec::cyclic(h.r);
    std::vector<GroupElement> gains;
    for (auto [u, v] : base.edges()) {
        // u in the left part, v = q + k in the right part.
        gains.push_back({{h.entries(static_cast<std::size_t>(u), static_cast<std::size_t>(v - h.q))}});
    }
    return {std::move(base), std::move(group), std::move(gains)};
}

GainGraph s3_cover_k5()
{
    auto group = GroupSpec::permutation(3);
    const GroupElement id{{0, 1, 2}};
    const GroupElement t1{{1, 0, 2}}; // (0 1)
    const GroupElement t2{{0, 2, 1}}; // (1 2)
    const GroupElement t3{{2, 1, 0}}; // (0 2)
    const GroupElement table[5][5] = {
        {id, id, id, id, id},
        {id, id, t1, t2, t3},
        {id, t1, id, t3, t2},
        {id, t2, t3, id, t1},
        {id, t3, t2, t1, id},
    };
    Graph base = complete_graph(5);
    std::vector<GroupElement> gains;
    for (auto [u, v] : base.edges())
        gains.push_back(table[u][v]);
    return {std::move(base), std::move(group), std::move(gains)};
}

GainGraph k3n_nonexample(int n)
{
    if (n < 1)
        throw ParameterError("k3n_nonexample: n must be positive");
    Graph base = complete_graph(3 * n);
    auto group = GroupSpec::cyclic(2);
    std::vector<GroupElement> gains;
    for (auto [u, v] : base.edges()) {
        const bool across = u < n && v >= n && v < 2 * n;
        gains.push_back({{across ? 1 : 0}});
    }
    return {std::move(base), std::move(group), std::move(gains)};
}

} // namespace gcover
