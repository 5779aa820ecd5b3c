#include "gcover/regularity.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gcover {

std::string IntersectionArray::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    os << ';';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------

bool is_walk_regular(const Graph& g, WalkCheck mode)
{
    const int n = g.order();
    if (n <= 1)
        return true;
    int top = n - 1;
    if (mode == WalkCheck::distinct_eigenvalues)
        top = distinct_root_count(char_poly(g)) - 1;

    // power = A^k, advanced by right multiplication with the sparse adjacency.
    const auto un = static_cast<std::size_t>(n);
    std::vector<mpz_class> power(un * un, 0);
    for (auto [u, v] : g.edges()) {
        power[static_cast<std::size_t>(u) * un + static_cast<std::size_t>(v)] = 1;
        power[static_cast<std::size_t>(v) * un + static_cast<std::size_t>(u)] = 1;
    }
    std::vector<mpz_class> next(un * un);
    for (int k = 1; k <= top; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = 0; j < un; ++j) {
                    mpz_class& acc = next[i * un + j];
                    acc = 0;
                    for (Vertex w : g.neighbors(static_cast<Vertex>(j)))
                        acc += power[i * un + static_cast<std::size_t>(w)];
                }
            std::swap(power, next);
        }
        for (std::size_t i = 1; i < un; ++i)
            if (power[i * un + i] != power[0])
                return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> distance_partition(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw ContractViolation("distance_partition: vertex out of range");
    auto dist = bfs_distances(g, v);
    std::vector<std::vector<Vertex>> cells;
    for (Vertex u = 0; u < g.order(); ++u) {
        int d = dist[static_cast<std::size_t>(u)];
        if (d == DistanceTable::unreachable)
            throw ContractViolation("distance_partition requires a connected graph");
        if (static_cast<int>(cells.size()) <= d)
            cells.resize(static_cast<std::size_t>(d) + 1);
        cells[static_cast<std::size_t>(d)].push_back(u);
    }
    return cells;
}

std::optional<IntMatrix> is_equitable(const Graph& g, const std::vector<std::vector<Vertex>>& cells)
{
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty())
            throw ContractViolation("is_equitable: empty cell");
        for (Vertex v : cells[i]) {
            if (v < 0 || v >= n)
                throw ContractViolation("is_equitable: vertex out of range");
            if (cell_of[static_cast<std::size_t>(v)] >= 0)
                throw ContractViolation("is_equitable: vertex in two cells");
            cell_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    if (std::any_of(cell_of.begin(), cell_of.end(), [](int c) { return c < 0; }))
        throw ContractViolation("is_equitable: cells do not cover the vertex set");

    const std::size_t m = cells.size();
    IntMatrix quotient(m, m);
    std::vector<std::int64_t> counts(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t idx = 0; idx < cells[i].size(); ++idx) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex w : g.neighbors(cells[i][idx]))
                ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
            for (std::size_t j = 0; j < m; ++j) {
                if (idx == 0)
                    quotient(i, j) = counts[j];
                else if (quotient(i, j) != counts[j])
                    return std::nullopt;
            }
        }
    return quotient;
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g)
{
    if (!is_connected(g))
        throw ContractViolation("is_distance_regular requires a connected graph");
    const int n = g.order();
    if (n == 0 || !g.valency())
        return std::nullopt;

    std::optional<IntersectionArray> reference;
    for (Vertex v = 0; v < n; ++v) {
        auto cells = distance_partition(g, v);
        auto quotient = is_equitable(g, cells);
        if (!quotient)
            return std::nullopt;
        const std::size_t d = cells.size() - 1;
        IntersectionArray array;
        for (std::size_t i = 0; i < d; ++i)
            array.b.push_back(static_cast<int>((*quotient)(i, i + 1)));
        for (std::size_t i = 1; i <= d; ++i)
            array.c.push_back(static_cast<int>((*quotient)(i, i - 1)));
        if (!reference)
            reference = std::move(array);
        else if (*reference != array)
            return std::nullopt;
    }
    return reference;
}

SrgParams srg_from_array(int n, const IntersectionArray& array)
{
    if (array.diameter() != 2)
        throw ContractViolation("srg_from_array: diameter must be 2");
    const int k = array.b[0];
    return {n, k, k - array.b[1] - array.c[0], array.c[1]};
}

std::optional<SrgParams> srg_parameters(const Graph& g)
{
    if (!is_connected(g))
        return std::nullopt;
    auto array = is_distance_regular(g);
    if (!array || array->diameter() != 2)
        return std::nullopt;
    return srg_from_array(g.order(), *array);
}

AntipodalResult is_antipodal(const Graph& g)
{
    DistanceTable dist(g);
    if (!dist.connected())
        throw ContractViolation("is_antipodal requires a connected graph");
    const int n = g.order();
    const int d = dist.max_distance();
    AntipodalResult result;
    if (d <= 1) {
        result.antipodal = true;
        for (Vertex v = 0; v < n; ++v)
            result.classes.push_back({v});
        return result;
    }
    std::vector<std::vector<Vertex>> class_of(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = 0; w < n; ++w)
            if (u == w || dist(u, w) == d)
                class_of[static_cast<std::size_t>(u)].push_back(w);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : class_of[static_cast<std::size_t>(u)])
            if (class_of[static_cast<std::size_t>(w)] != class_of[static_cast<std::size_t>(u)])
                return result;
    result.antipodal = true;
    for (Vertex u = 0; u < n; ++u)
        if (class_of[static_cast<std::size_t>(u)].front() == u)
            result.classes.push_back(class_of[static_cast<std::size_t>(u)]);
    return result;
}

namespace {

bool is_complete(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - 1) / 2;
}

} // namespace

std::optional<DracknParams> drackn_parameters(const GainGraph& f, const CoverGraph& cover,
                                              const TwoEvCertificate& cert)
{
    if (!is_complete(f.base()))
        throw ContractViolation("drackn_parameters requires a complete base graph");
    if (!cert.is_two_ev || !cert.cover_connected)
        return std::nullopt;
    const Graph& x = cover.graph;
    auto array = is_distance_regular(x);
    if (!array || array->diameter() != 3)
        return std::nullopt;
    auto antipodal = is_antipodal(x);
    if (!antipodal.antipodal)
        return std::nullopt;
    std::vector<std::vector<Vertex>> fibers;
    for (Vertex v = 0; v < cover.base_order; ++v)
        fibers.push_back(cover.fiber(v));
    auto classes = antipodal.classes;
    std::sort(classes.begin(), classes.end());
    if (classes != fibers)
        return std::nullopt;

    const int n = f.base().order();
    const int r = cover.sheets;
    const double t_formula = (n - 2 - cert.lambda) / r;

    // Common neighbours of every pair at distance 2.
    DistanceTable dist(x);
    std::optional<int> counted;
    for (Vertex u = 0; u < x.order(); ++u)
        for (Vertex w = u + 1; w < x.order(); ++w) {
            if (dist(u, w) != 2)
                continue;
            auto nu = x.neighbors(u);
            auto nw = x.neighbors(w);
            std::vector<Vertex> common;
            std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(), std::back_inserter(common));
            const int count = static_cast<int>(common.size());
            if (!counted)
                counted = count;
            else if (*counted != count)
                throw ConsistencyError("distance-regular cover has a non-constant c_2");
        }
    if (!counted || std::abs(t_formula - *counted) > 1e-7)
        throw ConsistencyError("drackn t = (a - lambda)/r disagrees with the counted common neighbours");
    return DracknParams{n, r, *counted};
}

ColumnCountCertificate lemma_column_counts(const GainGraph& f, Vertex v0, int a, int c, double lambda)
{
    const auto& group = f.group();
    if (!group.is_cyclic())
        throw ContractViolation("lemma_column_counts requires a cyclic gain group");
    const Graph& base = f.base();
    if (v0 < 0 || v0 >= base.order())
        throw ContractViolation("lemma_column_counts: vertex out of range");
    for (Vertex w : base.neighbors(v0))
        if (!group.is_identity(f.gain(v0, w)))
            throw ContractViolation("lemma_column_counts: gains at v0 must be the identity");

    const int r = group.orders()[0];
    ColumnCountCertificate cert;
    cert.t = mpq_class(0);
    cert.s = mpq_class(c, r);
    cert.s.canonicalize();

    const TwoEvCertificate spectral = classify_two_ev(f);
    if (spectral.is_two_ev && std::abs(spectral.lambda - lambda) > 1e-7)
        throw ContractViolation("lemma_column_counts: lambda disagrees with the spectral certificate");
    // lambda of a 2ev gain is an integer; a fractional caller value can only
    // describe a non-2ev gain, for which t is reported as given.
    const double rounded = std::round(lambda);
    if (std::abs(rounded - lambda) <= 1e-7) {
        cert.t = mpq_class(a - static_cast<long>(rounded), r);
        cert.t.canonicalize();
    } else {
        cert.t = mpq_class(a - lambda) / r;
    }
    cert.integral = cert.t >= 0 && cert.s >= 0 && cert.t.get_den() == 1 && cert.s.get_den() == 1;

    auto dist = bfs_distances(base, v0);
    std::vector<Vertex> level1;
    std::vector<Vertex> level2;
    for (Vertex u = 0; u < base.order(); ++u) {
        if (dist[static_cast<std::size_t>(u)] == 1)
            level1.push_back(u);
        else if (dist[static_cast<std::size_t>(u)] == 2)
            level2.push_back(u);
    }
    cert.has_b_block = !level2.empty();

    if (!spectral.is_two_ev)
        return cert;
    if (!cert.integral)
        throw ConsistencyError("2ev gain with non-integral column counts");

    const long t = cert.t.get_num().get_si();
    const long s = cert.s.get_num().get_si();
    // Columns of N_1: rows are the other neighbours of v0.
    for (Vertex m : level1) {
        std::vector<long> counts(static_cast<std::size_t>(r), 0);
        for (Vertex u : level1)
            if (u != m && base.adjacent(u, m))
                ++counts[static_cast<std::size_t>(f.gain(u, m).values[0])];
        for (int i = 1; i < r; ++i)
            if (counts[static_cast<std::size_t>(i)] != t)
                throw ConsistencyError("N1 column count differs from t");
    }
    // Columns of B: rows are neighbours of v0, columns vertices at distance 2.
    for (Vertex m : level2) {
        std::vector<long> counts(static_cast<std::size_t>(r), 0);
        for (Vertex u : level1)
            if (base.adjacent(u, m))
                ++counts[static_cast<std::size_t>(f.gain(u, m).values[0])];
        for (int j = 0; j < r; ++j)
            if (counts[static_cast<std::size_t>(j)] != s)
                throw ConsistencyError("B column count differs from s");
    }
    cert.verified = true;
    return cert;
}

RegularityCertificate certify_regularity(const Graph& g)
{
    RegularityCertificate cert;
    cert.walk_regular = is_walk_regular(g);
    cert.connected = is_connected(g);
    if (!cert.connected)
        return cert;
    cert.drg = is_distance_regular(g);
    if (cert.drg && cert.drg->diameter() == 2)
        cert.srg = srg_from_array(g.order(), *cert.drg);
    auto antipodal = is_antipodal(g);
    cert.antipodal = antipodal.antipodal;
    cert.antipodal_classes = std::move(antipodal.classes);
    return cert;
}

RegularityCertificate certify_cover(const GainGraph& f, const CoverGraph& cover, const TwoEvCertificate& cert)
{
    RegularityCertificate out = certify_regularity(cover.graph);
    if (is_complete(f.base()) && f.group().is_abelian())
        out.drackn = drackn_parameters(f, cover, cert);
    return out;
}

std::optional<IntersectionArray> predicted_srg_cover_array(const SrgParams& base, int r)
{
    if (r < 1 || base.c % r != 0)
        return std::nullopt;
    const int k = base.k;
    const int a = base.a;
    const int c = base.c;
    return IntersectionArray{{k, k - a - 1, c * (r - 1) / r, 1}, {1, c / r, k - a - 1, k}};
}

} // namespace gcover
