#include "gcover/search.hpp"

#include "gcover/errors.hpp"
#include "gcover/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace gcover {

SearchSpec SearchSpec::make(Graph base, GroupSpec group, Mode mode, std::uint64_t budget, std::uint64_t seed)
{
    auto tree = bfs_spanning_tree(base, 0);
    return {std::move(base), std::move(group), mode, budget, seed, std::move(tree)};
}

std::size_t cotree_size(const Graph& base)
{
    if (base.order() == 0)
        return 0;
    return base.size() - static_cast<std::size_t>(base.order() - 1);
}

GainStream::GainStream(SearchSpec spec)
    : spec_(std::move(spec)), rng_(spec_.seed)
{
    if (!spec_.group.is_abelian())
        throw ContractViolation("gain search requires an abelian group");
    if (!is_connected(spec_.base))
        throw ContractViolation("gain search requires a connected base");
    if (static_cast<int>(spec_.tree.size()) != std::max(0, spec_.base.order() - 1))
        throw ContractViolation("search tree is not a spanning tree");
    std::set<Edge> tree;
    for (auto [u, v] : spec_.tree) {
        if (!spec_.base.adjacent(u, v))
            throw ContractViolation("search tree edge is not a base edge");
        tree.emplace(std::min(u, v), std::max(u, v));
    }
    if (!is_connected(Graph(spec_.base.order(), spec_.tree)))
        throw ContractViolation("search tree does not span the base");
    const auto& edges = spec_.base.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!tree.count(edges[e]))
            cotree_.push_back(e);
    group_order_ = spec_.group.order();
    digits_.assign(cotree_.size(), 0);

    if (spec_.mode == SearchSpec::Mode::exhaustive) {
        // |G|^(m - n + 1), refused once it passes the budget.
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < cotree_.size(); ++i) {
            if (total > spec_.budget / static_cast<std::uint64_t>(group_order_))
                throw BudgetExceeded("exhaustive search needs " + std::to_string(group_order_) + "^" +
                                     std::to_string(cotree_.size()) + " assignments, over the budget of " +
                                     std::to_string(spec_.budget));
            total *= static_cast<std::uint64_t>(group_order_);
        }
        if (total > spec_.budget)
            throw BudgetExceeded("exhaustive search exceeds the budget");
        total_ = total;
    } else {
        total_ = spec_.budget;
    }
}

GainGraph GainStream::build() const
{
    std::vector<GroupElement> gains(spec_.base.size(), spec_.group.identity());
    for (std::size_t i = 0; i < cotree_.size(); ++i)
        gains[cotree_[i]] = spec_.group.element_at(digits_[i]);
    return {spec_.base, spec_.group, std::move(gains)};
}

std::optional<GainGraph> GainStream::next()
{
    if (produced_ >= total_)
        return std::nullopt;
    if (spec_.mode == SearchSpec::Mode::random) {
        for (auto& d : digits_)
            d = static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(group_order_));
    } else if (produced_ > 0) {
        // Odometer increment, last co-tree edge fastest.
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < group_order_)
                break;
            digits_[i] = 0;
        }
    }
    ++produced_;
    return build();
}

std::vector<GainGraph> enumerate_gains(const SearchSpec& spec)
{
    GainStream stream(spec);
    std::vector<GainGraph> out;
    while (auto f = stream.next())
        out.push_back(std::move(*f));
    return out;
}

const char* to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::not_applicable:
        return "not-applicable";
    }
    return "?";
}

bool prefilter_rules_out(const Graph& base, const GroupSpec& group)
{
    if (!group.is_cyclic() || !is_connected(base))
        return false;
    const auto n = static_cast<std::size_t>(base.order());
    if (base.size() == n * (n - 1) / 2)
        return false;
    auto srg = srg_parameters(base);
    if (!srg)
        return false;
    return srg->c % group.orders()[0] != 0;
}

SearchResult search_two_ev(const SearchSpec& spec, SearchOptions options)
{
    SearchResult result;
    GainStream stream(spec);
    if (options.use_prefilter && prefilter_rules_out(spec.base, spec.group)) {
        result.prefilter_empty = true;
        return result;
    }
    while (auto f = stream.next()) {
        ++result.sampled;
        CoverGraph cover = lift(*f);
        TwoEvCertificate cert = classify_two_ev(*f, cover);
        if (!cert.is_two_ev)
            continue;
        VerificationRecord rec{*f, cert, certify_cover(*f, cover, cert), {}};
        result.hits.push_back(std::move(rec));
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void falsified(const std::string& check, const GainGraph& f, const VerifyOptions& options)
{
    std::string reproducer = format_gain_file(f);
    std::string where;
    if (!options.reproducer_dir.empty()) {
        std::filesystem::create_directories(options.reproducer_dir);
        auto path = options.reproducer_dir / ("falsified-" + check + ".gain");
        write_text(path, reproducer);
        where = " (reproducer: " + path.string() + ")";
    }
    throw Falsification(check + " failed" + where, std::move(reproducer));
}

template <typename T>
void add_unique(std::vector<T>& list, const T& value)
{
    if (std::find(list.begin(), list.end(), value) == list.end())
        list.push_back(value);
}

std::set<std::vector<Vertex>> fiber_set(const CoverGraph& cover)
{
    std::set<std::vector<Vertex>> out;
    for (Vertex v = 0; v < cover.base_order; ++v)
        out.insert(cover.fiber(v));
    return out;
}

} // namespace

VerifySummary verify_walk_regular_covers(const std::vector<Graph>& bases, const std::vector<GroupSpec>& groups,
                                         std::uint64_t samples, std::uint64_t seed, const VerifyOptions& options)
{
    for (const auto& base : bases)
        if (!is_walk_regular(base))
            throw ContractViolation("walk-regular cover check needs walk-regular bases");

    VerifySummary summary;
    std::uint64_t pair = 0;
    for (const auto& base : bases)
        for (const auto& group : groups) {
            auto spec = SearchSpec::make(base, group, SearchSpec::Mode::random, samples,
                                         seed + 0x9E3779B97F4A7C15ULL * ++pair);
            GainStream stream(spec);
            while (auto f = stream.next()) {
                ++summary.sampled;
                CoverGraph cover = lift(*f);
                auto cert = classify_two_ev(*f, cover);
                if (!cert.is_two_ev)
                    continue;
                ++summary.two_ev;
                if (!is_walk_regular(cover.graph))
                    falsified("walk-regular", *f, options);
                ++summary.verified;
            }
        }
    return summary;
}

VerifySummary verify_drackn_covers(int n, int r, std::uint64_t budget, const VerifyOptions& options)
{
    auto spec = SearchSpec::make(complete_graph(n), GroupSpec::cyclic(r), SearchSpec::Mode::exhaustive, budget);
    VerifySummary summary;
    GainStream stream(spec);
    while (auto f = stream.next()) {
        ++summary.sampled;
        CoverGraph cover = lift(*f);
        auto cert = classify_two_ev(*f, cover);
        if (!cert.is_two_ev)
            continue;
        ++summary.two_ev;
        if (!cert.cover_connected) {
            ++summary.not_applicable;
            continue;
        }
        auto array = is_distance_regular(cover.graph);
        if (!array || array->diameter() != 3)
            falsified("drackn-distance-regular", *f, options);
        auto antipodal = is_antipodal(cover.graph);
        std::set<std::vector<Vertex>> classes(antipodal.classes.begin(), antipodal.classes.end());
        if (!antipodal.antipodal || classes != fiber_set(cover))
            falsified("drackn-antipodal", *f, options);
        std::optional<DracknParams> params;
        try {
            params = drackn_parameters(*f, cover, cert);
        } catch (const ConsistencyError&) {
            falsified("drackn-parameters", *f, options);
        }
        if (!params)
            falsified("drackn-parameters", *f, options);
        ++summary.verified;
        add_unique(summary.drackns, *params);
        add_unique(summary.arrays, *array);
    }
    return summary;
}

VerificationRecord verify_srg_cover(const GainGraph& f, const VerifyOptions& options)
{
    if (!f.group().is_cyclic())
        throw ContractViolation("strongly regular cover check needs a cyclic gain group");
    auto srg = srg_parameters(f.base());
    if (!srg)
        throw ContractViolation("strongly regular cover check needs a strongly regular base");

    CoverGraph cover = lift(f);
    VerificationRecord rec{f, classify_two_ev(f, cover), certify_regularity(cover.graph), {}};
    const char* key = "drg_iff_a_equals_lambda";
    if (!rec.two_ev.is_two_ev || !rec.two_ev.cover_connected) {
        rec.theorem_checks[key] = CheckStatus::not_applicable;
        return rec;
    }
    const bool a_is_lambda = srg->a == rec.two_ev.lambda_exact;
    const bool drg = rec.regularity.drg.has_value();
    if (drg != a_is_lambda) {
        rec.theorem_checks[key] = CheckStatus::fail;
        falsified(key, f, options);
    }
    rec.theorem_checks[key] = CheckStatus::pass;
    if (drg) {
        auto predicted = predicted_srg_cover_array(*srg, f.group().orders()[0]);
        if (!predicted || *predicted != *rec.regularity.drg) {
            rec.theorem_checks["intersection_array"] = CheckStatus::fail;
            falsified("intersection_array", f, options);
        }
        rec.theorem_checks["intersection_array"] = CheckStatus::pass;
    } else {
        rec.theorem_checks["intersection_array"] = CheckStatus::not_applicable;
    }
    return rec;
}

VerifySummary verify_bipartite_covers(int m, int n, int r, std::uint64_t budget, const VerifyOptions& options)
{
    auto spec = SearchSpec::make(complete_bipartite(m, n), GroupSpec::cyclic(r), SearchSpec::Mode::exhaustive, budget);
    VerifySummary summary;
    GainStream stream(spec);
    while (auto f = stream.next()) {
        ++summary.sampled;
        CoverGraph cover = lift(*f);
        auto cert = classify_two_ev(*f, cover);
        if (!cert.is_two_ev)
            continue;
        ++summary.two_ev;
        if (!cert.cover_connected) {
            ++summary.not_applicable;
            continue;
        }
        if (m != n || n % r != 0)
            falsified("bipartite-balanced-sides", *f, options);
        // Bipartite iff the spectrum is symmetric about 0: p(-x) = +-p(x).
        const IntPolynomial& p = cert.cover_poly;
        const IntPolynomial reflected = p.reflected();
        if (!(reflected == p || reflected == -p))
            falsified("bipartite-spectrum", *f, options);
        auto array = is_distance_regular(cover.graph);
        if (!array || array->diameter() != 4)
            falsified("bipartite-distance-regular", *f, options);
        ++summary.verified;
        add_unique(summary.arrays, *array);
    }
    return summary;
}

} // namespace gcover
