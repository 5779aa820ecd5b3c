#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/regularity.hpp"
#include "gcover/spectral.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gcover {

/// Search over normalized gains: tree edges carry the identity and the
/// co-tree edges are the free coordinates.
struct SearchSpec {
    enum class Mode { exhaustive, random };

    Graph base;
    GroupSpec group;
    Mode mode = Mode::exhaustive;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    std::vector<Edge> tree;

    /// Spec with a BFS spanning tree rooted at vertex 0.
    static SearchSpec make(Graph base, GroupSpec group, Mode mode, std::uint64_t budget, std::uint64_t seed = 0);
};

/// Stream of gain assignments. Exhaustive mode walks every co-tree assignment
/// in lexicographic order (first co-tree edge most significant, group elements
/// in lexicographic order); random mode draws `budget` independent uniform
/// assignments from a mt19937_64 seeded with spec.seed.
class GainStream {
public:
    /// Throws BudgetExceeded when an exhaustive search would exceed the budget,
    /// ContractViolation for non-abelian groups or an invalid tree.
    explicit GainStream(SearchSpec spec);

    std::optional<GainGraph> next();
    /// Number of assignments the stream will produce.
    std::uint64_t total() const noexcept { return total_; }

private:
    GainGraph build() const;

    SearchSpec spec_;
    std::vector<std::size_t> cotree_;
    std::vector<std::int64_t> digits_;
    std::int64_t group_order_ = 1;
    std::uint64_t total_ = 0;
    std::uint64_t produced_ = 0;
    std::mt19937_64 rng_;
};

/// Number of co-tree edges, m - n + 1 for a connected base.
std::size_t cotree_size(const Graph& base);

std::vector<GainGraph> enumerate_gains(const SearchSpec& spec);

enum class CheckStatus { pass, fail, not_applicable };
const char* to_string(CheckStatus s);

struct VerificationRecord {
    GainGraph gain;
    TwoEvCertificate two_ev;
    RegularityCertificate regularity;
    std::map<std::string, CheckStatus> theorem_checks;
};

struct SearchOptions {
    /// Skip the search when column-count divisibility (r | c on a
    /// non-complete strongly regular base) already rules out 2ev gains.
    bool use_prefilter = true;
};

struct SearchResult {
    std::uint64_t sampled = 0;
    bool prefilter_empty = false;
    std::vector<VerificationRecord> hits;
};

/// True when a cyclic group of order r cannot give a 2ev cover of `base`
/// because r does not divide the base's c parameter.
bool prefilter_rules_out(const Graph& base, const GroupSpec& group);

SearchResult search_two_ev(const SearchSpec& spec, SearchOptions options = {});

struct VerifySummary {
    std::uint64_t sampled = 0;
    std::uint64_t two_ev = 0;
    std::uint64_t verified = 0;
    std::uint64_t not_applicable = 0;
    std::vector<std::string> failures;
    /// Distinct drackn parameters met.
    std::vector<DracknParams> drackns;
    /// Distinct intersection arrays of verified covers.
    std::vector<IntersectionArray> arrays;
};

/// Where falsification reproducers are written; empty disables writing.
struct VerifyOptions {
    std::filesystem::path reproducer_dir;
};

/// Every 2ev gain drawn for each (base, group) pair must lift to a
/// walk-regular graph. Bases must be walk-regular.
VerifySummary verify_walk_regular_covers(const std::vector<Graph>& bases, const std::vector<GroupSpec>& groups,
                                         std::uint64_t samples, std::uint64_t seed, const VerifyOptions& options = {});

/// Exhaustive cyclic covers of K_n: every connected 2ev hit must be a drackn
/// with fibers as antipodal classes.
VerifySummary verify_drackn_covers(int n, int r, std::uint64_t budget, const VerifyOptions& options = {});

/// For a cyclic gain on a strongly regular base: when the cover is connected
/// and 2ev, distance-regular exactly when a = lambda, with the predicted array.
VerificationRecord verify_srg_cover(const GainGraph& f, const VerifyOptions& options = {});

/// Exhaustive cyclic covers of K_{m,n}: every connected 2ev hit needs m = n,
/// r | n, and a bipartite distance-regular lift of diameter 4.
VerifySummary verify_bipartite_covers(int m, int n, int r, std::uint64_t budget, const VerifyOptions& options = {});

} // namespace gcover
