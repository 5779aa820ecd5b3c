#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/matrix.hpp"
#include "gcover/spectral.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gcover {

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    int diameter() const noexcept { return static_cast<int>(b.size()); }
    int valency() const { return b.empty() ? 0 : b.front(); }
    std::string to_string() const;

    bool operator==(const IntersectionArray&) const = default;
};

/// Strongly regular graph parameters (n, k, a, c): a common neighbours of
/// adjacent pairs, c of non-adjacent pairs.
struct SrgParams {
    int n = 0;
    int k = 0;
    int a = 0;
    int c = 0;

    bool operator==(const SrgParams&) const = default;
};

struct DracknParams {
    int n = 0;
    int r = 0;
    int t = 0;

    bool operator==(const DracknParams&) const = default;
};

struct AntipodalResult {
    bool antipodal = false;
    std::vector<std::vector<Vertex>> classes;
};

enum class WalkCheck {
    /// Powers up to (number of distinct eigenvalues - 1).
    distinct_eigenvalues,
    /// Powers up to n - 1.
    exhaustive,
};

/// diag(A^k) constant for every k >= 1, decided exactly with big-integer powers.
bool is_walk_regular(const Graph& g, WalkCheck mode = WalkCheck::distinct_eigenvalues);

/// BFS levels from v. Throws ContractViolation when g is disconnected.
std::vector<std::vector<Vertex>> distance_partition(const Graph& g, Vertex v);

/// Cell-to-cell neighbour counts when every vertex of cell i has the same
/// number of neighbours in cell j; nothing otherwise. Throws ContractViolation
/// if `cells` is not a partition of the vertex set.
std::optional<IntMatrix> is_equitable(const Graph& g, const std::vector<std::vector<Vertex>>& cells);

/// Intersection array when the distance partition from every vertex is
/// equitable with a common quotient. Throws ContractViolation when disconnected.
std::optional<IntersectionArray> is_distance_regular(const Graph& g);

/// (n, k, a, c) when g is distance-regular of diameter 2.
std::optional<SrgParams> srg_parameters(const Graph& g);
SrgParams srg_from_array(int n, const IntersectionArray& array);

/// Whether "equal or at maximal distance" is an equivalence relation.
/// Complete graphs (diameter 1) are antipodal with singleton classes.
AntipodalResult is_antipodal(const Graph& g);

/// (n, r, t) when the connected cover of K_n is distance-regular of diameter 3
/// and antipodal with the fibers as classes. t = (n - 2 - lambda) / r is
/// cross-checked against the common-neighbour count of distance-2 pairs.
/// Throws ContractViolation if the base is not complete.
std::optional<DracknParams> drackn_parameters(const GainGraph& f, const CoverGraph& cover,
                                              const TwoEvCertificate& cert);

struct ColumnCountCertificate {
    mpq_class t;
    mpq_class s;
    /// t and s are both non-negative integers.
    bool integral = false;
    /// The counted column structure was checked (the gain is 2ev) and held.
    bool verified = false;
    /// Whether a B block exists (the base is not complete).
    bool has_b_block = false;
};

/// Column counts of the normalized character-1 matrix around `v0`:
/// t = (a - lambda) / r entries equal to each nontrivial root in every column
/// of the neighbourhood block, s = c / r entries equal to each root in every
/// column of the neighbourhood-to-distance-2 block.
///
/// Requires a cyclic gain group and gains that are the identity on every edge
/// at v0. lambda is recomputed from the spectral certificate; a mismatch
/// beyond 1e-7 raises ContractViolation. When the cover is 2ev and the counts
/// fail, ConsistencyError is raised.
ColumnCountCertificate lemma_column_counts(const GainGraph& f, Vertex v0, int a, int c, double lambda);

struct RegularityCertificate {
    bool walk_regular = false;
    bool connected = false;
    std::optional<SrgParams> srg;
    std::optional<IntersectionArray> drg;
    bool antipodal = false;
    std::vector<std::vector<Vertex>> antipodal_classes;
    std::optional<DracknParams> drackn;
};

/// Walk regularity, distance regularity, strong regularity and antipodality
/// of g. The distance-based checks are skipped for disconnected graphs.
RegularityCertificate certify_regularity(const Graph& g);

/// certify_regularity(cover.graph), plus drackn parameters when the base is complete.
RegularityCertificate certify_cover(const GainGraph& f, const CoverGraph& cover, const TwoEvCertificate& cert);

/// Predicted cover array {k, k-a-1, c(r-1)/r, 1; 1, c/r, k-a-1, k}; nothing if r does not divide c.
std::optional<IntersectionArray> predicted_srg_cover_array(const SrgParams& base, int r);

} // namespace gcover
