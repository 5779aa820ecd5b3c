#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/matrix.hpp"
#include "gcover/polynomial.hpp"

#include <optional>
#include <vector>

namespace gcover {

inline constexpr double default_cluster_tolerance = 1e-7;

/// Exact characteristic polynomial det(xI - A) of an integer matrix.
IntPolynomial char_poly(const IntMatrix& a);
/// Characteristic polynomial of the 0/1 adjacency matrix.
IntPolynomial char_poly(const Graph& g);

struct SpectrumEntry {
    double value;
    int multiplicity;
};

/// Clustered eigenvalues, sorted by descending value.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    int dimension() const;
    std::size_t distinct() const noexcept { return entries.size(); }
    /// Eigenvalues repeated by multiplicity, descending.
    std::vector<double> expanded() const;
};

/// Raw eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// sorted descending. Throws ContractViolation for non-Hermitian input and
/// NumericError when the sweeps do not converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigenvalues merged when they differ by at most tol * max(1, ||m||_F).
Spectrum hermitian_spectrum(const ComplexMatrix& m, double tol = default_cluster_tolerance);
Spectrum hermitian_spectrum(const RealMatrix& m, double tol = default_cluster_tolerance);
Spectrum hermitian_spectrum(const IntMatrix& m, double tol = default_cluster_tolerance);

/// Groups sorted eigenvalues into clusters; `scale` multiplies the tolerance.
Spectrum cluster_eigenvalues(const std::vector<double>& descending, double tol, double scale);

double frobenius_norm(const ComplexMatrix& m);
ComplexMatrix to_complex(const IntMatrix& m);

/// Group-valued adjacency matrix for one character of an abelian gain group:
/// entry (u, v) = chi_j(f(u, v)) = prod_p exp(2 pi i j_p g_p / r_p).
struct RepMatrix {
    ComplexMatrix entries;
    std::vector<int> character;
};

/// Throws UnsupportedError for permutation gain groups.
RepMatrix rep_matrix(const GainGraph& f, const std::vector<int>& character);

/// Every character index tuple of an abelian group in lexicographic order
/// (the trivial character first).
std::vector<std::vector<int>> characters(const GroupSpec& group);

/// Signed (±1) integer matrix of a Z_2 gain graph at the nontrivial character.
IntMatrix signed_adjacency(const GainGraph& f);

struct TwoEvCertificate {
    bool is_two_ev = false;
    /// Number of distinct values in Spec(cover) \ Spec(base).
    int distinct_new = 0;
    double theta = 0;
    double tau = 0;
    int mult_theta = 0;
    int mult_tau = 0;
    /// theta + tau and -theta * tau; integers because the new eigenvalues are
    /// the roots of a monic integer quadratic.
    double lambda = 0;
    double mu = 0;
    long lambda_exact = 0;
    long mu_exact = 0;
    /// theta and tau are integers (discriminant is a perfect square).
    bool rational = false;
    bool cover_connected = false;

    IntPolynomial base_poly;
    IntPolynomial cover_poly;
    /// cover_poly / base_poly.
    IntPolynomial quotient;
};

/// Spectral difference of lift(f) and its base, computed by exact polynomial
/// division. Throws ContractViolation for a disconnected base and
/// ConsistencyError if the base polynomial does not divide the cover's.
TwoEvCertificate classify_two_ev(const GainGraph& f);
/// Same, with the lift precomputed.
TwoEvCertificate classify_two_ev(const GainGraph& f, const CoverGraph& cover);

struct MinpolyCertificate {
    enum class Status { ok, not_two_ev, residual, valency_mismatch, nonzero_diagonal };

    Status status = Status::not_two_ev;
    double theta = 0;
    double tau = 0;
    double lambda = 0;
    double mu = 0;
    std::size_t distinct = 0;

    bool ok() const noexcept { return status == Status::ok; }
};

/// Checks S^2 = lambda S + mu I for a matrix with exactly two distinct
/// eigenvalues; with `valency` set, also checks mu = valency and a zero diagonal.
MinpolyCertificate minpoly_certificate(const RepMatrix& s, std::optional<int> valency = std::nullopt,
                                       double tol = default_cluster_tolerance);

} // namespace gcover
