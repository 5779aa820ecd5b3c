#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/regularity.hpp"
#include "gcover/search.hpp"
#include "gcover/spectral.hpp"

#include <json.hpp>

#include <string>

namespace gcover {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";

struct ReportOptions {
    double tol = default_cluster_tolerance;
    std::uint64_t seed = 0;
    /// Adds wall-clock timings, which makes the report non-reproducible.
    bool timing = false;
    /// Free-form input descriptor (file path or family name).
    std::string source;
};

/// Decimal coefficient strings, constant term first.
Json to_json(const IntPolynomial& p);
/// [[value, multiplicity], ...]: a value is a JSON integer when it matches an
/// exact integer root of `p` with the same multiplicity, otherwise a decimal
/// string with 17 significant digits.
Json spectrum_json(const Spectrum& s, const IntPolynomial* p = nullptr);
Json to_json(const TwoEvCertificate& c);
Json to_json(const RegularityCertificate& c);
Json to_json(const IntersectionArray& a);
Json to_json(const MinpolyCertificate& c);
Json to_json(const VerifySummary& s);
Json to_json(const VerificationRecord& r);
std::string format_real(double x);

/// Exact and numeric spectrum of a graph's adjacency matrix.
Json graph_spectrum(const Graph& g, double tol);

struct CertifyChecks {
    bool walk = false;
    bool drg = false;
    bool srg = false;
    bool antipodal = false;
    bool drackn = false;

    bool any() const noexcept { return walk || drg || srg || antipodal || drackn; }
    static CertifyChecks all() { return {true, true, true, true, true}; }
};

/// Full analysis of a gain graph: base and lift spectra, per-character
/// spectra (abelian groups), the 2ev certificate, minimal-polynomial checks
/// and regularity of the lift.
Json analyze_gain(const GainGraph& f, const ReportOptions& options);

/// Selected regularity checks of a plain graph.
Json certify_graph(const Graph& g, const CertifyChecks& checks, const ReportOptions& options);

/// Selected regularity checks of lift(f); drackn needs a complete base.
Json certify_gain(const GainGraph& f, const CertifyChecks& checks, const ReportOptions& options);

} // namespace gcover
