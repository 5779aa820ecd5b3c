#include "gcover/report.hpp"

#include "gcover/errors.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace gcover {

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const IntPolynomial& p)
{
    Json out = Json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.get_str());
    return out;
}

Json spectrum_json(const Spectrum& s, const IntPolynomial* p)
{
    Json out = Json::array();
    for (const auto& e : s.entries) {
        Json value = format_real(e.value);
        const double rounded = std::round(e.value);
        if (p && std::abs(e.value - rounded) <= 1e-6 * std::max(1.0, std::abs(e.value)) &&
            root_multiplicity(*p, mpz_class(static_cast<long>(rounded))) == e.multiplicity)
            value = static_cast<long>(rounded);
        out.push_back(Json::array({value, e.multiplicity}));
    }
    return out;
}

namespace {

Json exact_or_real(double x, bool exact)
{
    if (exact)
        return static_cast<long>(std::llround(x));
    return format_real(x);
}

Json classes_json(const std::vector<std::vector<Vertex>>& classes)
{
    Json out = Json::array();
    for (const auto& c : classes)
        out.push_back(c);
    return out;
}

Json srg_json(const SrgParams& p)
{
    return {{"n", p.n}, {"k", p.k}, {"a", p.a}, {"c", p.c}};
}

Json drackn_json(const DracknParams& p)
{
    return {{"n", p.n}, {"r", p.r}, {"t", p.t}};
}

const char* to_string(MinpolyCertificate::Status s)
{
    using S = MinpolyCertificate::Status;
    switch (s) {
    case S::ok:
        return "ok";
    case S::not_two_ev:
        return "not-two-eigenvalues";
    case S::residual:
        return "residual";
    case S::valency_mismatch:
        return "valency-mismatch";
    case S::nonzero_diagonal:
        return "nonzero-diagonal";
    }
    return "?";
}

// An antipodal distance-regular graph of diameter 3 whose classes all have
// size r and whose valency is (number of classes) - 1 covers K_n.
std::optional<DracknParams> plain_drackn(const Graph& g, const IntersectionArray& array,
                                         const AntipodalResult& antipodal)
{
    if (array.diameter() != 3 || !antipodal.antipodal || antipodal.classes.empty())
        return std::nullopt;
    const auto r = antipodal.classes.front().size();
    for (const auto& c : antipodal.classes)
        if (c.size() != r)
            return std::nullopt;
    const int n = static_cast<int>(antipodal.classes.size());
    if (r < 2 || array.valency() != n - 1 || g.order() != n * static_cast<int>(r))
        return std::nullopt;
    return DracknParams{n, static_cast<int>(r), array.c[1]};
}

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json input_json(const ReportOptions& options)
{
    return {{"source", options.source}, {"seed", options.seed}, {"tol", options.tol}};
}

} // namespace

Json to_json(const IntersectionArray& a)
{
    return a.to_string();
}

Json to_json(const TwoEvCertificate& c)
{
    Json out{{"is_two_ev", c.is_two_ev},
             {"distinct_new", c.distinct_new},
             {"cover_connected", c.cover_connected},
             {"quotient_poly", to_json(c.quotient)}};
    if (c.is_two_ev) {
        out["theta"] = exact_or_real(c.theta, c.rational);
        out["tau"] = exact_or_real(c.tau, c.rational);
        out["mult_theta"] = c.mult_theta;
        out["mult_tau"] = c.mult_tau;
        out["lambda"] = c.lambda_exact;
        out["mu"] = c.mu_exact;
        out["rational"] = c.rational;
    }
    return out;
}

Json to_json(const RegularityCertificate& c)
{
    Json out{{"walk_regular", c.walk_regular}, {"connected", c.connected}};
    out["srg"] = c.srg ? srg_json(*c.srg) : Json();
    out["drg"] = c.drg ? to_json(*c.drg) : Json();
    out["antipodal"] = c.antipodal;
    out["antipodal_classes"] = c.antipodal ? classes_json(c.antipodal_classes) : Json();
    out["drackn"] = c.drackn ? drackn_json(*c.drackn) : Json();
    return out;
}

Json to_json(const MinpolyCertificate& c)
{
    Json out{{"status", to_string(c.status)}, {"distinct", c.distinct}};
    if (c.distinct == 2) {
        out["theta"] = format_real(c.theta);
        out["tau"] = format_real(c.tau);
        out["lambda"] = format_real(c.lambda);
        out["mu"] = format_real(c.mu);
    }
    return out;
}

Json to_json(const VerifySummary& s)
{
    Json out{{"sampled", s.sampled},
             {"two_ev", s.two_ev},
             {"verified", s.verified},
             {"not_applicable", s.not_applicable},
             {"failures", s.failures}};
    Json drackns = Json::array();
    for (const auto& d : s.drackns)
        drackns.push_back(drackn_json(d));
    out["drackns"] = drackns;
    Json arrays = Json::array();
    for (const auto& a : s.arrays)
        arrays.push_back(to_json(a));
    out["arrays"] = arrays;
    return out;
}

Json to_json(const VerificationRecord& r)
{
    Json checks = Json::object();
    for (const auto& [name, status] : r.theorem_checks)
        checks[name] = to_string(status);
    return {{"group", r.gain.group().describe()},
            {"gains", [&] {
                 Json g = Json::array();
                 for (const auto& e : r.gain.gains())
                     g.push_back(r.gain.group().format(e));
                 return g;
             }()},
            {"two_ev", to_json(r.two_ev)},
            {"regularity", to_json(r.regularity)},
            {"checks", checks}};
}

Json graph_spectrum(const Graph& g, double tol)
{
    const IntPolynomial p = char_poly(g);
    return {{"char_poly", to_json(p)}, {"spectrum", spectrum_json(hermitian_spectrum(g.adjacency_matrix(), tol), &p)}};
}

Json analyze_gain(const GainGraph& f, const ReportOptions& options)
{
    Stopwatch clock;
    Json report{{"tool_version", tool_version}};
    Json input = input_json(options);
    input["group"] = f.group().describe();
    input["base_order"] = f.base().order();
    input["base_size"] = f.base().size();
    input["sheets"] = f.group().sheets();
    report["input"] = input;

    const CoverGraph cover = lift(f);
    const TwoEvCertificate cert = classify_two_ev(f, cover);

    Json spectra;
    spectra["base"] = {{"char_poly", to_json(cert.base_poly)},
                       {"spectrum", spectrum_json(hermitian_spectrum(f.base().adjacency_matrix(), options.tol),
                                                  &cert.base_poly)}};
    spectra["cover"] = {{"char_poly", to_json(cert.cover_poly)},
                        {"spectrum", spectrum_json(hermitian_spectrum(cover.graph.adjacency_matrix(), options.tol),
                                                   &cert.cover_poly)}};
    if (f.group().is_abelian()) {
        Json chars = Json::array();
        const auto valency = f.base().valency();
        for (const auto& chi : characters(f.group())) {
            const RepMatrix rep = rep_matrix(f, chi);
            const bool trivial = std::all_of(chi.begin(), chi.end(), [](int j) { return j == 0; });
            Json entry{{"character", chi},
                       {"spectrum", spectrum_json(hermitian_spectrum(rep.entries, options.tol),
                                                  trivial ? &cert.base_poly : nullptr)}};
            if (!trivial)
                entry["minpoly"] = to_json(minpoly_certificate(rep, valency, options.tol));
            chars.push_back(entry);
        }
        spectra["characters"] = chars;
    }
    report["spectra"] = spectra;
    report["two_ev"] = to_json(cert);
    report["regularity"] = to_json(certify_cover(f, cover, cert));
    if (options.timing)
        report["timing"] = {{"total_ms", clock.ms()}};
    return report;
}

namespace {

Json certify_impl(const Graph& g, const CertifyChecks& checks, std::optional<DracknParams> drackn_override,
                  bool drackn_from_gain, const ReportOptions& options, Json input)
{
    Stopwatch clock;
    Json report{{"tool_version", tool_version}, {"input", std::move(input)}};
    const bool connected = is_connected(g);
    Json results{{"connected", connected}};
    if (checks.walk)
        results["walk_regular"] = is_walk_regular(g);
    std::optional<IntersectionArray> array;
    if ((checks.drg || checks.drackn) && connected)
        array = is_distance_regular(g);
    if (checks.drg)
        results["drg"] = array ? to_json(*array) : Json();
    if (checks.srg) {
        auto srg = srg_parameters(g);
        results["srg"] = srg ? srg_json(*srg) : Json();
    }
    std::optional<AntipodalResult> antipodal;
    if ((checks.antipodal || checks.drackn) && connected)
        antipodal = is_antipodal(g);
    if (checks.antipodal) {
        results["antipodal"] = antipodal && antipodal->antipodal;
        results["antipodal_classes"] =
            antipodal && antipodal->antipodal ? classes_json(antipodal->classes) : Json();
    }
    if (checks.drackn) {
        std::optional<DracknParams> d;
        if (drackn_from_gain)
            d = drackn_override;
        else if (array && antipodal)
            d = plain_drackn(g, *array, *antipodal);
        results["drackn"] = d ? drackn_json(*d) : Json();
    }
    report["regularity"] = results;
    if (options.timing)
        report["timing"] = {{"total_ms", clock.ms()}};
    return report;
}

} // namespace

Json certify_graph(const Graph& g, const CertifyChecks& checks, const ReportOptions& options)
{
    Json input = input_json(options);
    input["order"] = g.order();
    input["size"] = g.size();
    return certify_impl(g, checks, std::nullopt, false, options, std::move(input));
}

Json certify_gain(const GainGraph& f, const CertifyChecks& checks, const ReportOptions& options)
{
    Json input = input_json(options);
    input["group"] = f.group().describe();
    input["base_order"] = f.base().order();
    input["base_size"] = f.base().size();
    const CoverGraph cover = lift(f);
    std::optional<DracknParams> drackn;
    bool from_gain = false;
    const auto n = static_cast<std::size_t>(f.base().order());
    if (checks.drackn && f.base().size() == n * (n - 1) / 2 && is_connected(f.base())) {
        drackn = drackn_parameters(f, cover, classify_two_ev(f, cover));
        from_gain = true;
    }
    return certify_impl(cover.graph, checks, drackn, from_gain, options, std::move(input));
}

} // namespace gcover
