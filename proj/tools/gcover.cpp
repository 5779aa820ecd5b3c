#include "gcover/errors.hpp"
#include "gcover/families.hpp"
#include "gcover/io.hpp"
#include "gcover/report.hpp"
#include "gcover/search.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>

using namespace gcover;

namespace {

enum Exit { ok = 0, usage = 1, falsified = 2, numeric = 3 };

std::vector<int> int_list(const std::string& text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        int value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
        if (ec != std::errc{} || end != text.data() + comma)
            throw ParameterError("malformed integer list '" + text + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::pair<std::string, std::vector<int>> split_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        return {spec, {}};
    return {spec.substr(0, colon), int_list(spec.substr(colon + 1))};
}

// Named base graphs, or an edge-list file.
Graph parse_base(const std::string& spec)
{
    auto [name, args] = split_spec(spec);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw ParameterError("base '" + name + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "complete") {
        need(1);
        return complete_graph(args[0]);
    }
    if (name == "bipartite") {
        need(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (name == "multipartite") {
        if (args.empty())
            throw ParameterError("multipartite needs part sizes");
        return complete_multipartite(args);
    }
    if (name == "octahedron") {
        need(0);
        return complete_multipartite({2, 2, 2});
    }
    if (name == "petersen") {
        need(0);
        return petersen();
    }
    if (name == "hypercube") {
        need(1);
        return hypercube(args[0]);
    }
    if (name == "folded-cube") {
        need(1);
        return folded_cube(args[0]);
    }
    if (name == "cycle") {
        need(1);
        return cycle_graph(args[0]);
    }
    if (name == "path") {
        need(1);
        return path_graph(args[0]);
    }
    if (name == "kneser") {
        need(2);
        return kneser(args[0], args[1]);
    }
    if (name == "johnson") {
        need(2);
        return johnson(args[0], args[1]);
    }
    return parse_edge_list(read_text(spec));
}

// cyclic:r, abelian:r1,r2,...  ("Z3" and "Z2xZ2" are accepted too).
GroupSpec parse_group(const std::string& spec)
{
    if (!spec.empty() && spec[0] == 'Z') {
        std::vector<int> orders;
        std::size_t pos = 0;
        while (pos < spec.size()) {
            if (spec[pos] != 'Z')
                throw ParameterError("malformed group '" + spec + "'");
            auto x = spec.find('x', pos);
            if (x == std::string::npos)
                x = spec.size();
            orders.push_back(int_list(spec.substr(pos + 1, x - pos - 1)).at(0));
            pos = x + 1;
        }
        return orders.size() == 1 ? GroupSpec::cyclic(orders[0]) : GroupSpec::abelian(orders);
    }
    auto [name, args] = split_spec(spec);
    if (name == "cyclic" && args.size() == 1)
        return GroupSpec::cyclic(args[0]);
    if (name == "abelian" && !args.empty())
        return GroupSpec::abelian(args);
    throw ParameterError("unknown group '" + spec + "'");
}

struct Globals {
    double tol = default_cluster_tolerance;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    std::string json_path;
    bool timing = false;
};

void emit(const Json& report, const Globals& globals)
{
    const std::string text = report.dump(2) + "\n";
    if (globals.json_path.empty())
        std::cout << text;
    else
        write_text(globals.json_path, text);
}

ReportOptions report_options(const Globals& g, std::string source)
{
    return {g.tol, g.seed, g.timing, std::move(source)};
}

GainGraph require_gain(const std::string& path)
{
    auto input = read_graph_input(path);
    if (auto* f = std::get_if<GainGraph>(&input))
        return std::move(*f);
    throw ParameterError(path + " is not a gain file");
}

GainGraph demo_family(const std::string& family, int n, int q)
{
    if (family == "huang" || family == "cohen-tits")
        return huang_signing(n);
    if (family == "butson")
        return butson_gain(fourier_butson(q));
    if (family == "s3k5")
        return s3_cover_k5();
    if (family == "k3n-nonexample")
        return k3n_nonexample(n);
    throw ParameterError("unknown family '" + family + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-eigenvalue covers of graphs: lifts, spectra and regularity certificates"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--tol", g.tol, "Eigenvalue cluster tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--budget", g.budget, "Maximum number of gain assignments");
    app.add_option("--json", g.json_path, "Write the JSON report here instead of stdout");
    app.add_flag("--timing", g.timing, "Include wall-clock timings in reports");

    std::string family;
    int n = 3;
    int q = 3;
    std::string out_path;
    auto* demo = app.add_subcommand("demo", "Build a named family, write its gain file and analyse it");
    demo->add_option("family", family, "huang | cohen-tits | butson | s3k5 | k3n-nonexample")->required();
    demo->add_option("--n", n, "Family parameter n");
    demo->add_option("--q", q, "Butson order q");
    demo->add_option("--out", out_path, "Write the gain file here");

    std::string input_path;
    auto* lift_cmd = app.add_subcommand("lift", "Write the lift of a gain file as an edge list");
    lift_cmd->add_option("gainfile", input_path)->required()->check(CLI::ExistingFile);
    lift_cmd->add_option("--out", out_path, "Write the edge list here instead of stdout");

    auto* classify = app.add_subcommand("classify", "Spectral and regularity report for a gain file");
    classify->add_option("gainfile", input_path)->required()->check(CLI::ExistingFile);

    CertifyChecks checks;
    auto* certify = app.add_subcommand("certify", "Regularity checks of an edge list or of the lift of a gain file");
    certify->add_option("path", input_path)->required()->check(CLI::ExistingFile);
    certify->add_flag("--walk", checks.walk);
    certify->add_flag("--drg", checks.drg);
    certify->add_flag("--srg", checks.srg);
    certify->add_flag("--antipodal", checks.antipodal);
    certify->add_flag("--drackn", checks.drackn);

    std::string base_spec;
    std::string group_spec = "cyclic:2";
    std::string mode = "exhaustive";
    bool no_prefilter = false;
    auto* search = app.add_subcommand("search", "Search normalized gains for 2ev covers");
    search->add_option("--base", base_spec, "complete:4, petersen, bipartite:3,3, octahedron, ... or a file")
        ->required();
    search->add_option("--group", group_spec, "cyclic:r, abelian:r1,r2 or Z2xZ2");
    search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_flag("--no-prefilter", no_prefilter, "Search even when divisibility rules out hits");

    std::string theorem;
    int r = 2;
    int m = 3;
    std::uint64_t samples = 200;
    std::vector<std::string> bases{"complete:4", "complete:5", "bipartite:3,3", "cycle:6", "hypercube:3"};
    std::vector<std::string> groups{"Z2", "Z3", "Z4", "Z2xZ2"};
    std::string reproducers;
    auto* verify = app.add_subcommand("verify", "Check a structural claim over many gains");
    verify->add_option("claim", theorem, "5.1 (walk-regular lifts), 6.2 (drackns), 6.4 (srg bases), 6.5 (bipartite)")
        ->required()
        ->check(CLI::IsMember({"5.1", "6.2", "6.4", "6.5"}));
    verify->add_option("--n", n, "Order of K_n, or the right side of K_{m,n}");
    verify->add_option("--m", m, "Left side of K_{m,n}");
    verify->add_option("--r", r, "Cyclic group order");
    verify->add_option("--samples", samples, "Random gains per (base, group) pair");
    verify->add_option("--bases", bases, "Bases for 5.1");
    verify->add_option("--groups", groups, "Groups for 5.1");
    verify->add_option("--base", base_spec, "Strongly regular base for 6.4");
    verify->add_option("--reproducers", reproducers, "Directory for falsification reproducers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*demo) {
            GainGraph f = demo_family(family, n, q);
            if (!out_path.empty())
                write_text(out_path, format_gain_file(f));
            Json report = analyze_gain(f, report_options(g, family));
            report["input"]["family"] = family;
            report["gain_file"] = format_gain_file(f);
            emit(report, g);
        } else if (*lift_cmd) {
            const std::string text = format_edge_list(lift(require_gain(input_path)).graph);
            if (out_path.empty())
                std::cout << text;
            else
                write_text(out_path, text);
        } else if (*classify) {
            emit(analyze_gain(require_gain(input_path), report_options(g, input_path)), g);
        } else if (*certify) {
            if (!checks.any())
                checks = CertifyChecks::all();
            auto input = read_graph_input(input_path);
            auto opts = report_options(g, input_path);
            emit(std::holds_alternative<Graph>(input) ? certify_graph(std::get<Graph>(input), checks, opts)
                                                      : certify_gain(std::get<GainGraph>(input), checks, opts),
                 g);
        } else if (*search) {
            auto spec = SearchSpec::make(parse_base(base_spec), parse_group(group_spec),
                                         mode == "random" ? SearchSpec::Mode::random : SearchSpec::Mode::exhaustive,
                                         g.budget, g.seed);
            auto result = search_two_ev(spec, SearchOptions{!no_prefilter});
            Json hits = Json::array();
            std::uint64_t connected = 0;
            for (const auto& h : result.hits) {
                hits.push_back(to_json(h));
                connected += h.two_ev.cover_connected;
            }
            emit(Json{{"tool_version", tool_version},
                      {"input", {{"base", base_spec}, {"group", group_spec}, {"mode", mode}, {"seed", g.seed},
                                 {"budget", g.budget}}},
                      {"sampled", result.sampled},
                      {"prefilter_empty", result.prefilter_empty},
                      {"two_ev_hits", result.hits.size()},
                      {"connected_hits", connected},
                      {"hits", hits}},
                 g);
        } else if (*verify) {
            VerifyOptions vopts{reproducers};
            Json summary{{"tool_version", tool_version}, {"claim", theorem}};
            if (theorem == "5.1") {
                std::vector<Graph> gs;
                for (const auto& b : bases)
                    gs.push_back(parse_base(b));
                std::vector<GroupSpec> grs;
                for (const auto& s : groups)
                    grs.push_back(parse_group(s));
                summary["result"] = to_json(verify_walk_regular_covers(gs, grs, samples, g.seed, vopts));
            } else if (theorem == "6.2") {
                summary["result"] = to_json(verify_drackn_covers(n, r, g.budget, vopts));
            } else if (theorem == "6.5") {
                summary["result"] = to_json(verify_bipartite_covers(m, n, r, g.budget, vopts));
            } else {
                if (base_spec.empty())
                    throw ParameterError("verify 6.4 needs --base");
                auto spec = SearchSpec::make(parse_base(base_spec), GroupSpec::cyclic(r),
                                             SearchSpec::Mode::exhaustive, g.budget, g.seed);
                VerifySummary s;
                GainStream stream(spec);
                while (auto f = stream.next()) {
                    ++s.sampled;
                    auto rec = verify_srg_cover(*f, vopts);
                    if (!rec.two_ev.is_two_ev)
                        continue;
                    ++s.two_ev;
                    if (rec.theorem_checks["drg_iff_a_equals_lambda"] == CheckStatus::pass)
                        ++s.verified;
                    else
                        ++s.not_applicable;
                    if (rec.regularity.drg &&
                        std::find(s.arrays.begin(), s.arrays.end(), *rec.regularity.drg) == s.arrays.end())
                        s.arrays.push_back(*rec.regularity.drg);
                }
                summary["result"] = to_json(s);
            }
            summary["status"] = "pass";
            emit(summary, g);
        }
    } catch (const Falsification& e) {
        std::cerr << "falsified: " << e.what() << '\n' << e.reproducer();
        return Exit::falsified;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << '\n';
        return Exit::falsified;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return Exit::numeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::usage;
    }
    return Exit::ok;
}
