#include "ttone/cli.hpp"

#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttone/cubic_eight.hpp"
#include "ttone/error.hpp"
#include "ttone/exact_solver.hpp"
#include "ttone/generators.hpp"
#include "ttone/greedy_bounds.hpp"
#include "ttone/io.hpp"

namespace ttone::cli {

namespace {

const std::set<std::string> kNeedsGraph{"color", "exact", "verify", "gen"};

Graph load_graph(const RunConfig& c) {
    if (c.input) return io::parse_edge_list(io::read_file(*c.input));
    return gen::named(*c.generator);
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.out)
        io::write_file(*c.out, text);
    else
        out << text;
}

SearchOptions options_of(const RunConfig& c) {
    SearchOptions o;
    if (c.timeout_secs) o.timeout = std::chrono::duration<double>(*c.timeout_secs);
    return o;
}

ColorResult run_colorer(const std::string& algorithm, const Graph& g, unsigned t) {
    const bool two_tone_only = algorithm.rfind("2tone-", 0) == 0 || algorithm == "cubic8";
    if (two_tone_only && t != 2)
        throw Error(ErrorKind::InvalidArgument, algorithm + " is a 2-tone colorer; got --t " + std::to_string(t));
    if (algorithm == "2tone-greedy") return color_2tone_greedy(g);
    if (algorithm == "2tone-bipartite") return color_2tone_bipartite(g);
    if (algorithm == "2tone-chordal") return color_2tone_chordal(g);
    if (algorithm == "ttone-greedy") return color_ttone_greedy(g, t);
    if (algorithm == "ttone-degenerate") return color_ttone_degenerate(g, t);
    if (algorithm == "tree") return color_tree_ttone(g, t);
    if (algorithm == "cubic8") {
        auto r = color_cubic_8(g);
        ColorResult out{std::move(r.coloring), {}};
        out.report.algorithm = "cubic8";
        out.report.budget = out.report.formula_budget = kCubicColors;
        out.report.used = out.coloring.used_color_count();
        out.report.valid = verify_coloring(g, out.coloring).empty();
        return out;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown algorithm '" + algorithm + "'");
}

int cmd_color(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c);
    const auto r = run_colorer(c.algorithm, g, c.t);
    emit(c, out, io::write_coloring_json(r.coloring, r.report));
    return kOk;
}

int cmd_exact(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(c);
    if (c.k) {
        const auto r = find_coloring(g, c.t, *c.k, options_of(c));
        if (r.status == SearchStatus::Timeout) {
            err << "timeout at k=" << *c.k << "\n";
            return kTimeout;
        }
        if (r.status == SearchStatus::Absent) {
            out << "absent\n";
            return kOk;
        }
        if (c.out) io::write_file(*c.out, io::write_coloring_json(*r.coloring, r.stats, true));
        out << "found\n";
        return kOk;
    }
    const auto r = exact_tau(g, c.t, c.kmax, options_of(c));
    switch (r.status) {
        case TauStatus::Timeout:
            err << "timeout at k=" << r.value << "\n";
            return kTimeout;
        case TauStatus::AboveCap:
            out << "above " << c.kmax << "\n";
            return kOk;
        case TauStatus::Exact:
            if (c.out) io::write_file(*c.out, io::write_coloring_json(*r.witness, r.stats, true));
            out << r.value << "\n";
            return kOk;
    }
    return kInternalInvariant;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const auto g = load_graph(c);
    const auto coloring = io::read_coloring_json(io::read_file(*c.coloring), g.order());
    std::size_t uncolored = 0;
    for (Vertex v = 0; v < g.order(); ++v) uncolored += coloring.is_colored(v) ? 0 : 1;
    const auto violations = verify_coloring(g, coloring);
    if (violations.empty() && uncolored == 0) {
        out << "valid\n";
        return kOk;
    }
    if (uncolored) out << uncolored << " uncolored vertices\n";
    for (const auto& v : violations)
        out << "violation " << v.u << " " << v.v << " shared=" << v.shared << " dist=" << v.dist << "\n";
    out << "invalid\n";
    return kInvalidInput;
}

int cmd_heawood(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto cert = heawood_tau2(options_of(c));
    out << "upper: 7-coloring " << (cert.upper_violations.empty() ? "valid" : "INVALID") << "\n";
    if (cert.lower.status == SearchStatus::Timeout) {
        err << "timeout during the k=6 search\n";
        return kTimeout;
    }
    out << "lower: k=6 " << (cert.lower.status == SearchStatus::Absent ? "absent" : "FOUND") << " (nodes "
        << cert.lower.stats.nodes << ")\n";
    out << "tau2 " << cert.value << "\n";
    return cert.value == 7 ? kOk : kInternalInvariant;
}

int cmd_claims(std::ostream& out) {
    const auto r = check_seven_label_claim();
    out << r.families_checked << " families checked, " << r.counterexamples.size() << " counterexamples\n";
    return r.holds() ? kOk : kInternalInvariant;
}

struct SuiteCase {
    std::string algorithm;
    gen::RandomKind kind;
    unsigned t;
};

// Random instance in each colorer's legal class, delta <= 8.
int cmd_bounds_suite(const RunConfig& c, std::ostream& out) {
    const std::vector<SuiteCase> cases{
        {"2tone-greedy", gen::RandomKind::MaxDegree, 2},
        {"2tone-bipartite", gen::RandomKind::Bipartite, 2},
        {"2tone-chordal", gen::RandomKind::Chordal, 2},
        {"ttone-greedy", gen::RandomKind::MaxDegree, 0},
        {"ttone-degenerate", gen::RandomKind::KDegenerate, 0},
        {"tree", gen::RandomKind::TreeMaxDegree, 0},
        {"cubic8", gen::RandomKind::Cubic, 2},
    };
    nlohmann::json rows = nlohmann::json::array();
    std::size_t failures = 0;
    for (std::size_t i = 0; i < c.count; ++i) {
        const std::uint64_t seed = c.seed * 1000003 + i;
        for (const auto& sc : cases) {
            gen::RandomSpec spec;
            spec.kind = sc.kind;
            spec.seed = seed;
            spec.n = 10 + 2 * (i % 16);
            spec.param = sc.kind == gen::RandomKind::KDegenerate ? 1 + i % 3 : 2 + i % 7;
            spec.param2 = sc.kind == gen::RandomKind::KDegenerate ? 8 : 0;
            const unsigned t = sc.t ? sc.t : static_cast<unsigned>(1 + i % 3);
            const auto g = gen::random_family(spec);
            const auto r = run_colorer(sc.algorithm, g, t);
            const bool ok = r.report.valid && r.report.used <= r.report.budget;
            failures += ok ? 0 : 1;
            out << "instance " << i << " " << sc.algorithm << " n=" << g.order() << " delta=" << max_degree(g)
                << " t=" << t << " budget=" << r.report.budget << " used=" << r.report.used
                << (ok ? " ok" : " FAIL") << "\n";
            rows.push_back({{"instance", i},
                            {"algorithm", sc.algorithm},
                            {"n", g.order()},
                            {"delta", max_degree(g)},
                            {"t", t},
                            {"budget", r.report.budget},
                            {"used", r.report.used},
                            {"valid", r.report.valid}});
        }
    }
    if (c.out) io::write_file(*c.out, nlohmann::json{{"instances", rows}, {"failures", failures}}.dump(2) + "\n");
    out << (failures ? "FAIL " : "ok ") << rows.size() << " runs, " << failures << " failures\n";
    return failures ? kInternalInvariant : kOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotBipartite:
        case ErrorKind::NotChordal:
        case ErrorKind::NotATree:
        case ErrorKind::DegreeTooHigh:
            return kClassMismatch;
        case ErrorKind::InternalInvariant:
            return kInternalInvariant;
        default:
            return kInvalidInput;
    }
}

}  // namespace

void validate(const RunConfig& c) {
    static const std::set<std::string> commands{"color",         "exact",        "verify",      "gen",
                                                "heawood-check", "claims-check", "bounds-suite"};
    if (!commands.contains(c.command)) throw Error(ErrorKind::InvalidArgument, "unknown command '" + c.command + "'");
    if (kNeedsGraph.contains(c.command) && c.input.has_value() == c.generator.has_value())
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --input or --gen");
    if (c.timeout_secs && !(*c.timeout_secs > 0)) throw Error(ErrorKind::InvalidArgument, "timeout must be > 0");
    if (c.t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    if (c.command == "color" && c.algorithm.empty()) throw Error(ErrorKind::InvalidArgument, "color needs --algorithm");
    if (c.command == "verify" && !c.coloring) throw Error(ErrorKind::InvalidArgument, "verify needs --coloring");
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
        if (c.command == "color") return cmd_color(c, out);
        if (c.command == "exact") return cmd_exact(c, out, err);
        if (c.command == "verify") return cmd_verify(c, out);
        if (c.command == "gen") {
            emit(c, out, io::write_edge_list(load_graph(c)));
            return kOk;
        }
        if (c.command == "heawood-check") return cmd_heawood(c, out, err);
        if (c.command == "claims-check") return cmd_claims(out);
        return cmd_bounds_suite(c, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-tone graph coloring tools"};
    app.require_subcommand(1);
    RunConfig c;
    auto add_common = [&](CLI::App* sub, bool graph) {
        if (graph) {
            sub->add_option("--input", c.input, "edge-list file");
            sub->add_option("--gen", c.generator, "generator spec, e.g. heawood or random:cubic:n=10,seed=1");
        }
        sub->add_option("--t", c.t, "number of tones");
        sub->add_option("--seed", c.seed);
        sub->add_option("--timeout-secs", c.timeout_secs);
        sub->add_option("--out", c.out, "output file");
    };
    auto* color = app.add_subcommand("color", "color with a bound-realizing algorithm");
    add_common(color, true);
    color->add_option("--algorithm", c.algorithm)
        ->check(CLI::IsMember({"2tone-greedy", "2tone-bipartite", "2tone-chordal", "ttone-greedy",
                               "ttone-degenerate", "tree", "cubic8"}));
    auto* exact = app.add_subcommand("exact", "exact t-tone chromatic number");
    add_common(exact, true);
    exact->add_option("--k", c.k, "test a single k");
    exact->add_option("--kmax", c.kmax);
    auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    add_common(verify, true);
    verify->add_option("--coloring", c.coloring)->required();
    auto* gen_cmd = app.add_subcommand("gen", "emit a graph as an edge list");
    add_common(gen_cmd, true);
    add_common(app.add_subcommand("heawood-check", "certify tau2(Heawood) = 7"), false);
    add_common(app.add_subcommand("claims-check", "scan all seven-label families"), false);
    auto* suite = app.add_subcommand("bounds-suite", "budget compliance over random instances");
    add_common(suite, false);
    suite->add_option("--count", c.count, "instances per colorer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
    }
    c.command = app.get_subcommands().front()->get_name();
    return dispatch(c, out, err);
}

}  // namespace ttone::cli
