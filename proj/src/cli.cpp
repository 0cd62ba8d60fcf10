#include "girthspan/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "girthspan/combinatorics.hpp"
#include "girthspan/generators.hpp"
#include "girthspan/lll.hpp"
#include "girthspan/report.hpp"
#include "girthspan/sparsify.hpp"
#include "girthspan/spectral.hpp"
#include "girthspan/verifier.hpp"

namespace girthspan::cli {

namespace {

using report::Json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerateArgs {
    std::string family;
    int n = 0;
    int d = 0;
    std::int64_t p = 0;
    Seed seed = 1;
    std::string out;
};

struct AnalyzeArgs {
    std::string input;
    int g = 5;
    std::optional<double> delta;
    std::string json;
    bool deterministic = false;
};

struct SparsifyArgs {
    std::string input;
    int g = 3;
    double delta = 1.0;
    int s_max = 6;
    Seed seed = 1;
    std::uint64_t max_rounds = 10'000'000;
    std::string out;
    std::string json;
    bool deterministic = false;
};

struct VerifyArgs {
    std::string graph;
    std::string subgraph;
    double delta = 1.0;
    int s_max = 6;
    int g = 3;
    std::string json;
    bool deterministic = false;
};

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

void emit(Json& j, const std::string& path, bool deterministic, std::ostream& out) {
    if (!deterministic) j["generated_at"] = utc_now();
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << text;
}

int require_regular(const Graph& g, const std::string& what) {
    const auto d = g.regular_degree();
    if (!d || *d < 1) throw UsageError(what + " must be a regular graph of positive degree");
    return *d;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
    Graph g;
    if (a.family == "random-regular") {
        g = random_regular(a.n, a.d, a.seed);
    } else if (a.family == "cayley-sl2") {
        g = cayley_sl2(a.p);
    } else if (a.family == "cycle" || a.family == "complete" || a.family == "path") {
        g = fixture(a.family, a.n);
    } else if (a.family == "petersen") {
        g = petersen_graph();
    } else {
        throw UsageError("unknown family \"" + a.family + "\"");
    }
    std::ostringstream summary;
    summary << a.family << ": n=" << g.num_vertices() << " m=" << g.num_edges();
    if (auto d = g.regular_degree()) summary << " d=" << *d;
    if (a.out.empty()) {
        write_edge_list(out, g);
        err << summary.str() << '\n';
    } else {
        write_edge_list_file(a.out, g);
        out << summary.str() << " -> " << a.out << '\n';
    }
    return kSuccess;
}

Json cycle_table(const std::map<int, std::uint64_t>& counts, int g_bound, int d, int n,
                 std::optional<double> lambda2) {
    Json j;
    j["mode"] = "exact";
    j["k_min"] = 3;
    j["k_max"] = g_bound - 1;
    Json rows = Json::array();
    for (const auto& [k, count] : counts) {
        Json row;
        row["k"] = k;
        row["max_count"] = count;
        if (lambda2) {
            const double bound = cycle_count_bound(d, n, *lambda2, k);
            row["spectral_bound"] = report::number(bound);
            row["within_bound"] = static_cast<double>(count) <= bound;
        } else {
            row["spectral_bound"] = nullptr;
            row["within_bound"] = nullptr;
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
    if (a.g < 3) throw UsageError("--g must be at least 3");
    const Graph g = read_edge_list_file(a.input);
    Json j = report::header("analyze");
    j["params"] = {{"input", a.input}, {"g", a.g}, {"delta", a.delta ? Json(*a.delta) : Json(nullptr)}};
    j["graph_meta"] = report::graph_meta(g, a.input);
    j["girth"] = report::girth_field(girth(g));
    j["diameter"] = report::girth_field(diameter(g));
    Json warnings = Json::array();

    const auto d = g.regular_degree();
    const bool connected = is_connected(g);
    if (!connected) {
        warnings.push_back("graph is disconnected: lambda2 reported as 0, expansion checks refuse it");
        err << "warning: " << a.input << " is disconnected\n";
    }
    if (d && *d >= 1 && g.num_vertices() >= 2) {
        const auto spectrum = lambda2(g);
        j["spectral"] = report::spectral(spectrum, *d);
        if (g.num_vertices() <= CheegerOptions{}.exact_max_n) {
            j["cheeger"] = report::cheeger(cheeger_exact(g));
        } else if (connected) {
            j["cheeger"] = report::cheeger_interval(cheeger_sandwich(*d, spectrum.lambda2).lower, cheeger_sweep(g));
        } else {
            j["cheeger"] = {{"mode", "exact"}, {"value", 0.0}, {"reason", "disconnected"}};
        }
        const auto counts = max_cycle_counts(g, a.g - 1);
        j["cycle_table"] = cycle_table(counts, a.g, *d, g.num_vertices(),
                                       connected ? std::optional<double>(spectrum.lambda2) : std::nullopt);
        const double delta_max = delta_max_feasible(*d, counts);
        const double delta = a.delta.value_or(delta_max);
        auto lll = report::lll(lll_condition_check(*d, delta, a.g, counts, g.num_vertices()), delta, delta_max);
        lll["cycle_hypothesis_holds"] = cycle_hypothesis_holds(*d, delta, counts);
        j["lll"] = lll;
    } else {
        warnings.push_back("graph is not regular: spectral, cycle-bound and LLL sections skipped");
        j["spectral"] = nullptr;
        j["cheeger"] = nullptr;
        j["cycle_table"] = nullptr;
        j["lll"] = nullptr;
    }
    j["warnings"] = warnings;
    emit(j, a.json, a.deterministic, out);
    return kSuccess;
}

int cmd_sparsify(const SparsifyArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = read_edge_list_file(a.input);
    const int d = require_regular(g, "input graph");
    if (a.delta < 0.0 || 2.0 * a.delta > d) {
        throw UsageError("--delta must satisfy 0 <= delta <= d/2 (d=" + std::to_string(d) + ")");
    }
    if (a.g < 3) throw UsageError("--g must be at least 3");
    if (a.s_max < 1) throw UsageError("--s-max must be at least 1");
    if (!is_connected(g)) throw UsageError("input graph must be connected");

    SparsifyParams params;
    params.g = a.g;
    params.delta = a.delta;
    params.s_max = a.s_max;
    params.seed = a.seed;
    params.max_rounds = a.max_rounds;
    const auto outcome = moser_tardos_sparsify(g, params);
    if (!outcome.precheck.pass) {
        err << "warning: local-lemma condition not met (margin " << outcome.precheck.margin
            << "); resampling may still converge\n";
    }

    Json j = report::header("sparsify");
    j["params"] = {{"input", a.input}, {"g", a.g},          {"delta", a.delta},
                   {"s_max", a.s_max}, {"seed", a.seed},    {"max_rounds", a.max_rounds}};
    j["graph_meta"] = report::graph_meta(g, a.input);
    j["sparsify"] = report::sparsify(outcome, params);
    if (!a.out.empty()) write_edge_list_file(a.out, outcome.h);
    emit(j, a.json, a.deterministic, out);

    if (outcome.budget_exhausted) {
        err << "resampling budget of " << a.max_rounds << " rounds exhausted\n";
        return kBudgetExhausted;
    }
    return outcome.girth_certified ? kSuccess : kVerificationFailure;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = read_edge_list_file(a.graph);
    const Graph h = read_edge_list_file(a.subgraph);
    require_regular(g, "graph");
    if (!g.is_spanning_supergraph_of(h)) {
        err << "error: " << a.subgraph << " is not a spanning subgraph of " << a.graph << '\n';
        return kVerificationFailure;
    }
    Json j = report::header("verify");
    j["params"] = {{"graph", a.graph}, {"subgraph", a.subgraph}, {"delta", a.delta},
                   {"s_max", a.s_max}, {"g", a.g}};
    j["graph_meta"] = report::graph_meta(g, a.graph);
    j["subgraph_meta"] = report::graph_meta(h, a.subgraph);

    const auto audit = verify_theorem2_inequality(g, h, a.delta, a.s_max);
    bool pass = audit.pass;
    j["boundary_audit"] = report::boundary_audit(audit, a.delta);
    j["subgraph_girth"] = report::girth_field(girth(h));
    j["diameter_girth_ratio"] = report::number(diameter_girth_ratio(h));

    const CheegerOptions cheeger_opts;
    if (g.num_vertices() <= cheeger_opts.exact_max_n && g.num_vertices() >= 2) {
        j["cheeger"] = {{"graph", report::cheeger(cheeger_exact(g))},
                        {"subgraph", report::cheeger(cheeger_exact(h))}};
        const auto cor = verify_corollary3(g, h, a.delta);
        pass = pass && cor.pass;
        j["cheeger_guarantee"] = report::cheeger_guarantee(cor, a.delta);
    } else {
        j["cheeger"] = nullptr;
        j["cheeger_guarantee"] = nullptr;
    }
    if (is_connected(g) && g.num_vertices() >= 2) {
        SpectralGuaranteeOptions guarantee_options;
        guarantee_options.s_max = a.s_max;
        const auto guarantee = verify_theorem4(g, a.g, guarantee_options);
        if (guarantee.audit) pass = pass && guarantee.audit->pass;
        j["spectral_guarantee"] = report::spectral_guarantee(guarantee);
    } else {
        j["spectral_guarantee"] = nullptr;
    }
    j["pass"] = pass;
    emit(j, a.json, a.deterministic, out);
    return pass ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Large-girth spanning subgraphs of regular expanders", "girthspan"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write a graph in edge-list format");
    generate->add_option("family", gen.family,
                         "random-regular | cayley-sl2 | cycle | complete | path | petersen")
        ->required();
    generate->add_option("--n", gen.n, "vertex count");
    generate->add_option("--d", gen.d, "degree (random-regular)");
    generate->add_option("--p", gen.p, "odd prime (cayley-sl2)");
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--out", gen.out, "output edge-list path (stdout when absent)");

    AnalyzeArgs ana;
    auto* analyze = app.add_subcommand("analyze", "girth, spectrum, Cheeger, cycle table, LLL check");
    analyze->add_option("input", ana.input, "edge-list file")->required();
    analyze->add_option("--g", ana.g, "girth target; cycles shorter than this are tabulated");
    analyze->add_option("--delta", ana.delta, "delta for the LLL check (default: largest feasible)");
    analyze->add_option("--json", ana.json, "report path (stdout when absent)");
    analyze->add_flag("--deterministic", ana.deterministic, "omit timestamps from the report");

    SparsifyArgs spa;
    auto* sparsify = app.add_subcommand("sparsify", "Moser-Tardos large-girth spanning subgraph");
    sparsify->add_option("input", spa.input, "edge-list file")->required();
    sparsify->add_option("--g", spa.g, "girth target");
    sparsify->add_option("--delta", spa.delta, "arc density parameter, 0 <= delta <= d/2")->required();
    sparsify->add_option("--s-max", spa.s_max, "largest connected set audited");
    sparsify->add_option("--seed", spa.seed, "random seed");
    sparsify->add_option("--max-rounds", spa.max_rounds, "resampling budget");
    sparsify->add_option("--out", spa.out, "edge-list path for the subgraph");
    sparsify->add_option("--json", spa.json, "report path (stdout when absent)");
    sparsify->add_flag("--deterministic", spa.deterministic, "omit timestamps from the report");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "audit a spanning subgraph against the guarantees");
    verify->add_option("graph", ver.graph, "edge-list of G")->required();
    verify->add_option("subgraph", ver.subgraph, "edge-list of H")->required();
    verify->add_option("--delta", ver.delta, "delta of the boundary inequality")->required();
    verify->add_option("--s-max", ver.s_max, "largest connected set audited");
    verify->add_option("--g", ver.g, "girth target for the spectral-route check");
    verify->add_option("--json", ver.json, "report path (stdout when absent)");
    verify->add_flag("--deterministic", ver.deterministic, "omit timestamps from the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*generate) return cmd_generate(gen, out, err);
        if (*analyze) return cmd_analyze(ana, out, err);
        if (*sparsify) return cmd_sparsify(spa, out, err);
        if (*verify) return cmd_verify(ver, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace girthspan::cli
