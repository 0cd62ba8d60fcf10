#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "girthspan/cli.hpp"
#include "girthspan/generators.hpp"
#include "girthspan/graph.hpp"

using namespace girthspan;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "girthspan");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    const auto dir = std::filesystem::path(GIRTHSPAN_TEST_TMP) / "cli";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("generate writes edge lists") {
    const auto path = tmp("rr.el");
    const auto r = run({"generate", "random-regular", "--n", "100", "--d", "8", "--seed", "7", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("m=400") != std::string::npos);
    const Graph g = read_edge_list_file(path);
    CHECK(g.num_edges() == 400);
    CHECK(g == random_regular(100, 8, 7));

    const auto c = run({"generate", "cayley-sl2", "--p", "5", "--out", tmp("c5.el")});
    CHECK(c.code == 0);
    CHECK(read_edge_list_file(tmp("c5.el")).num_vertices() == 120);

    const auto p = run({"generate", "petersen"});
    CHECK(p.code == 0);
    std::istringstream in(p.out);
    CHECK(read_edge_list(in).num_edges() == 15);
    CHECK(p.err.find("n=10") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"generate", "wheel", "--n", "5"}).code == cli::kUsageError);
    CHECK(run({"generate", "random-regular", "--n", "5", "--d", "3"}).code == cli::kUsageError);
    CHECK(run({"generate", "cycle", "--n", "x"}).code == cli::kUsageError);
    CHECK(run({"analyze", "/nonexistent.el"}).code == cli::kUsageError);
    CHECK(run({"generate", "petersen", "--bogus"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze reports") {
    run({"generate", "petersen", "--out", tmp("p.el")});
    const auto r = run({"analyze", tmp("p.el"), "--g", "5", "--deterministic"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["girth"]["value"] == 5);
    CHECK(j["diameter"]["value"] == 2);
    CHECK(j["spectral"]["lambda2"].get<double>() == doctest::Approx(2.0 / 3));
    CHECK(j["cheeger"]["mode"] == "exact");
    CHECK(j["cheeger"]["value"] == 1.0);
    CHECK(j["cycle_table"]["rows"].empty());
    CHECK(j["lll"]["delta_max_feasible"].get<double>() == doctest::Approx(0.375));
    CHECK_FALSE(j.contains("generated_at"));
    CHECK(j["schema_version"] == 1);

    run({"generate", "cycle", "--n", "6", "--out", tmp("c6.el")});
    const auto c6 = json::parse(run({"analyze", tmp("c6.el"), "--g", "6", "--deterministic"}).out);
    CHECK(c6["lll"]["delta_max_feasible"].get<double>() == doctest::Approx(0.25));

    run({"generate", "complete", "--n", "4", "--out", tmp("k4.el")});
    const auto k4 = json::parse(run({"analyze", tmp("k4.el"), "--g", "5", "--deterministic"}).out);
    CHECK(k4["lll"]["delta_max_feasible"].get<double>() ==
          doctest::Approx(std::min(0.375 * std::pow(3.0, -1.0 / 3), 0.375 * std::pow(3.0, -0.25))));
    const auto rows = k4["cycle_table"]["rows"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["k"] == 3);
    CHECK(rows[0]["max_count"] == 3);
    CHECK(rows[0]["spectral_bound"].get<double>() == doctest::Approx(7.75));
    CHECK(rows[0]["within_bound"] == true);

    const auto timed = json::parse(run({"analyze", tmp("p.el")}).out);
    CHECK(timed.contains("generated_at"));
}

TEST_CASE("analyze on larger and irregular graphs") {
    run({"generate", "random-regular", "--n", "60", "--d", "4", "--seed", "2", "--out", tmp("r60.el")});
    const auto j = json::parse(run({"analyze", tmp("r60.el"), "--deterministic"}).out);
    CHECK(j["cheeger"]["mode"] == "interval");
    CHECK(j["cheeger"]["lower"].get<double>() <= j["cheeger"]["upper"].get<double>());

    run({"generate", "path", "--n", "5", "--out", tmp("p5.el")});
    const auto p = run({"analyze", tmp("p5.el"), "--deterministic"});
    CHECK(p.code == 0);
    const auto pj = json::parse(p.out);
    CHECK(pj["spectral"].is_null());
    CHECK(pj["girth"]["infinite"] == true);
    CHECK_FALSE(pj["warnings"].empty());
}

TEST_CASE("sparsify and verify round trip") {
    run({"generate", "random-regular", "--n", "200", "--d", "8", "--seed", "3", "--out", tmp("g.el")});
    const auto s = run({"sparsify", tmp("g.el"), "--g", "5", "--delta", "0.5", "--seed", "4", "--out", tmp("h.el"),
                        "--json", tmp("s.json"), "--deterministic"});
    CHECK(s.code == 0);
    const auto j = json::parse(slurp(tmp("s.json")));
    CHECK(j["sparsify"]["certified"]["girth_certified"] == true);
    const auto& hg = j["sparsify"]["girth"];
    CHECK((hg["infinite"] == true || hg["value"].get<int>() >= 5));
    for (const char* key : {"girth", "rounds", "resamples_by_kind", "certified", "delta", "g", "s_max", "seed"})
        CHECK(j["sparsify"].contains(key));

    const auto v = run({"verify", tmp("g.el"), tmp("h.el"), "--delta", "0.5", "--deterministic"});
    CHECK(v.code == 0);
    const auto vj = json::parse(v.out);
    CHECK(vj["boundary_audit"]["pass"] == true);
    CHECK(vj["pass"] == true);

    const auto self = run({"verify", tmp("g.el"), tmp("g.el"), "--delta", "2", "--deterministic"});
    CHECK(self.code == 0);
}

TEST_CASE("sparsify exit codes") {
    run({"generate", "complete", "--n", "9", "--out", tmp("k9.el")});
    CHECK(run({"sparsify", tmp("k9.el"), "--g", "4", "--delta", "5"}).code == cli::kUsageError);
    CHECK(run({"sparsify", tmp("k9.el"), "--g", "4", "--delta", "4", "--max-rounds", "0"}).code ==
          cli::kBudgetExhausted);
    CHECK(run({"sparsify", tmp("k9.el"), "--g", "4"}).code == cli::kUsageError);
}

TEST_CASE("verify failures") {
    run({"generate", "petersen", "--out", tmp("pv.el")});
    run({"generate", "complete", "--n", "10", "--out", tmp("k10.el")});
    CHECK(run({"verify", tmp("pv.el"), tmp("k10.el"), "--delta", "1"}).code == cli::kVerificationFailure);

    // K_65 without the edges at vertex 0, with a substantive delta
    const Graph k = complete_graph(65);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (const auto& e : k.edges())
        if (e.u != 0) kept.emplace_back(e.u, e.v);
    write_edge_list_file(tmp("k65.el"), k);
    write_edge_list_file(tmp("k65-0.el"), Graph::from_edges(65, kept));
    const auto r = run({"verify", tmp("k65.el"), tmp("k65-0.el"), "--delta", "32", "--s-max", "2",
                        "--deterministic"});
    CHECK(r.code == cli::kVerificationFailure);
    const auto j = json::parse(r.out);
    CHECK(j["boundary_audit"]["worst"]["set"] == json::array({0}));
}

TEST_CASE("deterministic reports are byte identical") {
    run({"generate", "random-regular", "--n", "80", "--d", "6", "--seed", "5", "--out", tmp("d.el")});
    const auto a = run({"sparsify", tmp("d.el"), "--g", "5", "--delta", "0.5", "--seed", "9", "--deterministic"});
    const auto b = run({"sparsify", tmp("d.el"), "--g", "5", "--delta", "0.5", "--seed", "9", "--deterministic"});
    CHECK(a.out == b.out);
    const auto x = run({"analyze", tmp("d.el"), "--deterministic"});
    const auto y = run({"analyze", tmp("d.el"), "--deterministic"});
    CHECK(x.out == y.out);
}
