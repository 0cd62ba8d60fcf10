#include <doctest.h>

#include <cmath>
#include <set>

#include "girthspan/combinatorics.hpp"
#include "girthspan/generators.hpp"
#include "girthspan/sparsify.hpp"
#include "oracles.hpp"

using namespace girthspan;

namespace {

// 3 sigma of a binomial frequency
double three_sigma(double p, double trials) { return 3.0 * std::sqrt(p * (1 - p) / trials); }

}  // namespace

TEST_CASE("arc variables are edge id times two plus direction") {
    const Graph g = petersen_graph();
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
        const Edge ed = g.edge(e);
        CHECK(arc_variable(g, ed.u, ed.v) == arc_variable(e, 0));
        CHECK(arc_variable(g, ed.v, ed.u) == arc_variable(e, 1));
        CHECK(arc_variable(e, 1) == 2 * static_cast<Variable>(e) + 1);
    }
    CHECK_THROWS(arc_variable(g, 0, 7));
}

TEST_CASE("orientation sampling") {
    const Graph g = random_regular(50, 4, 1);
    const Orientation d = sample_orientation(g, 1.0, 9);
    CHECK(d.num_variables() == 2 * g.num_edges());
    CHECK(d.probability() == doctest::Approx(0.25));
    const Orientation empty = sample_orientation(g, 0.0, 9);
    CHECK(empty.arc_count() == 0);
    CHECK(undirect(g, empty).num_edges() == 0);
    CHECK_THROWS(sample_orientation(g, 2.5, 1));
    CHECK_THROWS(sample_orientation(g, -0.1, 1));
    CHECK_THROWS(sample_orientation(path_graph(4), 0.5, 1));
    const Orientation a = sample_orientation(g, 1.0, 9);
    for (Variable x = 0; x < d.num_variables(); ++x) CHECK(a.present(x) == d.present(x));
}

TEST_CASE("arc count mean within three sigma") {
    const Graph g = random_regular(20, 4, 2);
    const double p = 1.5 / 4;
    const double vars = 2.0 * g.num_edges();
    double total = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) total += static_cast<double>(sample_orientation(g, 1.5, 1000 + t).arc_count());
    const double mean = total / trials;
    const double sigma_of_mean = std::sqrt(vars * p * (1 - p) / trials);
    CHECK(std::abs(mean - vars * p) <= 3 * sigma_of_mean);
}

TEST_CASE("single edge at one half") {
    int fwd = 0, bwd = 0, edge = 0;
    const int trials = 10000;
    Orientation d(2, 0.5, 77);
    for (int t = 0; t < trials; ++t) {
        d.resample(0);
        d.resample(1);
        fwd += d.present(0);
        bwd += d.present(1);
        edge += d.edge_present(0);
    }
    CHECK(std::abs(fwd / double(trials) - 0.5) <= 0.02);
    CHECK(std::abs(bwd / double(trials) - 0.5) <= 0.02);
    CHECK(std::abs(edge / double(trials) - 0.75) <= three_sigma(0.75, trials));
}

TEST_CASE("undirect") {
    const Graph g = petersen_graph();
    Orientation full(g.num_edges(), 0.5, 1);
    for (Variable x = 0; x < full.num_variables(); ++x) full.set(x, true);
    CHECK(undirect(g, full) == g);
    Orientation one(g.num_edges(), 0.5, 1);
    for (Variable x = 0; x < one.num_variables(); ++x) one.set(x, false);
    one.set(arc_variable(4, 1), true);
    const Graph h = undirect(g, one);
    CHECK(h.num_edges() == 1);
    CHECK(h.edge(0) == g.edge(4));
    CHECK(g.is_spanning_supergraph_of(undirect(g, sample_orientation(g, 1.0, 5))));
}

TEST_CASE("edge survival frequency matches inclusion-exclusion") {
    const Graph g = cycle_graph(10);
    const double q = 0.3;
    const int trials = 20000;
    std::vector<int> hits(g.num_edges(), 0);
    for (int t = 0; t < trials; ++t) {
        const auto d = sample_orientation(g, 2 * q, 5000 + t);
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) hits[e] += d.edge_present(e);
    }
    const double p = 1 - (1 - q) * (1 - q);
    for (int h : hits) CHECK(std::abs(h / double(trials) - p) <= three_sigma(p, trials) * 1.5);
}

TEST_CASE("monotone coupling in delta") {
    const Graph g = random_regular(40, 6, 3);
    for (Seed s = 1; s <= 5; ++s) {
        const Orientation lo = sample_orientation(g, 0.5, s);
        const Orientation mid = sample_orientation(g, 1.5, s);
        const Orientation hi = sample_orientation(g, 3.0, s);
        for (Variable x = 0; x < lo.num_variables(); ++x) {
            if (lo.present(x)) CHECK(mid.present(x));
            if (mid.present(x)) CHECK(hi.present(x));
        }
    }
}

TEST_CASE("cycle events") {
    const Graph g = complete_graph(4);
    const Cycle tri = Cycle::canonical({0, 1, 2});
    Orientation d(g.num_edges(), 0.5, 1);
    for (Variable x = 0; x < d.num_variables(); ++x) d.set(x, true);
    CHECK(event_cycle_holds(g, d, tri));
    const EdgeId e = *g.find_edge(1, 2);
    d.set(arc_variable(e, 0), false);
    CHECK(event_cycle_holds(g, d, tri));
    d.set(arc_variable(e, 1), false);
    CHECK_FALSE(event_cycle_holds(g, d, tri));

    const auto rec = make_cycle_event(g, tri, 3, 0.5);
    CHECK(rec.kind == EventKind::cycle);
    CHECK(rec.vbl.size() == 6);
    CHECK(std::set<Variable>(rec.vbl.begin(), rec.vbl.end()).size() == 6);
    CHECK(rec.x_value == doctest::Approx(std::pow(4 * 0.5 / 3, 3)));
    CHECK_THROWS(make_cycle_event(cycle_graph(5), Cycle::canonical({0, 1, 3}), 2, 0.1));
}

TEST_CASE("cycle event frequency within three sigma of exact") {
    const Graph g = cycle_graph(5);
    const Cycle c = Cycle::canonical({0, 1, 2, 3, 4});
    const double delta = 1.0;  // q = 1/2
    const int trials = 100000;
    int hits = 0;
    Orientation d(g.num_edges(), 0.5, 4242);
    for (int t = 0; t < trials; ++t) {
        for (Variable x = 0; x < d.num_variables(); ++x) d.resample(x);
        hits += event_cycle_holds(g, d, c);
    }
    const auto pr = prob_cycle_bound(2, delta, 5);
    CHECK(std::abs(hits / double(trials) - pr.exact) <= three_sigma(pr.exact, trials));
    CHECK(hits / double(trials) <= pr.bound + three_sigma(pr.exact, trials));
}

TEST_CASE("set events") {
    const Graph g = complete_graph(6);
    const std::vector<Vertex> members{0, 2};
    const auto rec = make_set_event(g, members, 5, 2.0);
    CHECK(rec.kind == EventKind::set);
    CHECK(rec.vbl.size() == 8);
    for (Variable x : rec.vbl) {
        const Edge e = g.edge(static_cast<EdgeId>(x / 2));
        const Vertex from = x % 2 == 0 ? e.u : e.v;
        const Vertex to = x % 2 == 0 ? e.v : e.u;
        CHECK((from == 0 || from == 2));
        CHECK((to != 0 && to != 2));
    }
    CHECK(rec.x_value == doctest::Approx(std::pow(40.0, -2)));
    CHECK(rec.threshold == doctest::Approx(set_event_threshold(8, 2, 5, 2.0)));
    CHECK_THROWS(make_set_event(g, std::vector<Vertex>{}, 5, 2.0));

    // negative threshold: never holds
    Orientation none(g.num_edges(), 0.5, 1);
    for (Variable x = 0; x < none.num_variables(); ++x) none.set(x, false);
    CHECK_FALSE(event_set_holds(g, none, VertexSet(6, members), 2.0, 5));
    CHECK_FALSE(event_holds(rec, none));
}

TEST_CASE("set events with a positive threshold") {
    const Graph g = complete_graph(65);
    const int d = 64;
    const double delta = 32;
    const std::vector<Vertex> members{7};
    const VertexSet s(65, members);
    Orientation o(g.num_edges(), 0.5, 3);
    for (Variable x = 0; x < o.num_variables(); ++x) o.set(x, false);
    // threshold 16 - 12.3 = 3.68: three out-arcs hold the event, four do not
    int placed = 0;
    for (EdgeId e : g.incident_edges(7)) {
        if (placed == 3) break;
        const Edge ed = g.edge(e);
        o.set(arc_variable(e, ed.u == 7 ? 0 : 1), true);
        ++placed;
    }
    CHECK(out_boundary(g, o, s) == 3);
    CHECK(event_set_holds(g, o, s, delta, d));
    const auto rec = make_set_event(g, members, d, delta);
    CHECK(event_holds(rec, o));
    // in-arcs never count
    for (EdgeId e : g.incident_edges(7)) {
        const Edge ed = g.edge(e);
        o.set(arc_variable(e, ed.u == 7 ? 1 : 0), true);
    }
    CHECK(event_set_holds(g, o, s, delta, d));
    const EdgeId fourth = g.incident_edges(7)[3];
    o.set(arc_variable(fourth, g.edge(fourth).u == 7 ? 0 : 1), true);
    CHECK(out_boundary(g, o, s) == 4);
    CHECK_FALSE(event_set_holds(g, o, s, delta, d));
}

TEST_CASE("set event frequency matches the exact binomial tail") {
    const Graph g = complete_graph(65);
    const int d = 64;
    const double delta = 32;
    const std::vector<Vertex> members{0};
    const auto rec = make_set_event(g, members, d, delta);
    // P(Bin(64, 1/2) <= 3) is about 2.5e-15, so 1e5 draws should see nothing
    const auto tail = prob_set_tail(64, 1, d, delta);
    CHECK(tail.exact == doctest::Approx(oracle::binomial_lower_tail(64, 0.5, tail.threshold)).epsilon(1e-9));
    Orientation o(g.num_edges(), 0.5, 8);
    int hits = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        for (Variable x : rec.vbl) o.resample(x);
        hits += event_holds(rec, o);
    }
    CHECK(std::abs(hits / double(trials) - tail.exact) <= three_sigma(tail.exact, trials));
}

TEST_CASE("vbl minimality: flipping outside vbl never changes an event") {
    const Graph g = random_regular(30, 4, 5);
    const auto cycles = enumerate_short_cycles(g, 6);
    REQUIRE_FALSE(cycles.empty());
    std::vector<EventRecord> events;
    for (std::size_t i = 0; i < std::min<std::size_t>(cycles.size(), 10); ++i)
        events.push_back(make_cycle_event(g, cycles[i], 4, 0.5));
    for (const auto& s : connected_sets_through(g, 3, 3)) events.push_back(make_set_event(g, s, 4, 2.0));
    Xoshiro256 rng(1);
    Orientation o = sample_orientation(g, 1.0, 3);
    for (const auto& ev : events) {
        const std::set<Variable> inside(ev.vbl.begin(), ev.vbl.end());
        for (int trial = 0; trial < 50; ++trial) {
            const bool before = ev.kind == EventKind::cycle
                                    ? event_cycle_holds(g, o, Cycle::canonical(ev.vertices))
                                    : event_set_holds(g, o, VertexSet(30, ev.vertices), 2.0, 4);
            CHECK(event_holds(ev, o) == before);
            Variable x = rng.below(o.num_variables());
            if (inside.count(x)) continue;
            o.set(x, !o.present(x));
            CHECK(event_holds(ev, o) == before);
        }
    }
}

TEST_CASE("sparsify preconditions") {
    SparsifyParams p;
    CHECK_THROWS(moser_tardos_sparsify(path_graph(5), p));
    const Graph two = Graph::from_edges(6, std::vector<std::pair<Vertex, Vertex>>{
                                               {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS(moser_tardos_sparsify(two, p));
    p.delta = 2.0;
    CHECK_THROWS(moser_tardos_sparsify(petersen_graph(), p));
    p.delta = 1.0;
    p.g = 2;
    CHECK_THROWS(moser_tardos_sparsify(petersen_graph(), p));
    p.g = 4;
    p.s_max = 0;
    CHECK_THROWS(moser_tardos_sparsify(petersen_graph(), p));
}

TEST_CASE("sparsify on C8 with g=4 needs no resampling") {
    SparsifyParams p;
    p.g = 4;
    p.delta = 1.0;
    const auto out = moser_tardos_sparsify(cycle_graph(8), p);
    CHECK(out.rounds == 0);
    CHECK(out.cycle_events == 0);
    CHECK(out.girth_certified);
    CHECK(cycle_graph(8).is_spanning_supergraph_of(out.h));
}

TEST_CASE("sparsify with g=3, delta=d/2, s_max=1") {
    const Graph g = random_regular(30, 6, 2);
    SparsifyParams p;
    p.g = 3;
    p.delta = 3.0;
    p.s_max = 1;
    const auto out = moser_tardos_sparsify(g, p);
    CHECK(out.girth_certified);
    CHECK(out.sets_audited_to_s_max);
    CHECK(out.h.num_vertices() == 30);
    const Orientation o = sample_orientation(g, p.delta, p.seed);
    for (Vertex v = 0; v < 30; ++v) {
        CHECK_FALSE(event_set_holds(g, o, VertexSet(30, std::vector<Vertex>{v}), p.delta, 6));
    }
}

TEST_CASE("sparsify certifies girth and the audit replays event falsity") {
    for (Seed s = 1; s <= 5; ++s) {
        const Graph g = random_regular(200, 8, s);
        SparsifyParams p;
        p.g = 5;
        p.delta = 0.5;
        p.seed = s;
        const auto out = moser_tardos_sparsify(g, p);
        CHECK(out.girth_certified);
        CHECK(out.set_mode == SetAuditMode::vacuous);
        CHECK_FALSE(out.budget_exhausted);
        REQUIRE(girth(out.h).value_or(1000) >= 5);
        CHECK(out.girth == girth(out.h));
        CHECK(out.cycle_resamples + out.set_resamples == out.rounds);
        CHECK(g.is_spanning_supergraph_of(out.h));
    }
}

TEST_CASE("sparsify with substantive set events") {
    const Graph g = complete_graph(65);
    SparsifyParams p;
    p.g = 3;
    p.delta = 32;
    p.s_max = 2;
    p.seed = 4;
    const auto out = moser_tardos_sparsify(g, p);
    CHECK(out.set_mode == SetAuditMode::enumerated);
    CHECK(out.set_events > 0);
    CHECK(out.sets_audited_to_s_max);
    const double beta = boundary_allowance(64);
    for (Vertex v = 0; v < 65; ++v) {
        // |bd_H {v}| >= deg_H(v) >= out-degree > 16 - beta
        CHECK(out.h.degree_of(v) >= 16 - beta);
    }
}

TEST_CASE("sparsify is deterministic and incremental re-checking matches full rescans") {
    const Graph g = random_regular(120, 6, 8);
    SparsifyParams p;
    p.g = 5;
    p.delta = 0.5;
    p.seed = 17;
    const auto a = moser_tardos_sparsify(g, p);
    const auto b = moser_tardos_sparsify(g, p);
    CHECK(a.h == b.h);
    CHECK(a.rounds == b.rounds);
    p.full_rescan = true;
    const auto c = moser_tardos_sparsify(g, p);
    CHECK(c.h == a.h);
    CHECK(c.rounds == a.rounds);
}

TEST_CASE("sparsify budget exhaustion") {
    const Graph g = complete_graph(9);
    SparsifyParams p;
    p.g = 4;
    p.delta = 4.0;
    p.max_rounds = 0;
    const auto out = moser_tardos_sparsify(g, p);
    CHECK(out.budget_exhausted);
    CHECK_FALSE(out.girth_certified);
    CHECK_FALSE(out.sets_audited_to_s_max);
    CHECK(out.initial_violations > 0);
}
