#include "girthspan/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace girthspan {

Variable arc_variable(const Graph& g, Vertex from, Vertex to) {
    const auto e = g.find_edge(from, to);
    if (!e) throw GraphError("no edge between " + std::to_string(from) + " and " + std::to_string(to));
    return arc_variable(*e, from < to ? 0 : 1);
}

Orientation::Orientation(std::size_t edges, double probability, Seed seed)
    : present_(2 * edges, 0), probability_(probability), rng_(seed) {
    for (Variable x = 0; x < present_.size(); ++x) resample(x);
}

std::size_t Orientation::arc_count() const {
    return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1));
}

namespace {

int require_degree(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d || *d < 1) throw std::invalid_argument("the random subgraph model needs a regular graph");
    return *d;
}

}  // namespace

Orientation sample_orientation(const Graph& g, double delta, Seed seed) {
    const int d = require_degree(g);
    const double p = delta / d;
    if (!(p >= 0.0 && p <= 0.5)) {
        throw std::invalid_argument("sample_orientation needs 0 <= delta/d <= 1/2 (delta=" +
                                    std::to_string(delta) + ", d=" + std::to_string(d) + ")");
    }
    return Orientation(g.num_edges(), p, seed);
}

Graph undirect(const Graph& g, const Orientation& d) {
    if (d.num_variables() != 2 * g.num_edges()) {
        throw std::invalid_argument("orientation does not match the graph");
    }
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
        if (d.edge_present(e)) kept.emplace_back(g.edge(e).u, g.edge(e).v);
    }
    return Graph::from_edges(g.num_vertices(), kept);
}

bool event_cycle_holds(const Graph& g, const Orientation& d, const Cycle& c) {
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto e = g.find_edge(vs[i], vs[(i + 1) % vs.size()]);
        if (!e) throw GraphError("cycle is not a cycle of the graph");
        if (!d.edge_present(*e)) return false;
    }
    return true;
}

std::int64_t out_boundary(const Graph& g, const Orientation& d, const VertexSet& s) {
    std::int64_t count = 0;
    for (Vertex u : s.members()) {
        const auto nb = g.neighbors(u);
        const auto ids = g.incident_edges(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (!s.contains(nb[i]) && d.present(arc_variable(ids[i], u < nb[i] ? 0 : 1))) ++count;
        }
    }
    return count;
}

bool event_set_holds(const Graph& g, const Orientation& d, const VertexSet& s, double delta, int deg) {
    if (s.empty()) throw std::invalid_argument("set events need a nonempty set");
    const double threshold = set_event_threshold(edge_boundary(g, s), s.size(), deg, delta);
    return static_cast<double>(out_boundary(g, d, s)) <= threshold;
}

std::string_view to_string(EventKind k) { return k == EventKind::cycle ? "cycle" : "set"; }

std::string_view to_string(SetAuditMode m) {
    return m == SetAuditMode::vacuous ? "vacuous" : "enumerated";
}

EventRecord make_cycle_event(const Graph& g, const Cycle& c, int d, double delta) {
    EventRecord ev;
    ev.kind = EventKind::cycle;
    ev.vertices = c.vertices();
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto e = g.find_edge(vs[i], vs[(i + 1) % vs.size()]);
        if (!e) throw GraphError("cycle is not a cycle of the graph");
        ev.vbl.push_back(arc_variable(*e, 0));
        ev.vbl.push_back(arc_variable(*e, 1));
    }
    const double r = 4.0 * delta / d;
    ev.x_value = (r > 0.0 && r < 1.0) ? x_cycle(d, delta, static_cast<int>(vs.size())) : 1.0;
    return ev;
}

EventRecord make_set_event(const Graph& g, std::span<const Vertex> members, int d, double delta) {
    if (members.empty()) throw std::invalid_argument("set events need a nonempty set");
    EventRecord ev;
    ev.kind = EventKind::set;
    ev.vertices.assign(members.begin(), members.end());
    std::sort(ev.vertices.begin(), ev.vertices.end());
    const VertexSet s(g.num_vertices(), ev.vertices);
    std::int64_t b = 0;
    for (Vertex u : ev.vertices) {
        const auto nb = g.neighbors(u);
        const auto ids = g.incident_edges(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (s.contains(nb[i])) continue;
            ++b;
            ev.vbl.push_back(arc_variable(ids[i], u < nb[i] ? 0 : 1));
        }
    }
    const auto size = static_cast<int>(ev.vertices.size());
    ev.threshold = set_event_threshold(b, size, d, delta);
    ev.x_value = x_set(d, size);
    return ev;
}

bool event_holds(const EventRecord& e, const Orientation& d) {
    if (e.kind == EventKind::cycle) {
        for (std::size_t i = 0; i < e.vbl.size(); i += 2) {
            if (!d.present(e.vbl[i]) && !d.present(e.vbl[i + 1])) return false;
        }
        return true;
    }
    std::int64_t out = 0;
    for (Variable x : e.vbl) out += d.present(x);
    return static_cast<double>(out) <= e.threshold;
}

namespace {

// Set events that can hold at all: connected, |S| <= s_max, threshold >= 0.
std::vector<EventRecord> live_set_events(const Graph& g, int d, const SparsifyParams& params) {
    std::vector<EventRecord> out;
    std::size_t seen = 0;
    VertexSet scratch(g.num_vertices());
    const int s_max = std::min(params.s_max, g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for_each_connected_set(
            g, v, s_max,
            [&](std::span<const Vertex> members) {
                if (++seen > params.limits.max_items) {
                    throw ResourceLimitError("set-event enumeration exceeded " +
                                             std::to_string(params.limits.max_items) + " sets");
                }
                for (Vertex u : members) scratch.insert(u);
                const std::int64_t b = edge_boundary(g, members, scratch);
                for (Vertex u : members) scratch.erase(u);
                if (set_event_threshold(b, static_cast<std::int64_t>(members.size()), d, params.delta) >= 0.0) {
                    out.push_back(make_set_event(g, members, d, params.delta));
                }
            },
            true, params.limits);
    }
    std::sort(out.begin(), out.end(),
              [](const EventRecord& a, const EventRecord& b) { return a.vertices < b.vertices; });
    return out;
}

std::map<int, std::uint64_t> per_vertex_maxima(const Graph& g, const CycleSet& cycles) {
    std::map<int, std::vector<std::uint64_t>> tallies;
    for (const Cycle& c : cycles) {
        auto& row = tallies[static_cast<int>(c.length())];
        row.resize(static_cast<std::size_t>(g.num_vertices()), 0);
        for (Vertex v : c.vertices()) ++row[v];
    }
    std::map<int, std::uint64_t> out;
    for (const auto& [k, row] : tallies) out[k] = *std::max_element(row.begin(), row.end());
    return out;
}

}  // namespace

SparsifyOutcome moser_tardos_sparsify(const Graph& g, const SparsifyParams& params) {
    const int d = require_degree(g);
    if (params.g < 3) throw std::invalid_argument("girth target must be at least 3");
    if (params.s_max < 1) throw std::invalid_argument("s_max must be at least 1");
    if (!(params.delta >= 0.0) || 2.0 * params.delta > d) {
        throw std::invalid_argument("sparsify needs 0 <= delta <= d/2");
    }
    if (!is_connected(g)) throw std::invalid_argument("sparsify needs a connected graph");

    SparsifyOutcome out;
    const CycleSet cycles = enumerate_short_cycles(g, params.g, params.limits);
    out.precheck = lll_condition_check(d, params.delta, params.g, per_vertex_maxima(g, cycles),
                                       g.num_vertices());

    std::vector<EventRecord> events;
    events.reserve(cycles.size());
    for (const Cycle& c : cycles) events.push_back(make_cycle_event(g, c, d, params.delta));
    out.cycle_events = events.size();
    if (set_events_vacuous(d, params.delta)) {
        out.set_mode = SetAuditMode::vacuous;
    } else {
        out.set_mode = SetAuditMode::enumerated;
        auto sets = live_set_events(g, d, params);
        out.set_events = sets.size();
        std::move(sets.begin(), sets.end(), std::back_inserter(events));
    }
    for (const EventRecord& e : events) {
        out.expected_resample_bound +=
            e.x_value < 1.0 ? e.x_value / (1.0 - e.x_value) : std::numeric_limits<double>::infinity();
    }

    // variable -> events, CSR
    const std::size_t num_vars = 2 * g.num_edges();
    std::vector<std::size_t> offsets(num_vars + 1, 0);
    for (const EventRecord& e : events)
        for (Variable x : e.vbl) ++offsets[x + 1];
    for (std::size_t i = 0; i < num_vars; ++i) offsets[i + 1] += offsets[i];
    std::vector<std::uint32_t> dependents(offsets.back());
    {
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (std::uint32_t id = 0; id < events.size(); ++id)
            for (Variable x : events[id].vbl) dependents[fill[x]++] = id;
    }

    Orientation arcs = sample_orientation(g, params.delta, params.seed);
    std::vector<std::uint8_t> holds(events.size(), 0);
    std::set<std::uint32_t> violated;
    auto refresh = [&](std::uint32_t id) {
        const bool now = event_holds(events[id], arcs);
        if (now != static_cast<bool>(holds[id])) {
            holds[id] = now;
            if (now) {
                violated.insert(id);
            } else {
                violated.erase(id);
            }
        }
    };
    for (std::uint32_t id = 0; id < events.size(); ++id) refresh(id);
    out.initial_violations = violated.size();

    while (!violated.empty()) {
        if (out.rounds >= params.max_rounds) {
            out.budget_exhausted = true;
            break;
        }
        const std::uint32_t id = *violated.begin();
        const EventRecord& ev = events[id];
        for (Variable x : ev.vbl) arcs.resample(x);
        ++out.rounds;
        ++(ev.kind == EventKind::cycle ? out.cycle_resamples : out.set_resamples);
        if (params.full_rescan) {
            for (std::uint32_t other = 0; other < events.size(); ++other) refresh(other);
        } else {
            for (Variable x : ev.vbl)
                for (std::size_t i = offsets[x]; i < offsets[x + 1]; ++i) refresh(dependents[i]);
        }
    }

    out.h = undirect(g, arcs);
    out.girth = girth(out.h);
    const bool clean = !out.budget_exhausted && violated.empty();
    out.girth_certified = clean && (!out.girth || *out.girth >= params.g);
    out.sets_audited_to_s_max = clean;
    return out;
}

}  // namespace girthspan
