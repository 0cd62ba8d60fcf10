#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "girthspan/combinatorics.hpp"
#include "girthspan/graph.hpp"
#include "girthspan/lll.hpp"
#include "girthspan/random.hpp"

namespace girthspan {

using Variable = std::size_t;

/// Arc variable of edge e: direction 0 is u->v (u < v), direction 1 is v->u.
inline Variable arc_variable(EdgeId e, int direction) {
    return 2 * static_cast<Variable>(e) + static_cast<Variable>(direction);
}

/// Variable of the arc from -> to; throws when the two are not adjacent.
Variable arc_variable(const Graph& g, Vertex from, Vertex to);

/// The random digraph D: one Boolean per arc of G, present with probability
/// delta/d.  Each variable is drawn as u < delta/d for a fresh uniform u, so
/// for a fixed seed raising delta only ever adds arcs.
class Orientation {
public:
    Orientation(std::size_t edges, double probability, Seed seed);

    std::size_t num_variables() const { return present_.size(); }
    bool present(Variable x) const { return present_[x] != 0; }
    bool edge_present(EdgeId e) const { return present_[2 * e] || present_[2 * e + 1]; }
    double probability() const { return probability_; }
    std::size_t arc_count() const;

    /// Fresh draw for one variable from the internal stream.
    void resample(Variable x) { present_[x] = rng_.uniform() < probability_; }
    void set(Variable x, bool value) { present_[x] = value; }

private:
    std::vector<std::uint8_t> present_;
    double probability_;
    Xoshiro256 rng_;
};

/// Samples all 2|E| arc variables of a d-regular G with probability delta/d.
/// Requires 0 <= delta/d <= 1/2.
Orientation sample_orientation(const Graph& g, double delta, Seed seed);

/// Spanning subgraph with {u,v} present iff at least one of its arcs is.
Graph undirect(const Graph& g, const Orientation& d);

bool event_cycle_holds(const Graph& g, const Orientation& d, const Cycle& c);

/// Out-arcs of S present in D.
std::int64_t out_boundary(const Graph& g, const Orientation& d, const VertexSet& s);

/// |out-arcs of S in D| <= (delta/2d) |bd_G S| - (2 ln d + 4) |S|.
bool event_set_holds(const Graph& g, const Orientation& d, const VertexSet& s, double delta, int deg);

enum class EventKind { cycle, set };

std::string_view to_string(EventKind k);

struct EventRecord {
    EventKind kind = EventKind::cycle;
    std::vector<Vertex> vertices;  // canonical cycle order, or sorted set members
    std::vector<Variable> vbl;     // cycles: both arcs per edge, in cycle order; sets: out-arcs
    double x_value = 0.0;
    double threshold = 0.0;  // set events only
};

EventRecord make_cycle_event(const Graph& g, const Cycle& c, int d, double delta);
EventRecord make_set_event(const Graph& g, std::span<const Vertex> members, int d, double delta);

/// Whether the event holds under D, using only its vbl variables.
bool event_holds(const EventRecord& e, const Orientation& d);

struct SparsifyParams {
    int g = 3;
    double delta = 1.0;
    int s_max = 6;
    Seed seed = 1;
    std::uint64_t max_rounds = 10'000'000;
    EnumerationLimits limits;
    bool full_rescan = false;  // re-evaluate every event after each resampling
};

enum class SetAuditMode { vacuous, enumerated };

std::string_view to_string(SetAuditMode m);

struct SparsifyOutcome {
    Graph h;
    std::uint64_t rounds = 0;
    std::uint64_t cycle_resamples = 0;
    std::uint64_t set_resamples = 0;
    bool girth_certified = false;
    bool sets_audited_to_s_max = false;
    bool budget_exhausted = false;
    SetAuditMode set_mode = SetAuditMode::vacuous;
    std::size_t cycle_events = 0;
    std::size_t set_events = 0;  // materialized set events (those that can hold)
    double expected_resample_bound = 0.0;  // sum of x/(1-x) over materialized events
    LllCheck precheck;
    std::optional<int> girth;  // girth of h
    std::size_t initial_violations = 0;
};

/// Moser-Tardos resampling over the short-cycle events and the connected-set
/// events up to s_max.  The lowest-indexed violated event (cycles first, then
/// sets, each in lexicographic order) is resampled each round.
SparsifyOutcome moser_tardos_sparsify(const Graph& g, const SparsifyParams& params);

}  // namespace girthspan
