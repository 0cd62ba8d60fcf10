#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace girthspan {

// Event-probability bounds and the local-lemma bookkeeping for the random
// subgraph model: every edge {u,v} of a d-regular G carries two independent
// arcs u->v and v->u, each present with probability delta/d; the edge survives
// when either arc does.  Logarithms are natural throughout.

/// 2 ln d + 4, the per-vertex allowance in the boundary inequality.
double boundary_allowance(int d);

/// (delta / 2d) b - (2 ln d + 4) s: a set event on S with |S| = s and
/// |bd_G S| = b holds when at most this many out-arcs leave S.
double set_event_threshold(std::int64_t b, std::int64_t s, int d, double delta);

/// True when no set event can ever hold: delta/2 < 2 ln d + 4 makes the
/// threshold negative for every S, since |bd_G S| <= d |S|.
bool set_events_vacuous(int d, double delta);

struct CycleProbability {
    double bound = 0.0;  // (2 delta/d)^k
    double exact = 0.0;  // (1 - (1 - delta/d)^2)^k
};

CycleProbability prob_cycle_bound(int d, double delta, int k);

struct SetTail {
    double exact = 0.0;        // P(Binomial(b, delta/d) <= threshold)
    double bound = 0.0;        // (10d)^-s
    bool within_bound = true;  // exact <= bound, decided in 50-digit arithmetic
    double threshold = 0.0;
};

/// Exact lower tail of the out-arc count of a set with boundary b and size s.
SetTail prob_set_tail(std::int64_t b, std::int64_t s, int d, double delta);

/// x(A_S) = (8d)^-s.
double x_set(int d, int s);
/// x(A_C) = (4 delta/d)^k; throws when 4 delta/d >= 1.
double x_cycle(int d, double delta, int k);

/// (1 - lambda2)^-1 / 16; throws unless 0 < lambda2 < 1.
double choose_delta(double lambda2);

/// Per-vertex cycle-count hypothesis: count_k <= (d / 8 delta)^k for every k.
bool cycle_hypothesis_holds(int d, double delta, const std::map<int, std::uint64_t>& max_counts);

/// Largest delta satisfying the hypothesis: min_k (d/8) count_k^(-1/k),
/// d/8 when no short cycles are present.
double delta_max_feasible(int d, const std::map<int, std::uint64_t>& max_counts);

struct LllCheck {
    bool pass = false;
    double margin = 0.0;  // min over event templates of RHS / LHS; +inf when no template can occur
    std::string worst_template;
    double cycle_product = 1.0;  // prod over cycles through a vertex of (1 - x)
    double set_product = 1.0;    // prod over connected sets through a vertex of (1 - x)
    bool cycle_product_meets_target = false;  // cycle_product >= e^-1/4
    bool set_product_meets_target = false;    // set_product >= e^-1/(4d)
    bool sets_vacuous = false;
    bool x_in_range = true;  // 4 delta/d < 1 whenever cycle events exist
};

/// Numerical local-lemma check for the event family {cycles shorter than g}
/// plus {all connected sets}.  For an event touching m vertices, the product
/// over dependent events is bounded below by (cycle_product * set_product)^m,
/// using the actual per-vertex cycle maxima and (4d)^(s-1) sets of size s
/// through a vertex.  Event probabilities use (2 delta/d)^k for cycles and
/// (10d)^-s for sets, or 0 when set events are vacuous.
LllCheck lll_condition_check(int d, double delta, int g, const std::map<int, std::uint64_t>& max_counts,
                             int n);

}  // namespace girthspan
