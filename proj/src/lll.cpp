#include "girthspan/lll.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace girthspan {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

void require_degree(int d) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
}

}  // namespace

double boundary_allowance(int d) {
    require_degree(d);
    return 2.0 * std::log(static_cast<double>(d)) + 4.0;
}

double set_event_threshold(std::int64_t b, std::int64_t s, int d, double delta) {
    return delta / (2.0 * d) * static_cast<double>(b) - boundary_allowance(d) * static_cast<double>(s);
}

bool set_events_vacuous(int d, double delta) { return delta / 2.0 < boundary_allowance(d); }

CycleProbability prob_cycle_bound(int d, double delta, int k) {
    require_degree(d);
    const double q = delta / d;
    return {std::pow(2.0 * q, k), std::pow(1.0 - (1.0 - q) * (1.0 - q), k)};
}

SetTail prob_set_tail(std::int64_t b, std::int64_t s, int d, double delta) {
    require_degree(d);
    if (b < 0 || s < 1) throw std::invalid_argument("prob_set_tail needs b >= 0 and s >= 1");
    SetTail out;
    out.threshold = set_event_threshold(b, s, d, delta);
    const Real bound = boost::multiprecision::pow(Real(10) * d, -s);
    out.bound = static_cast<double>(bound);

    Real exact = 0;
    if (out.threshold >= 0.0) {
        const auto top = std::min<std::int64_t>(b, static_cast<std::int64_t>(std::floor(out.threshold)));
        const Real p = Real(delta) / d;
        if (p <= 0) {
            exact = 1;
        } else if (p >= 1) {
            exact = top >= b ? 1 : 0;
        } else {
            // pmf(k+1) = pmf(k) (b-k)/(k+1) p/(1-p)
            const Real odds = p / (1 - p);
            Real pmf = boost::multiprecision::pow(1 - p, b);
            for (std::int64_t k = 0; k <= top; ++k) {
                exact += pmf;
                pmf *= Real(b - k) / Real(k + 1) * odds;
            }
        }
    }
    out.exact = static_cast<double>(exact);
    out.within_bound = exact <= bound;
    return out;
}

double x_set(int d, int s) {
    require_degree(d);
    return std::pow(8.0 * d, -s);
}

double x_cycle(int d, double delta, int k) {
    require_degree(d);
    const double r = 4.0 * delta / d;
    if (r >= 1.0 || r <= 0.0) {
        throw std::domain_error("cycle assignment (4 delta/d)^k needs 0 < 4 delta/d < 1");
    }
    return std::pow(r, k);
}

double choose_delta(double lambda2) {
    if (!(lambda2 > 0.0 && lambda2 < 1.0)) {
        throw std::domain_error("choose_delta needs 0 < lambda2 < 1");
    }
    return 1.0 / (16.0 * (1.0 - lambda2));
}

bool cycle_hypothesis_holds(int d, double delta, const std::map<int, std::uint64_t>& max_counts) {
    for (const auto& [k, count] : max_counts) {
        if (static_cast<double>(count) > std::pow(d / (8.0 * delta), k)) return false;
    }
    return true;
}

double delta_max_feasible(int d, const std::map<int, std::uint64_t>& max_counts) {
    double best = d / 8.0;
    for (const auto& [k, count] : max_counts) {
        if (count > 0) best = std::min(best, d / 8.0 * std::pow(static_cast<double>(count), -1.0 / k));
    }
    return best;
}

LllCheck lll_condition_check(int d, double delta, int g, const std::map<int, std::uint64_t>& max_counts,
                             int n) {
    require_degree(d);
    LllCheck out;
    out.sets_vacuous = set_events_vacuous(d, delta);

    std::map<int, std::uint64_t> cycles;
    for (const auto& [k, count] : max_counts) {
        if (k >= 3 && k < g && count > 0) cycles[k] = count;
    }
    const double r = 4.0 * delta / d;
    out.x_in_range = cycles.empty() || (r > 0.0 && r < 1.0);
    if (!out.x_in_range) {
        out.pass = false;
        out.margin = 0.0;
        out.worst_template = "cycle assignment outside (0,1)";
        return out;
    }

    double log_cycle = 0.0;
    for (const auto& [k, count] : cycles) {
        log_cycle += static_cast<double>(count) * std::log1p(-std::pow(r, k));
    }
    // (4d)^(s-1) sets of size s, each factor 1 - (8d)^-s.  Written as
    // -(2^-s / 4d) * (-log1p(-y) / y) to stay finite for large s.
    double log_set = 0.0;
    for (int s = 1; s <= std::min(n, 1100); ++s) {
        const double y = std::pow(8.0 * d, -s);
        const double ratio = y > 0.0 ? -std::log1p(-y) / y : 1.0;
        log_set -= std::ldexp(1.0, -s) / (4.0 * d) * ratio;
    }
    out.cycle_product = std::exp(log_cycle);
    out.set_product = std::exp(log_set);
    out.cycle_product_meets_target = log_cycle >= -0.25;
    out.set_product_meets_target = log_set >= -1.0 / (4.0 * d);
    const double log_vertex = log_cycle + log_set;

    // Each template's log(RHS/LHS); the ratio is geometric in the template size.
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& [k, count] : cycles) {
        // x (prod)^k / (2 delta/d)^k = (2 prod)^k
        const double log_ratio = k * (std::log(2.0) + log_vertex);
        if (log_ratio < worst) {
            worst = log_ratio;
            out.worst_template = "cycle k=" + std::to_string(k);
        }
    }
    if (!out.sets_vacuous) {
        // (8d)^-s (prod)^s / (10d)^-s = (1.25 prod)^s, extreme at s = 1 or s = n
        const double per_vertex = std::log(1.25) + log_vertex;
        const int s = per_vertex >= 0.0 ? 1 : std::max(n, 1);
        const double log_ratio = s * per_vertex;
        if (log_ratio < worst) {
            worst = log_ratio;
            out.worst_template = "set s=" + std::to_string(s);
        }
    }
    out.margin = std::exp(worst);
    out.pass = worst >= 0.0;
    if (out.worst_template.empty()) out.worst_template = "none";
    return out;
}

}  // namespace girthspan
