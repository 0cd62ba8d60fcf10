#include "girthspan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "girthspan/combinatorics.hpp"
#include "girthspan/kernels.hpp"
#include "girthspan/lll.hpp"

namespace girthspan {

std::string_view to_string(CheegerMode m) { return m == CheegerMode::exact ? "exact" : "sweep_bound"; }

std::string_view to_string(AuditMode m) {
    switch (m) {
        case AuditMode::exhaustive: return "exhaustive";
        case AuditMode::connected_sets: return "connected_sets";
        case AuditMode::vacuous: return "vacuous";
    }
    return "unknown";
}

namespace {

std::vector<Vertex> mask_members(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1U) out.push_back(v);
    }
    return out;
}

int require_regular(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d || *d < 1) throw std::invalid_argument("expansion checks need a regular graph");
    return *d;
}

}  // namespace

CheegerResult cheeger_exact(const Graph& g, const CheegerOptions& options) {
    const int n = g.num_vertices();
    if (n > options.exact_max_n || n > kernels::kMaxMaskVertices) {
        throw ResourceLimitError("exact Cheeger constant limited to " +
                                 std::to_string(options.exact_max_n) + " vertices, got " +
                                 std::to_string(n));
    }
    if (n < 2) throw std::invalid_argument("Cheeger constant needs at least two vertices");
    const auto cut = kernels::omp::min_cut_ratio(g);
    CheegerResult out;
    out.mode = CheegerMode::exact;
    out.boundary = cut.boundary;
    out.value = static_cast<double>(cut.boundary) / static_cast<double>(cut.size);
    out.witness = mask_members(cut.mask);
    return out;
}

CheegerResult cheeger_sweep(const Graph& g, const SpectralOptions& options) {
    const int n = g.num_vertices();
    const auto pair = fiedler(g, options);
    if (pair.summary.disconnected) throw std::invalid_argument("sweep cut needs a connected graph");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return pair.vector[a] < pair.vector[b]; });

    VertexSet prefix(n);
    std::int64_t boundary = 0;
    std::int64_t best_b = 0;
    std::int64_t best_size = 0;
    int best_len = 0;
    for (int i = 1; i < n; ++i) {
        const Vertex v = order[i - 1];
        std::int64_t inside = 0;
        for (Vertex w : g.neighbors(v)) inside += prefix.contains(w);
        boundary += g.degree_of(v) - 2 * inside;
        prefix.insert(v);
        const std::int64_t small = std::min(i, n - i);
        if (best_size == 0 || boundary * best_size < best_b * small) {
            best_b = boundary;
            best_size = small;
            best_len = i;
        }
    }
    CheegerResult out;
    out.mode = CheegerMode::sweep_bound;
    out.boundary = best_b;
    out.value = static_cast<double>(best_b) / static_cast<double>(best_size);
    // report the smaller side
    if (2 * best_len <= n) {
        out.witness.assign(order.begin(), order.begin() + best_len);
    } else {
        out.witness.assign(order.begin() + best_len, order.end());
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

BoundaryAudit verify_theorem2_inequality(const Graph& g, const Graph& h, double delta, int s_max,
                                         const BoundaryAuditOptions& options) {
    if (!g.is_spanning_supergraph_of(h)) {
        throw std::invalid_argument("H is not a spanning subgraph of G");
    }
    const int d = require_regular(g);
    const int n = g.num_vertices();
    const double alpha = delta / (2.0 * d);
    const double beta = boundary_allowance(d);
    BoundaryAudit out;
    out.s_max = s_max;

    if (n <= options.exhaustive_max_n && n <= kernels::kMaxMaskVertices) {
        const auto best = kernels::omp::min_boundary_slack(g, h, alpha, beta);
        out.mode = AuditMode::exhaustive;
        out.s_max = n;
        out.sets_checked = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
        out.worst_slack = best.slack;
        out.worst_set = mask_members(best.mask);
        out.substantive = best.any_positive_rhs;
        out.pass = best.slack >= 0.0;
        return out;
    }

    out.worst_slack = std::numeric_limits<double>::infinity();
    auto consider = [&](std::span<const Vertex> members, std::int64_t bg, std::int64_t bh) {
        const double rhs = alpha * static_cast<double>(bg) - beta * static_cast<double>(members.size());
        const double slack = static_cast<double>(bh) - rhs;
        out.substantive = out.substantive || rhs > 0.0;
        ++out.sets_checked;
        std::vector<Vertex> sorted(members.begin(), members.end());
        std::sort(sorted.begin(), sorted.end());
        if (slack < out.worst_slack || (slack == out.worst_slack && sorted < out.worst_set)) {
            out.worst_slack = slack;
            out.worst_set = std::move(sorted);
        }
    };

    if (set_events_vacuous(d, delta) && !options.force_enumeration) {
        out.mode = AuditMode::vacuous;
        for (Vertex v = 0; v < n; ++v) {
            const Vertex one[] = {v};
            consider(one, g.degree_of(v), h.degree_of(v));
        }
        out.pass = true;
        return out;
    }

    out.mode = AuditMode::connected_sets;
    VertexSet scratch(n);
    const int cap = std::min(s_max, n);
    for (Vertex v = 0; v < n; ++v) {
        for_each_connected_set(
            g, v, cap,
            [&](std::span<const Vertex> members) {
                for (Vertex u : members) scratch.insert(u);
                const auto bg = edge_boundary(g, members, scratch);
                const auto bh = edge_boundary(h, members, scratch);
                for (Vertex u : members) scratch.erase(u);
                consider(members, bg, bh);
            },
            true, options.limits);
    }
    out.pass = out.worst_slack >= 0.0;
    return out;
}

CheegerGuaranteeCheck verify_corollary3(const Graph& g, const Graph& h, double delta,
                                  const CheegerOptions& options) {
    if (!g.is_spanning_supergraph_of(h)) {
        throw std::invalid_argument("H is not a spanning subgraph of G");
    }
    const int d = require_regular(g);
    CheegerGuaranteeCheck out;
    out.h_g = cheeger_exact(g, options).value;
    out.h_h = cheeger_exact(h, options).value;
    out.hypothesis_threshold = 8.0 * d * (std::log(static_cast<double>(d)) + 2.0) / delta;
    out.hypothesis_met = out.h_g >= out.hypothesis_threshold;
    out.guarantee = delta / (4.0 * d) * out.h_g;
    out.pass = !out.hypothesis_met || out.h_h >= out.guarantee;
    return out;
}

double spectral_predicted_h_lower(int d, double lambda2) {
    return lambda2 / (64.0 * (1.0 - lambda2)) - 2.0 * std::log(static_cast<double>(d)) - 4.0;
}

SpectralGuaranteeCheck verify_theorem4(const Graph& g, int girth_target, const SpectralGuaranteeOptions& options) {
    const int d = require_regular(g);
    const double log_term = std::log(static_cast<double>(d)) + 2.0;
    SpectralGuaranteeCheck out;
    out.lambda2 = lambda2(g, options.spectral).lambda2;
    out.spectral_condition = out.lambda2 >= 1.0 - 1.0 / (16.0 * log_term);
    out.size_condition = static_cast<double>(g.num_vertices()) > 16.0 * std::pow(log_term, girth_target);
    out.strong_regime = out.lambda2 >= 1.0 - 1.0 / (192.0 * log_term);
    out.applicable = out.spectral_condition && out.size_condition;
    out.strong_regime_lower = 0.99 * log_term;
    out.lower_ln_d_plus_4 = 0.99 * (std::log(static_cast<double>(d)) + 4.0);
    if (out.lambda2 > 0.0 && out.lambda2 < 1.0) {
        double delta = choose_delta(out.lambda2);
        if (2.0 * delta > d) {
            delta = d / 2.0;
            out.delta_capped = true;
        }
        out.delta = delta;
        out.predicted_h_lower = spectral_predicted_h_lower(d, out.lambda2);
    }
    if (out.applicable && out.delta && options.run_sparsifier) {
        SparsifyParams params;
        params.g = girth_target;
        params.delta = *out.delta;
        params.s_max = options.s_max;
        params.seed = options.seed;
        out.run = moser_tardos_sparsify(g, params);
        out.audit = verify_theorem2_inequality(g, out.run->h, *out.delta, options.s_max);
    }
    return out;
}

double diameter_girth_ratio(const Graph& h) {
    const auto gi = girth(h);
    const auto di = diameter(h);
    if (!gi || !di) return std::numeric_limits<double>::infinity();
    return static_cast<double>(*di) / static_cast<double>(*gi);
}

}  // namespace girthspan
