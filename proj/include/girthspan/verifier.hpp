#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "girthspan/graph.hpp"
#include "girthspan/sparsify.hpp"
#include "girthspan/spectral.hpp"

namespace girthspan {

enum class CheegerMode { exact, sweep_bound };

std::string_view to_string(CheegerMode m);

struct CheegerResult {
    double value = 0.0;
    std::vector<Vertex> witness;  // sorted; 0 < |witness| <= n/2
    std::int64_t boundary = 0;
    CheegerMode mode = CheegerMode::exact;
};

struct CheegerOptions {
    int exact_max_n = 24;
};

/// h(G) = min over 0 < |S| <= n/2 of |bd S| / |S|, by enumerating subsets.
CheegerResult cheeger_exact(const Graph& g, const CheegerOptions& options = {});

/// Upper bound on h(G) from the best prefix cut of the Fiedler vector.
CheegerResult cheeger_sweep(const Graph& g, const SpectralOptions& options = {});

enum class AuditMode { exhaustive, connected_sets, vacuous };

std::string_view to_string(AuditMode m);

/// Audit of |bd_H S| >= (delta/2d) |bd_G S| - (2 ln d + 4) |S|.
struct BoundaryAudit {
    bool pass = false;
    AuditMode mode = AuditMode::exhaustive;
    bool substantive = false;  // some audited S had a positive right-hand side
    std::vector<Vertex> worst_set;
    double worst_slack = 0.0;
    std::uint64_t sets_checked = 0;
    int s_max = 0;
};

struct BoundaryAuditOptions {
    int exhaustive_max_n = 20;
    bool force_enumeration = false;  // enumerate even when every right-hand side is negative
    EnumerationLimits limits;
};

/// Exhaustive over all nonempty S when n <= exhaustive_max_n; otherwise over
/// connected S with |S| <= s_max, or settled without enumeration when
/// delta < 4 ln d + 8 makes every right-hand side negative.  In that vacuous
/// case the reported worst set is the worst singleton.
BoundaryAudit verify_theorem2_inequality(const Graph& g, const Graph& h, double delta, int s_max,
                                         const BoundaryAuditOptions& options = {});

struct CheegerGuaranteeCheck {
    bool hypothesis_met = false;  // h(G) >= 8d (ln d + 2) / delta
    double guarantee = 0.0;       // (delta / 4d) h(G)
    bool pass = false;            // !hypothesis_met || h(H) >= guarantee
    double h_g = 0.0;
    double h_h = 0.0;
    double hypothesis_threshold = 0.0;
};

CheegerGuaranteeCheck verify_corollary3(const Graph& g, const Graph& h, double delta,
                                  const CheegerOptions& options = {});

/// lambda2 / (64 (1 - lambda2)) - 2 ln d - 4.
double spectral_predicted_h_lower(int d, double lambda2);

struct SpectralGuaranteeCheck {
    bool applicable = false;
    bool spectral_condition = false;  // lambda2 >= 1 - 1/(16 (ln d + 2))
    bool size_condition = false;      // n > 16 (ln d + 2)^g
    bool strong_regime = false;       // lambda2 >= 1 - 1/(192 (ln d + 2))
    double lambda2 = 0.0;
    std::optional<double> delta;      // absent when lambda2 >= 1
    bool delta_capped = false;        // delta clipped to d/2
    std::optional<double> predicted_h_lower;
    double strong_regime_lower = 0.0;  // 0.99 (ln d + 2)
    double lower_ln_d_plus_4 = 0.0;     // 0.99 (ln d + 4)
    std::optional<SparsifyOutcome> run;
    std::optional<BoundaryAudit> audit;
};

struct SpectralGuaranteeOptions {
    int s_max = 6;
    Seed seed = 1;
    bool run_sparsifier = true;
    SpectralOptions spectral;
};

SpectralGuaranteeCheck verify_theorem4(const Graph& g, int girth_target, const SpectralGuaranteeOptions& options = {});

/// diameter(H) / girth(H); +inf for acyclic or disconnected H.
double diameter_girth_ratio(const Graph& h);

}  // namespace girthspan
