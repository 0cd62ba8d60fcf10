#include "girthspan/report.hpp"

#include <cmath>

namespace girthspan::report {

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

Json header(const std::string& command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "girthspan"}, {"version", kToolVersion}};
    j["command"] = command;
    return j;
}

Json graph_meta(const Graph& g, const std::string& source) {
    Json j;
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    if (auto d = g.regular_degree()) {
        j["d"] = *d;
    } else {
        j["d"] = nullptr;
    }
    j["source"] = source;
    return j;
}

Json girth_field(const std::optional<int>& value) {
    Json j;
    if (value) {
        j["value"] = *value;
    } else {
        j["value"] = nullptr;
    }
    j["infinite"] = !value.has_value();
    j["mode"] = "exact";
    return j;
}

Json spectral(const SpectralSummary& s, int d) {
    Json j;
    j["lambda2"] = number(s.lambda2);
    j["method"] = std::string(to_string(s.method));
    j["mode"] = s.disconnected ? "exact" : (s.method == SolverMethod::dense ? "exact" : "iterative");
    j["residual"] = number(s.residual);
    j["tolerance"] = number(s.tolerance);
    j["iterations"] = s.iterations;
    j["disconnected"] = s.disconnected;
    j["ramanujan_or_better"] = !s.disconnected && is_ramanujan_or_better(d, s.lambda2);
    j["ramanujan_threshold"] = number(1.0 - 2.0 * std::sqrt(d - 1.0) / d);
    return j;
}

Json cheeger(const CheegerResult& r) {
    Json j;
    j["mode"] = std::string(to_string(r.mode));
    j["value"] = number(r.value);
    j["boundary"] = r.boundary;
    j["witness"] = r.witness;
    return j;
}

Json cheeger_interval(double lower, const CheegerResult& upper) {
    Json j;
    j["mode"] = "interval";
    j["lower"] = number(lower);
    j["lower_mode"] = "spectral_bound";
    j["upper"] = number(upper.value);
    j["upper_mode"] = std::string(to_string(upper.mode));
    j["upper_witness"] = upper.witness;
    return j;
}

Json lll(const LllCheck& c, double delta, double delta_max) {
    Json j;
    j["delta"] = number(delta);
    j["pass"] = c.pass;
    j["margin"] = number(c.margin);
    j["margin_unbounded"] = std::isinf(c.margin);
    j["worst_template"] = c.worst_template;
    j["cycle_product"] = number(c.cycle_product);
    j["set_product"] = number(c.set_product);
    j["cycle_product_meets_target"] = c.cycle_product_meets_target;
    j["set_product_meets_target"] = c.set_product_meets_target;
    j["sets_vacuous"] = c.sets_vacuous;
    j["x_in_range"] = c.x_in_range;
    j["delta_max_feasible"] = number(delta_max);
    j["mode"] = "bound";
    return j;
}

Json sparsify(const SparsifyOutcome& o, const SparsifyParams& p) {
    Json j;
    j["girth"] = girth_field(o.girth);
    j["rounds"] = o.rounds;
    j["resamples_by_kind"] = {{"cycle", o.cycle_resamples}, {"set", o.set_resamples}};
    j["certified"] = {{"girth_certified", o.girth_certified},
                      {"sets_audited_to_s_max", o.sets_audited_to_s_max}};
    j["delta"] = number(p.delta);
    j["g"] = p.g;
    j["s_max"] = p.s_max;
    j["seed"] = p.seed;
    j["max_rounds"] = p.max_rounds;
    j["budget_exhausted"] = o.budget_exhausted;
    j["set_audit_mode"] = std::string(to_string(o.set_mode));
    j["cycle_events"] = o.cycle_events;
    j["set_events"] = o.set_events;
    j["initial_violations"] = o.initial_violations;
    j["expected_resample_bound"] = number(o.expected_resample_bound);
    j["subgraph_edges"] = o.h.num_edges();
    j["lll_precheck"] = lll(o.precheck, p.delta, std::nan(""));
    j["lll_precheck"].erase("delta_max_feasible");
    return j;
}

Json boundary_audit(const BoundaryAudit& a, double delta) {
    Json j;
    j["pass"] = a.pass;
    j["mode"] = std::string(to_string(a.mode));
    j["substantive"] = a.substantive;
    j["delta"] = number(delta);
    j["s_max"] = a.s_max;
    j["sets_checked"] = a.sets_checked;
    j["worst"] = {{"set", a.worst_set}, {"slack", number(a.worst_slack)}};
    return j;
}

Json cheeger_guarantee(const CheegerGuaranteeCheck& c, double delta) {
    Json j;
    j["delta"] = number(delta);
    j["hypothesis_met"] = c.hypothesis_met;
    j["hypothesis_threshold"] = number(c.hypothesis_threshold);
    j["h_g"] = number(c.h_g);
    j["h_h"] = number(c.h_h);
    j["guarantee"] = number(c.guarantee);
    j["pass"] = c.pass;
    j["vacuous"] = !c.hypothesis_met;
    return j;
}

Json spectral_guarantee(const SpectralGuaranteeCheck& t) {
    Json j;
    j["applicable"] = t.applicable;
    j["spectral_condition"] = t.spectral_condition;
    j["size_condition"] = t.size_condition;
    j["strong_regime"] = t.strong_regime;
    j["lambda2"] = number(t.lambda2);
    j["delta"] = t.delta ? number(*t.delta) : Json(nullptr);
    j["delta_capped"] = t.delta_capped;
    j["predicted_h_lower"] = t.predicted_h_lower ? number(*t.predicted_h_lower) : Json(nullptr);
    j["strong_regime_lower"] = number(t.strong_regime_lower);
    j["lower_ln_d_plus_4"] = number(t.lower_ln_d_plus_4);
    if (t.audit) {
        j["audit"] = boundary_audit(*t.audit, t.delta.value_or(0.0));
    } else {
        j["audit"] = nullptr;
    }
    j["vacuous"] = !t.applicable;
    return j;
}

}  // namespace girthspan::report
