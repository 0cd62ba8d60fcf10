#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "girthspan/graph.hpp"
#include "girthspan/lll.hpp"
#include "girthspan/sparsify.hpp"
#include "girthspan/spectral.hpp"
#include "girthspan/verifier.hpp"

namespace girthspan::report {

// Reports are ordered_json so keys keep insertion order and golden files diff
// cleanly.  Layout is documented in docs/report-schema.md.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Finite numbers pass through; +-inf and NaN become null.
Json number(double x);

Json header(const std::string& command);
Json graph_meta(const Graph& g, const std::string& source);
Json girth_field(const std::optional<int>& value);
Json spectral(const SpectralSummary& s, int d);
Json cheeger(const CheegerResult& r);
Json cheeger_interval(double lower, const CheegerResult& upper);
Json lll(const LllCheck& check, double delta, double delta_max);
Json sparsify(const SparsifyOutcome& o, const SparsifyParams& p);
Json boundary_audit(const BoundaryAudit& a, double delta);
Json cheeger_guarantee(const CheegerGuaranteeCheck& c, double delta);
Json spectral_guarantee(const SpectralGuaranteeCheck& t);

}  // namespace girthspan::report
