#pragma once

// Hot loops of the library, each in two flavours with identical contracts:
//   kernels::serial  straightforward single-threaded reference code
//   kernels::omp     OpenMP version used by the public API
// Tests check the two agree exactly; tools/bench_kernels times them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "girthspan/graph.hpp"

namespace girthspan::kernels {

/// Per-vertex cycle counts: row v, column k holds the number of distinct
/// length-k cycles through v (columns 0..2 are always zero).
struct CycleCountTable {
    int kmax = 0;
    std::vector<std::uint64_t> counts;  // n * (kmax + 1), row-major

    std::uint64_t at(Vertex v, int k) const {
        return counts[static_cast<std::size_t>(v) * (kmax + 1) + k];
    }
};

/// Minimum of |boundary(S)| / |S| over 0 < |S| <= n/2, as an exact fraction.
struct CutRatio {
    std::int64_t boundary = 0;
    std::int64_t size = 0;
    std::uint64_t mask = 0;  // members of the minimizing S; ties go to the smaller mask
};

/// Minimum over all nonempty S of
///   |bd_H(S)| - alpha |bd_G(S)| + beta |S|.
struct SlackMinimum {
    double slack = 0.0;
    std::uint64_t mask = 0;
    bool any_positive_rhs = false;  // some S had alpha |bd_G(S)| - beta |S| > 0
};

/// Largest graph the bitmask kernels accept.
inline constexpr int kMaxMaskVertices = 30;

namespace serial {

void adjacency_apply(const Graph& g, std::span<const double> x, std::span<double> y);
std::optional<int> girth(const Graph& g);
CycleCountTable vertex_cycle_counts(const Graph& g, int kmax);
std::uint64_t cycle_count_through(const Graph& g, Vertex v, int k);
std::vector<Cycle> short_cycles(const Graph& g, int g_bound, std::size_t max_items);
CutRatio min_cut_ratio(const Graph& g);
SlackMinimum min_boundary_slack(const Graph& g, const Graph& h, double alpha, double beta);

}  // namespace serial

namespace omp {

void adjacency_apply(const Graph& g, std::span<const double> x, std::span<double> y);
std::optional<int> girth(const Graph& g);
CycleCountTable vertex_cycle_counts(const Graph& g, int kmax);
std::vector<Cycle> short_cycles(const Graph& g, int g_bound, std::size_t max_items);
CutRatio min_cut_ratio(const Graph& g);
SlackMinimum min_boundary_slack(const Graph& g, const Graph& h, double alpha, double beta);

}  // namespace omp

}  // namespace girthspan::kernels
