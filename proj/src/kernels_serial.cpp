#include <bit>
#include <limits>
#include <string>

#include "girthspan/kernels.hpp"
#include "kernels_detail.hpp"

namespace girthspan::kernels::serial {

namespace {

// Closed simple paths from v, tallied by length; each cycle is seen twice.
void closed_paths_from(const Graph& g, Vertex v, int kmax, std::vector<std::uint64_t>& tally) {
    std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
    on_path[v] = 1;
    auto walk = [&](auto&& self, Vertex tail, int edges) -> void {
        for (Vertex w : g.neighbors(tail)) {
            if (w == v && edges >= 2) {
                ++tally[edges + 1];
            }
            if (on_path[w] || edges + 1 >= kmax) continue;
            on_path[w] = 1;
            self(self, w, edges + 1);
            on_path[w] = 0;
        }
    };
    walk(walk, v, 0);
}

void check_mask_size(const Graph& g) {
    if (g.num_vertices() > kMaxMaskVertices) {
        throw ResourceLimitError("bitmask kernels accept at most " +
                                 std::to_string(kMaxMaskVertices) + " vertices");
    }
}

}  // namespace

void adjacency_apply(const Graph& g, std::span<const double> x, std::span<double> y) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        double sum = 0.0;
        for (Vertex w : g.neighbors(v)) sum += x[w];
        y[v] = sum;
    }
}

std::optional<int> girth(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue;
    std::optional<int> best;
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
        auto c = detail::bfs_cycle_from(g, r, std::numeric_limits<int>::max(), dist, parent, queue);
        if (c && (!best || *c < *best)) best = c;
    }
    return best;
}

std::uint64_t cycle_count_through(const Graph& g, Vertex v, int k) {
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(k) + 1, 0);
    closed_paths_from(g, v, k, tally);
    return tally[k] / 2;
}

CycleCountTable vertex_cycle_counts(const Graph& g, int kmax) {
    CycleCountTable table;
    table.kmax = kmax;
    const auto width = static_cast<std::size_t>(kmax) + 1;
    table.counts.assign(static_cast<std::size_t>(g.num_vertices()) * width, 0);
    std::vector<std::uint64_t> tally(width);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::fill(tally.begin(), tally.end(), 0);
        closed_paths_from(g, v, kmax, tally);
        for (std::size_t k = 3; k < width; ++k) {
            table.counts[v * width + k] = tally[k] / 2;
        }
    }
    return table;
}

std::vector<Cycle> short_cycles(const Graph& g, int g_bound, std::size_t max_items) {
    std::vector<Cycle> out;
    std::vector<Vertex> path;
    std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex a = 0; a < g.num_vertices(); ++a) {
        detail::anchored_cycles(g, a, g_bound - 1, path, on_path, [&](std::span<const Vertex> c) {
            if (out.size() >= max_items) {
                throw ResourceLimitError("short-cycle enumeration exceeded " +
                                         std::to_string(max_items) + " cycles");
            }
            out.push_back(Cycle::canonical({c.begin(), c.end()}));
        });
    }
    return out;
}

CutRatio min_cut_ratio(const Graph& g) {
    check_mask_size(g);
    const int n = g.num_vertices();
    const auto adj = detail::adjacency_masks(g);
    CutRatio best{0, 0, 0};
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set) {
        const std::int64_t size = std::popcount(set);
        if (2 * size > n) continue;
        const std::int64_t b = detail::mask_boundary(adj, set);
        if (best.size == 0 || detail::ratio_less(b, size, best.boundary, best.size)) {
            best = {b, size, set};
        }
    }
    return best;
}

SlackMinimum min_boundary_slack(const Graph& g, const Graph& h, double alpha, double beta) {
    check_mask_size(g);
    const int n = g.num_vertices();
    const auto adj_g = detail::adjacency_masks(g);
    const auto adj_h = detail::adjacency_masks(h);
    SlackMinimum best{std::numeric_limits<double>::infinity(), 0, false};
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << n); ++set) {
        const double size = std::popcount(set);
        const double rhs = alpha * static_cast<double>(detail::mask_boundary(adj_g, set)) - beta * size;
        const double slack = static_cast<double>(detail::mask_boundary(adj_h, set)) - rhs;
        best.any_positive_rhs = best.any_positive_rhs || rhs > 0.0;
        if (slack < best.slack) {
            best.slack = slack;
            best.mask = set;
        }
    }
    return best;
}

}  // namespace girthspan::kernels::serial
