#include <atomic>
#include <bit>
#include <limits>
#include <string>

#include <omp.h>

#include "girthspan/kernels.hpp"
#include "kernels_detail.hpp"

namespace girthspan::kernels::omp {

namespace {

void check_mask_size(const Graph& g) {
    if (g.num_vertices() > kMaxMaskVertices) {
        throw ResourceLimitError("bitmask kernels accept at most " +
                                 std::to_string(kMaxMaskVertices) + " vertices");
    }
}

// Walks every subset of V in chunks: the top `high` bits are fixed per chunk
// and the low bits follow a Gray code, so each step flips one vertex and the
// boundary is updated in O(1).
struct GrayWalker {
    std::span<const std::uint64_t> adj;
    std::vector<std::int64_t> degree;

    explicit GrayWalker(std::span<const std::uint64_t> a) : adj(a), degree(a.size()) {
        for (std::size_t v = 0; v < a.size(); ++v) degree[v] = std::popcount(a[v]);
    }

    // Boundary after toggling v in `set` (set is the state before the toggle).
    std::int64_t toggled(std::int64_t boundary, std::uint64_t set, int v) const {
        const std::int64_t inside = std::popcount(adj[v] & set);
        const std::int64_t delta = degree[v] - 2 * inside;
        return (set >> v & 1U) ? boundary - delta : boundary + delta;
    }
};

int chunk_bits(int n) { return n < 10 ? 0 : 6; }

}  // namespace

void adjacency_apply(const Graph& g, std::span<const double> x, std::span<double> y) {
    const int n = g.num_vertices();
#pragma omp parallel for schedule(static)
    for (Vertex v = 0; v < n; ++v) {
        double sum = 0.0;
        for (Vertex w : g.neighbors(v)) sum += x[w];
        y[v] = sum;
    }
}

std::optional<int> girth(const Graph& g) {
    const int n = g.num_vertices();
    std::atomic<int> best{std::numeric_limits<int>::max()};
#pragma omp parallel
    {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> queue;
#pragma omp for schedule(dynamic, 16)
        for (Vertex r = 0; r < n; ++r) {
            const int cutoff = best.load(std::memory_order_relaxed);
            if (cutoff == 3) continue;
            auto c = detail::bfs_cycle_from(g, r, cutoff, dist, parent, queue);
            if (c) {
                int cur = best.load(std::memory_order_relaxed);
                while (*c < cur && !best.compare_exchange_weak(cur, *c)) {
                }
            }
        }
    }
    const int result = best.load();
    if (result == std::numeric_limits<int>::max()) return std::nullopt;
    return result;
}

CycleCountTable vertex_cycle_counts(const Graph& g, int kmax) {
    const int n = g.num_vertices();
    const auto width = static_cast<std::size_t>(kmax) + 1;
    CycleCountTable table;
    table.kmax = kmax;
    table.counts.assign(static_cast<std::size_t>(n) * width, 0);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(table.counts.size(), 0);
        std::vector<Vertex> path;
        std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic, 8) nowait
        for (Vertex a = 0; a < n; ++a) {
            detail::anchored_cycles(g, a, kmax, path, on_path, [&](std::span<const Vertex> c) {
                for (Vertex v : c) ++local[static_cast<std::size_t>(v) * width + c.size()];
            });
        }
#pragma omp critical
        for (std::size_t i = 0; i < local.size(); ++i) table.counts[i] += local[i];
    }
    return table;
}

std::vector<Cycle> short_cycles(const Graph& g, int g_bound, std::size_t max_items) {
    const int n = g.num_vertices();
    std::vector<std::vector<Cycle>> per_anchor(static_cast<std::size_t>(n));
    std::atomic<std::size_t> total{0};
    std::atomic<bool> overflow{false};
#pragma omp parallel
    {
        std::vector<Vertex> path;
        std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
#pragma omp for schedule(dynamic, 8)
        for (Vertex a = 0; a < n; ++a) {
            if (overflow.load(std::memory_order_relaxed)) continue;
            auto& bucket = per_anchor[a];
            detail::anchored_cycles(g, a, g_bound - 1, path, on_path, [&](std::span<const Vertex> c) {
                bucket.push_back(Cycle::canonical({c.begin(), c.end()}));
            });
            if (total.fetch_add(bucket.size()) + bucket.size() > max_items) overflow = true;
        }
    }
    if (overflow) {
        throw ResourceLimitError("short-cycle enumeration exceeded " + std::to_string(max_items) +
                                 " cycles");
    }
    std::vector<Cycle> out;
    out.reserve(total.load());
    for (auto& bucket : per_anchor) {
        std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
    }
    return out;
}

CutRatio min_cut_ratio(const Graph& g) {
    check_mask_size(g);
    const int n = g.num_vertices();
    const auto adj = detail::adjacency_masks(g);
    const GrayWalker walker(adj);
    const int high = chunk_bits(n);
    const int low = n - high;
    const std::int64_t chunks = std::int64_t{1} << high;
    CutRatio best{0, 0, 0};
#pragma omp parallel
    {
        CutRatio local{0, 0, 0};
        auto consider = [&](std::uint64_t set, std::int64_t b) {
            const std::int64_t size = std::popcount(set);
            if (size == 0 || 2 * size > n) return;
            if (local.size == 0 || detail::ratio_less(b, size, local.boundary, local.size) ||
                (b * local.size == local.boundary * size && set < local.mask)) {
                local = {b, size, set};
            }
        };
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < chunks; ++c) {
            std::uint64_t set = static_cast<std::uint64_t>(c) << low;
            std::int64_t b = detail::mask_boundary(adj, set);
            consider(set, b);
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << low); ++i) {
                const int v = std::countr_zero(i);
                b = walker.toggled(b, set, v);
                set ^= std::uint64_t{1} << v;
                consider(set, b);
            }
        }
#pragma omp critical
        if (local.size != 0 &&
            (best.size == 0 || detail::ratio_less(local.boundary, local.size, best.boundary, best.size) ||
             (local.boundary * best.size == best.boundary * local.size && local.mask < best.mask))) {
            best = local;
        }
    }
    return best;
}

SlackMinimum min_boundary_slack(const Graph& g, const Graph& h, double alpha, double beta) {
    check_mask_size(g);
    const int n = g.num_vertices();
    const auto adj_g = detail::adjacency_masks(g);
    const auto adj_h = detail::adjacency_masks(h);
    const GrayWalker walk_g(adj_g);
    const GrayWalker walk_h(adj_h);
    const int high = chunk_bits(n);
    const int low = n - high;
    const std::int64_t chunks = std::int64_t{1} << high;
    SlackMinimum best{std::numeric_limits<double>::infinity(), 0, false};
#pragma omp parallel
    {
        SlackMinimum local{std::numeric_limits<double>::infinity(), 0, false};
        auto consider = [&](std::uint64_t set, std::int64_t bg, std::int64_t bh) {
            if (set == 0) return;
            const double size = std::popcount(set);
            const double rhs = alpha * static_cast<double>(bg) - beta * size;
            const double slack = static_cast<double>(bh) - rhs;
            local.any_positive_rhs = local.any_positive_rhs || rhs > 0.0;
            if (slack < local.slack || (slack == local.slack && set < local.mask)) {
                local.slack = slack;
                local.mask = set;
            }
        };
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < chunks; ++c) {
            std::uint64_t set = static_cast<std::uint64_t>(c) << low;
            std::int64_t bg = detail::mask_boundary(adj_g, set);
            std::int64_t bh = detail::mask_boundary(adj_h, set);
            consider(set, bg, bh);
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << low); ++i) {
                const int v = std::countr_zero(i);
                bg = walk_g.toggled(bg, set, v);
                bh = walk_h.toggled(bh, set, v);
                set ^= std::uint64_t{1} << v;
                consider(set, bg, bh);
            }
        }
#pragma omp critical
        {
            best.any_positive_rhs = best.any_positive_rhs || local.any_positive_rhs;
            if (local.slack < best.slack || (local.slack == best.slack && local.mask < best.mask)) {
                best.slack = local.slack;
                best.mask = local.mask;
            }
        }
    }
    return best;
}

}  // namespace girthspan::kernels::omp
