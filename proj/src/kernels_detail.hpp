#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "girthspan/graph.hpp"

namespace girthspan::kernels::detail {

/// Visits every cycle of length 3..max_len whose smallest vertex is `anchor`,
/// exactly once, as a canonical vertex sequence. Sequences arrive in
/// lexicographic order because neighbor rows are sorted.
template <class Visit>
void anchored_cycles(const Graph& g, Vertex anchor, int max_len, std::vector<Vertex>& path,
                     std::vector<std::uint8_t>& on_path, Visit&& visit) {
    path.clear();
    path.push_back(anchor);
    on_path[anchor] = 1;
    auto extend = [&](auto&& self) -> void {
        const Vertex tail = path.back();
        const int edges = static_cast<int>(path.size()) - 1;
        if (edges >= 2 && path[1] < tail && g.adjacent(tail, anchor)) {
            visit(std::span<const Vertex>(path));
        }
        if (edges + 1 >= max_len) return;
        for (Vertex w : g.neighbors(tail)) {
            if (w <= anchor || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            self(self);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    extend(extend);
    on_path[anchor] = 0;
}

/// Shortest cycle seen by a BFS from `root`, ignoring anything of length >= cutoff.
/// The minimum over all roots is the girth.
inline std::optional<int> bfs_cycle_from(const Graph& g, Vertex root, int cutoff,
                                         std::vector<int>& dist, std::vector<Vertex>& parent,
                                         std::vector<Vertex>& queue) {
    std::optional<int> best;
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    parent[root] = -1;
    std::size_t head = 0;
    while (head < queue.size()) {
        const Vertex u = queue[head++];
        if (2 * dist[u] + 1 >= cutoff) break;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (w != parent[u]) {
                const int len = dist[u] + dist[w] + 1;
                if (len < cutoff) {
                    cutoff = len;
                    best = len;
                }
            }
        }
    }
    for (Vertex v : queue) dist[v] = -1;
    return best;
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Edge& e : g.edges()) {
        masks[e.u] |= std::uint64_t{1} << e.v;
        masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
}

inline std::int64_t mask_boundary(std::span<const std::uint64_t> adj, std::uint64_t set) {
    std::int64_t b = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (set >> v & 1U) b += std::popcount(adj[v] & ~set);
    }
    return b;
}

/// a/b < c/d for positive denominators.
inline bool ratio_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return a * d < c * b;
}

}  // namespace girthspan::kernels::detail
