#include "girthspan/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "girthspan/kernels.hpp"

namespace girthspan {

std::optional<int> girth(const Graph& g) { return kernels::omp::girth(g); }

std::map<int, std::uint64_t> count_cycles_through(const Graph& g, Vertex v, int kmax) {
    if (kmax < 3) {
        throw std::invalid_argument("count_cycles_through needs kmax >= 3");
    }
    if (!g.contains_vertex(v)) {
        throw GraphError("vertex out of range");
    }
    std::map<int, std::uint64_t> out;
    for (int k = 3; k <= kmax; ++k) out[k] = 0;
    // One DFS up to kmax, tallying closures of every length.
    std::vector<std::uint8_t> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
    on_path[v] = 1;
    auto walk = [&](auto&& self, Vertex tail, int edges) -> void {
        for (Vertex w : g.neighbors(tail)) {
            if (w == v && edges >= 2) ++out[edges + 1];
            if (on_path[w] || edges + 1 >= kmax) continue;
            on_path[w] = 1;
            self(self, w, edges + 1);
            on_path[w] = 0;
        }
    };
    walk(walk, v, 0);
    for (auto& [k, count] : out) count /= 2;
    return out;
}

std::map<int, std::uint64_t> max_cycle_counts(const Graph& g, int kmax) {
    std::map<int, std::uint64_t> out;
    if (kmax < 3) return out;
    const auto table = kernels::omp::vertex_cycle_counts(g, kmax);
    for (int k = 3; k <= kmax; ++k) {
        std::uint64_t best = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v) best = std::max(best, table.at(v, k));
        if (best > 0) out[k] = best;
    }
    return out;
}

CycleSet enumerate_short_cycles(const Graph& g, int g_bound, const EnumerationLimits& limits) {
    if (g_bound < 3) {
        throw std::invalid_argument("enumerate_short_cycles needs g >= 3");
    }
    auto cycles = kernels::omp::short_cycles(g, g_bound, limits.max_items);
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

namespace {

enum Mark : std::uint8_t { kFree = 0, kInSet, kCandidate, kExcluded };

struct ConnectedSetWalker {
    const Graph& g;
    int s_max;
    Vertex floor;  // vertices below this never join
    const ConnectedSetVisitor& visit;
    std::size_t max_items;
    std::size_t emitted = 0;
    std::vector<Vertex> set;
    std::vector<std::uint8_t> mark;

    void emit() {
        if (++emitted > max_items) {
            throw ResourceLimitError("connected-set enumeration exceeded " +
                                     std::to_string(max_items) + " sets");
        }
        visit(set);
    }

    // Every connected set containing `set`, avoiding excluded vertices, that
    // grows only through `candidates` and later frontier vertices.
    void grow(const std::vector<Vertex>& candidates) {
        emit();
        if (static_cast<int>(set.size()) == s_max) return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Vertex w = candidates[i];
            std::vector<Vertex> next(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                     candidates.end());
            const std::size_t inherited = next.size();
            set.push_back(w);
            mark[w] = kInSet;
            for (Vertex x : g.neighbors(w)) {
                if (x >= floor && mark[x] == kFree) {
                    mark[x] = kCandidate;
                    next.push_back(x);
                }
            }
            grow(next);
            for (std::size_t j = inherited; j < next.size(); ++j) mark[next[j]] = kFree;
            set.pop_back();
            mark[w] = kExcluded;
        }
        for (Vertex w : candidates) mark[w] = kCandidate;
    }
};

}  // namespace

void for_each_connected_set(const Graph& g, Vertex v, int s_max, const ConnectedSetVisitor& visit,
                            bool only_above_v, const EnumerationLimits& limits) {
    if (!g.contains_vertex(v)) {
        throw GraphError("vertex out of range");
    }
    if (s_max < 1 || s_max > g.num_vertices()) {
        throw std::invalid_argument("connected-set size bound must lie in [1, n]");
    }
    ConnectedSetWalker walker{g, s_max, only_above_v ? v + 1 : 0, visit, limits.max_items, 0, {},
                              std::vector<std::uint8_t>(static_cast<std::size_t>(g.num_vertices()), kFree)};
    walker.set.push_back(v);
    walker.mark[v] = kInSet;
    std::vector<Vertex> first;
    for (Vertex x : g.neighbors(v)) {
        if (x >= walker.floor) {
            walker.mark[x] = kCandidate;
            first.push_back(x);
        }
    }
    walker.grow(first);
}

std::vector<std::vector<Vertex>> connected_sets_through(const Graph& g, Vertex v, int s_max,
                                                        const EnumerationLimits& limits) {
    std::vector<std::vector<Vertex>> out;
    for_each_connected_set(
        g, v, s_max,
        [&](std::span<const Vertex> s) {
            std::vector<Vertex> sorted(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
        },
        false, limits);
    return out;
}

double connected_set_count_bound(int d, int s) {
    if (s <= 1) return 1.0;
    // binom(2s-2, s-1) built multiplicatively; exact in double for s <= 30.
    double binom = 1.0;
    for (int i = 1; i <= s - 1; ++i) binom = binom * (s - 1 + i) / i;
    return d * std::pow(d - 1.0, s - 2) * std::round(binom);
}

std::int64_t edge_boundary(const Graph& g, std::span<const Vertex> members, const VertexSet& s) {
    std::int64_t b = 0;
    for (Vertex u : members) {
        for (Vertex w : g.neighbors(u)) b += !s.contains(w);
    }
    return b;
}

std::int64_t edge_boundary(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices()) {
        throw GraphError("vertex set universe does not match the graph");
    }
    const auto members = s.members();
    return edge_boundary(g, members, s);
}

namespace {

// BFS eccentricity of `root`; -1 when some vertex is unreachable.
int eccentricity(const Graph& g, Vertex root, std::vector<int>& dist, std::vector<Vertex>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, root);
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != static_cast<std::size_t>(g.num_vertices())) return -1;
    return dist[queue.back()];
}

}  // namespace

std::optional<int> diameter(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) return 0;
    int best = 0;
    bool disconnected = false;
#pragma omp parallel
    {
        std::vector<int> dist(static_cast<std::size_t>(n));
        std::vector<Vertex> queue;
        int local = 0;
        bool local_disconnected = false;
#pragma omp for schedule(dynamic, 16) nowait
        for (Vertex r = 0; r < n; ++r) {
            const int e = eccentricity(g, r, dist, queue);
            if (e < 0) local_disconnected = true;
            local = std::max(local, e);
        }
#pragma omp critical
        {
            best = std::max(best, local);
            disconnected = disconnected || local_disconnected;
        }
    }
    if (disconnected) return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()));
    std::vector<Vertex> queue;
    return eccentricity(g, 0, dist, queue) >= 0;
}

std::vector<std::vector<Vertex>> induced_components(const Graph& g, const VertexSet& s) {
    std::vector<std::vector<Vertex>> out;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex root : s.members()) {
        if (seen[root]) continue;
        std::vector<Vertex> comp{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (s.contains(w) && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace girthspan
