#pragma once

// Brute-force reference computations for small graphs.  Nothing here shares
// code with the library beyond the Graph container itself.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "girthspan/graph.hpp"

namespace oracle {

using girthspan::Graph;
using girthspan::Vertex;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

// Hamiltonian cycles of every induced k-subset, permutations with the first
// vertex fixed, divided by the two directions.
inline std::vector<std::vector<std::uint64_t>> cycle_counts(const Graph& g, int kmax) {
    const int n = g.num_vertices();
    const auto a = adjacency_matrix(g);
    std::vector<std::vector<std::uint64_t>> per_vertex(n, std::vector<std::uint64_t>(kmax + 1, 0));
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const int k = std::popcount(mask);
        if (k < 3 || k > kmax) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1U) vs.push_back(v);
        std::vector<int> rest(vs.begin() + 1, vs.end());
        std::uint64_t directed = 0;
        do {
            int prev = vs[0];
            bool ok = true;
            for (int v : rest) {
                if (!a[prev][v]) {
                    ok = false;
                    break;
                }
                prev = v;
            }
            if (ok && a[prev][vs[0]]) ++directed;
        } while (std::next_permutation(rest.begin(), rest.end()));
        for (int v : vs) per_vertex[v][k] += directed / 2;
    }
    return per_vertex;
}

inline std::map<int, std::uint64_t> total_cycles(const Graph& g, int kmax) {
    const auto pv = cycle_counts(g, kmax);
    std::map<int, std::uint64_t> out;
    for (int k = 3; k <= kmax; ++k) {
        std::uint64_t sum = 0;
        for (const auto& row : pv) sum += row[k];
        out[k] = sum / k;
    }
    return out;
}

inline int girth(const Graph& g) {
    const auto t = total_cycles(g, g.num_vertices());
    for (const auto& [k, c] : t)
        if (c > 0) return k;
    return std::numeric_limits<int>::max();
}

inline bool induced_connected(const Graph& g, std::uint32_t mask) {
    if (mask == 0) return false;
    const auto a = adjacency_matrix(g);
    const int n = g.num_vertices();
    std::uint32_t seen = mask & (~mask + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            if (!(seen >> u & 1U)) continue;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v & 1U) && !(seen >> v & 1U) && a[u][v]) {
                    seen |= 1U << v;
                    grew = true;
                }
            }
        }
    }
    return seen == mask;
}

// Connected induced subsets containing v, bucketed by size.
inline std::vector<std::uint64_t> connected_set_counts(const Graph& g, Vertex v, int s_max) {
    std::vector<std::uint64_t> out(s_max + 1, 0);
    const int n = g.num_vertices();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const int s = std::popcount(mask);
        if (s > s_max || !(mask >> v & 1U)) continue;
        if (induced_connected(g, mask)) ++out[s];
    }
    return out;
}

inline std::int64_t boundary(const Graph& g, std::uint32_t mask) {
    std::int64_t b = 0;
    for (const auto& e : g.edges()) b += ((mask >> e.u) & 1U) != ((mask >> e.v) & 1U);
    return b;
}

inline double cheeger(const Graph& g) {
    const int n = g.num_vertices();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const int s = std::popcount(mask);
        if (2 * s > n) continue;
        best = std::min(best, static_cast<double>(boundary(g, mask)) / s);
    }
    return best;
}

// Floyd-Warshall; -1 when disconnected.
inline int diameter(const Graph& g) {
    const int n = g.num_vertices();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) dist[v][v] = 0;
    for (const auto& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (dist[i][j] >= inf) return -1;
            best = std::max(best, dist[i][j]);
        }
    return best;
}

// (A^k)_{vv} by repeated dense multiplication.
inline std::uint64_t closed_walks(const Graph& g, Vertex v, int k) {
    const auto a = adjacency_matrix(g);
    const int n = g.num_vertices();
    std::vector<std::vector<std::uint64_t>> p(n, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (p[i][l])
                    for (int j = 0; j < n; ++j) q[i][j] += p[i][l] * static_cast<std::uint64_t>(a[l][j]);
        p = std::move(q);
    }
    return p[v][v];
}

// P(Binomial(b, p) <= t) by direct summation of binomial coefficients.
inline double binomial_lower_tail(std::int64_t b, double p, double t) {
    if (t < 0) return 0.0;
    long double sum = 0;
    long double coef = 1;
    for (std::int64_t k = 0; k <= b && k <= static_cast<std::int64_t>(t); ++k) {
        sum += coef * std::pow(static_cast<long double>(p), k) * std::pow(1.0L - p, b - k);
        coef = coef * (b - k) / (k + 1);
    }
    return static_cast<double>(sum);
}

}  // namespace oracle
