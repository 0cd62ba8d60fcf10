#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "girthspan/graph.hpp"

namespace girthspan {

using CycleSet = std::vector<Cycle>;

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Exact number of distinct cycles of each length 3..kmax through v.
std::map<int, std::uint64_t> count_cycles_through(const Graph& g, Vertex v, int kmax);

/// Per-k maximum over vertices of the number of length-k cycles through a
/// vertex, for 3 <= k <= kmax.  Entries with no cycles are omitted.
std::map<int, std::uint64_t> max_cycle_counts(const Graph& g, int kmax);

/// Every cycle shorter than g_bound, once each, in lexicographic order of
/// canonical form.
CycleSet enumerate_short_cycles(const Graph& g, int g_bound, const EnumerationLimits& limits = {});

/// Receives the members of one connected set, in discovery order.
using ConnectedSetVisitor = std::function<void(std::span<const Vertex>)>;

/// Streams every vertex set S with v in S, |S| <= s_max and G[S] connected,
/// each exactly once.  With `only_above_v`, restricts to sets whose smallest
/// vertex is v; iterating v over V then covers every connected set once.
void for_each_connected_set(const Graph& g, Vertex v, int s_max, const ConnectedSetVisitor& visit,
                            bool only_above_v = false, const EnumerationLimits& limits = {});

/// Materialized form of for_each_connected_set; each set sorted ascending.
std::vector<std::vector<Vertex>> connected_sets_through(const Graph& g, Vertex v, int s_max,
                                                        const EnumerationLimits& limits = {});

/// Upper bound on connected sets of size s through a vertex of a d-regular
/// graph: 1 for s = 1, d (d-1)^(s-2) binom(2s-2, s-1) for s >= 2.
double connected_set_count_bound(int d, int s);

std::int64_t edge_boundary(const Graph& g, const VertexSet& s);
std::int64_t edge_boundary(const Graph& g, std::span<const Vertex> members, const VertexSet& s);

/// Longest shortest-path distance; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components of the subgraph induced by S.
std::vector<std::vector<Vertex>> induced_components(const Graph& g, const VertexSet& s);

}  // namespace girthspan
