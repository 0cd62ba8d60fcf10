#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace girthspan {

using Vertex = int;
using EdgeId = int;

/// Raised for malformed graphs and edge-list input.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exponential enumeration exceeds its configured item cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    std::size_t max_items = 10'000'000;
};

/// Undirected edge with u < v.
struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Edges are numbered in lexicographic order of (min, max) endpoint.  Each
/// adjacency slot carries the id of its edge, so directed variables
/// (edge id, direction) can be looked up without hashing.
class Graph {
public:
    Graph() = default;

    /// Validates simplicity and range; edge order in the input is irrelevant.
    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
    }
    int degree_of(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    /// Common degree, present only when every vertex has the same degree.
    std::optional<int> regular_degree() const { return degree_; }
    bool is_regular(int d) const { return degree_ && *degree_ == d; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    /// Edge id joining u and v, if adjacent.
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    bool contains_vertex(Vertex v) const { return v >= 0 && v < n_; }

    /// True when every edge of `sub` is an edge of this graph and both share V.
    bool is_spanning_supergraph_of(const Graph& sub) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::optional<int> degree_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
    std::vector<EdgeId> edge_ids_;
    std::vector<Edge> edges_;
};

/// Dense membership set over V(G).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : member_(static_cast<std::size_t>(n), 0) {}
    VertexSet(int n, std::span<const Vertex> members);

    int universe() const { return static_cast<int>(member_.size()); }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool contains(Vertex v) const { return member_[static_cast<std::size_t>(v)] != 0; }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted member list.
    std::vector<Vertex> members() const;
    VertexSet complement() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<std::uint8_t> member_;
    int size_ = 0;
};

/// Cycle stored in canonical form: starts at its smallest vertex and the
/// second vertex is smaller than the last.  Each geometric cycle therefore has
/// exactly one representation.
class Cycle {
public:
    /// Canonicalizes any rotation/reflection of a vertex cycle.
    static Cycle canonical(std::vector<Vertex> vertices);

    std::size_t length() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    bool passes_through(Vertex v) const;

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Checks the cycle's vertices are distinct and cyclically adjacent in g.
bool is_cycle_of(const Graph& g, const Cycle& c);

// Edge-list text format: "n m" header, then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);
std::string to_edge_list_string(const Graph& g);

}  // namespace girthspan
