#include "girthspan/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace girthspan {

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> input) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(input.size());
    for (const auto& [a, b] : input) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError("vertex id out of range in edge (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
        }
        if (a == b) {
            throw GraphError("self-loop at vertex " + std::to_string(a));
        }
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + ", " +
                         std::to_string(dup->v) + ")");
    }

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    }
    g.neighbors_.resize(g.offsets_[n]);
    g.edge_ids_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Lexicographic edge order fills every adjacency row in sorted order:
    // smaller neighbors arrive through (w, v) edges before larger ones via (v, w).
    for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
        const Edge& e = g.edges_[id];
        g.neighbors_[fill[e.u]] = e.v;
        g.edge_ids_[fill[e.u]++] = id;
        g.neighbors_[fill[e.v]] = e.u;
        g.edge_ids_[fill[e.v]++] = id;
    }
    if (n > 0 && std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == deg[0]; })) {
        g.degree_ = static_cast<int>(deg[0]);
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    if (!contains_vertex(u) || !contains_vertex(v)) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

bool Graph::is_spanning_supergraph_of(const Graph& sub) const {
    if (sub.n_ != n_) return false;
    return std::includes(edges_.begin(), edges_.end(), sub.edges_.begin(), sub.edges_.end());
}

VertexSet::VertexSet(int n, std::span<const Vertex> members) : VertexSet(n) {
    for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
    auto& slot = member_.at(static_cast<std::size_t>(v));
    size_ += slot == 0;
    slot = 1;
}

void VertexSet::erase(Vertex v) {
    auto& slot = member_.at(static_cast<std::size_t>(v));
    size_ -= slot != 0;
    slot = 0;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t v = 0; v < member_.size(); ++v) {
        if (member_[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe());
    for (std::size_t v = 0; v < member_.size(); ++v) {
        if (!member_[v]) out.insert(static_cast<Vertex>(v));
    }
    return out;
}

Cycle Cycle::canonical(std::vector<Vertex> vertices) {
    if (vertices.size() < 3) {
        throw GraphError("a cycle needs at least 3 vertices");
    }
    auto min_it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), min_it, vertices.end());
    if (vertices[1] > vertices.back()) {
        std::reverse(vertices.begin() + 1, vertices.end());
    }
    Cycle c;
    c.vertices_ = std::move(vertices);
    return c;
}

bool Cycle::passes_through(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices();
    if (vs.size() < 3) return false;
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    }
    return true;
}

namespace {

// Strips a '#' comment and reports whether anything but whitespace remains.
bool content_line(std::string& line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!content_line(line)) continue;
        std::istringstream fields(line);
        long long a = 0;
        long long b = 0;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw GraphError("line " + std::to_string(line_no) + ": expected two integers");
        }
        if (n < 0) {
            if (a < 0 || b < 0 || a > (1LL << 30)) {
                throw GraphError("line " + std::to_string(line_no) + ": bad header");
            }
            n = a;
            m = b;
            edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
            continue;
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (n < 0) {
        throw GraphError("missing \"n m\" header");
    }
    if (static_cast<long long>(edges.size()) != m) {
        throw GraphError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were listed");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open " + path);
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) {
        throw GraphError("cannot write " + path);
    }
    write_edge_list(out, g);
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace girthspan
