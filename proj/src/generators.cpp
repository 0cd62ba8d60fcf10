#include "girthspan/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace girthspan {

namespace {

bool has_neighbor(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

// One pass of the pairing process; false on a dead end.
bool try_pairing(int n, int d, Xoshiro256& rng, std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    edges.clear();

    constexpr int kQuickTries = 64;
    while (!stubs.empty()) {
        const auto size = stubs.size();
        std::size_t i = 0;
        std::size_t j = 0;
        bool found = false;
        for (int t = 0; t < kQuickTries && !found; ++t) {
            i = rng.below(size);
            j = rng.below(size);
            found = i != j && stubs[i] != stubs[j] && !has_neighbor(adj, stubs[i], stubs[j]);
        }
        if (!found) {
            std::vector<std::pair<std::size_t, std::size_t>> suitable;
            for (std::size_t x = 0; x < size; ++x) {
                for (std::size_t y = x + 1; y < size; ++y) {
                    if (stubs[x] != stubs[y] && !has_neighbor(adj, stubs[x], stubs[y])) {
                        suitable.emplace_back(x, y);
                    }
                }
            }
            if (suitable.empty()) return false;
            std::tie(i, j) = suitable[rng.below(suitable.size())];
        }
        const Vertex u = stubs[i];
        const Vertex v = stubs[j];
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
    }
    return true;
}

}  // namespace

Graph random_regular(int n, int d, Seed seed, const RandomRegularOptions& options) {
    if (d < 3 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("random_regular needs 3 <= d < n and n*d even (n=" +
                                    std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }
    Xoshiro256 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
        if (try_pairing(n, d, rng, edges)) {
            return Graph::from_edges(n, edges);
        }
    }
    throw GeneratorError("random_regular: retry budget exhausted after " +
                         std::to_string(options.max_restarts) + " restarts");
}

Mat2 Mat2::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p) {
    auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
    return {mod(a), mod(b), mod(c), mod(d), p};
}

std::int64_t Mat2::det() const { return ((a * d - b * c) % p + p) % p; }

Mat2 Mat2::inverse() const { return make(d, -b, -c, a, p); }

Mat2 Mat2::operator*(const Mat2& r) const {
    return make(a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d, p);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t f = 2; f * f <= p; ++f) {
        if (p % f == 0) return false;
    }
    return true;
}

std::vector<Mat2> default_sl2_generators(std::int64_t p) {
    return {Mat2::make(1, 2, 0, 1, p), Mat2::make(1, 0, 2, 1, p)};
}

std::vector<Mat2> sl2_elements(std::int64_t p) {
    std::vector<Mat2> out;
    out.reserve(static_cast<std::size_t>(p * (p * p - 1)));
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) out.push_back({a, b, c, d, p});
    return out;
}

Graph cayley_sl2(std::int64_t p, std::vector<Mat2> generators, const CayleyOptions& options) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("cayley_sl2 needs an odd prime, got " + std::to_string(p));
    }
    if (p > options.max_prime) {
        throw std::invalid_argument("cayley_sl2: p=" + std::to_string(p) + " exceeds the cap " +
                                    std::to_string(options.max_prime));
    }
    std::vector<Mat2> closed;
    for (const Mat2& g : generators) {
        const Mat2 s = Mat2::make(g.a, g.b, g.c, g.d, p);
        if (s.det() != 1) {
            throw std::invalid_argument("cayley_sl2: generator is not in SL2 (det != 1 mod p)");
        }
        if (s.is_identity()) {
            throw std::invalid_argument("cayley_sl2: identity generator would create loops");
        }
        closed.push_back(s);
        closed.push_back(s.inverse());
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

    const auto elements = sl2_elements(p);
    auto index_of = [&](const Mat2& m) {
        return static_cast<Vertex>(std::lower_bound(elements.begin(), elements.end(), m) - elements.begin());
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(elements.size() * closed.size() / 2);
    for (std::size_t x = 0; x < elements.size(); ++x) {
        for (const Mat2& s : closed) {
            const Vertex y = index_of(s * elements[x]);
            if (static_cast<Vertex>(x) < y) edges.emplace_back(static_cast<Vertex>(x), y);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(static_cast<int>(elements.size()), edges);
}

Graph cayley_sl2(std::int64_t p, const CayleyOptions& options) {
    return cayley_sl2(p, default_sl2_generators(p), options);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph fixture(std::string_view name, int n) {
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "path") return path_graph(n);
    if (name == "petersen") return petersen_graph();
    throw std::invalid_argument("unknown fixture \"" + std::string(name) + "\"");
}

}  // namespace girthspan
