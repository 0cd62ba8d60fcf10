#include "girthspan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "girthspan/combinatorics.hpp"
#include "girthspan/kernels.hpp"

namespace girthspan {

std::string_view to_string(SolverMethod m) {
    return m == SolverMethod::dense ? "dense" : "iterative";
}

namespace {

int require_regular(const Graph& g) {
    const auto d = g.regular_degree();
    if (!d || *d == 0) {
        throw SpectralError("normalized Laplacian spectrum needs a regular graph of positive degree");
    }
    if (g.num_vertices() < 2) {
        throw SpectralError("lambda2 needs at least two vertices");
    }
    return *d;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

void remove_constant(std::vector<double>& x) {
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    for (double& xi : x) xi -= mean;
}

double normalize(std::vector<double>& x) {
    const double norm = std::sqrt(dot(x, x));
    if (norm > 0.0) {
        for (double& xi : x) xi /= norm;
    }
    return norm;
}

// y = (A / d) x
void apply_walk(const Graph& g, double d, const std::vector<double>& x, std::vector<double>& y) {
    kernels::omp::adjacency_apply(g, x, y);
    for (double& yi : y) yi /= d;
}

double residual_norm(const Graph& g, double d, const std::vector<double>& x, double mu) {
    std::vector<double> y(x.size());
    apply_walk(g, d, x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += (y[i] - mu * x[i]) * (y[i] - mu * x[i]);
    return std::sqrt(sum);
}

FiedlerPair solve_dense(const Graph& g, int d, const SpectralOptions& options) {
    const int n = g.num_vertices();
    Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        walk(e.u, e.v) = 1.0 / d;
        walk(e.v, e.u) = 1.0 / d;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(walk);
    if (solver.info() != Eigen::Success) {
        throw SpectralError("dense eigensolver failed to converge");
    }
    // Ascending eigenvalues of A/d; the top one is the constant vector's 1.
    const double mu2 = solver.eigenvalues()(n - 2);
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vec[i] = solver.eigenvectors()(i, n - 2);
    FiedlerPair out;
    out.summary.lambda2 = 1.0 - mu2;
    out.summary.method = SolverMethod::dense;
    out.summary.tolerance = options.dense_tolerance;
    out.summary.residual = residual_norm(g, d, vec, mu2);
    out.vector = std::move(vec);
    return out;
}

// Lanczos with full reorthogonalization on A/d restricted to the complement
// of the constant vector; explicit restarts from the current Ritz vector.
FiedlerPair solve_lanczos(const Graph& g, int d, const SpectralOptions& options) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    const int m = std::max(2, std::min(options.krylov_dimension, g.num_vertices() - 1));
    const double target = options.iterative_tolerance * 1e-2;

    Xoshiro256 rng(options.seed);
    std::vector<double> start(n);
    for (double& x : start) x = rng.uniform() - 0.5;
    remove_constant(start);
    normalize(start);

    FiedlerPair out;
    out.summary.method = SolverMethod::iterative;
    out.summary.tolerance = options.iterative_tolerance;
    std::vector<double> w(n);
    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        std::vector<std::vector<double>> basis{start};
        std::vector<double> alpha;
        std::vector<double> beta;
        for (int j = 0; j < m; ++j) {
            apply_walk(g, d, basis[j], w);
            ++out.summary.iterations;
            remove_constant(w);
            alpha.push_back(dot(w, basis[j]));
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& q : basis) {
                    const double c = dot(w, q);
                    for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
                }
            }
            remove_constant(w);
            const double b = normalize(w);
            if (b < 1e-12 || j + 1 == m) break;
            beta.push_back(b);
            basis.push_back(w);
        }
        const auto k = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag(k);
        Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
        for (Eigen::Index i = 0; i < k; ++i) diag(i) = alpha[i];
        for (Eigen::Index i = 0; i + 1 < k; ++i) sub(i) = beta[i];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub);
        const double mu = tri.eigenvalues()(k - 1);
        std::vector<double> ritz(n, 0.0);
        for (Eigen::Index c = 0; c < k; ++c) {
            const double y = tri.eigenvectors()(c, k - 1);
            for (std::size_t i = 0; i < n; ++i) ritz[i] += y * basis[c][i];
        }
        remove_constant(ritz);
        normalize(ritz);
        out.summary.lambda2 = 1.0 - mu;
        out.summary.residual = residual_norm(g, d, ritz, mu);
        out.vector = ritz;
        if (out.summary.residual <= target) break;
        start = std::move(ritz);
    }
    if (out.summary.residual > options.iterative_tolerance) {
        throw SpectralError("Lanczos did not reach residual " +
                            std::to_string(options.iterative_tolerance) + " (got " +
                            std::to_string(out.summary.residual) + ")");
    }
    return out;
}

}  // namespace

FiedlerPair fiedler(const Graph& g, const SpectralOptions& options) {
    const int d = require_regular(g);
    if (!is_connected(g)) {
        FiedlerPair out;
        out.summary.disconnected = true;
        out.summary.lambda2 = 0.0;
        return out;
    }
    const SolverMethod method = options.force.value_or(
        g.num_vertices() <= options.dense_max_n ? SolverMethod::dense : SolverMethod::iterative);
    return method == SolverMethod::dense ? solve_dense(g, d, options) : solve_lanczos(g, d, options);
}

SpectralSummary lambda2(const Graph& g, const SpectralOptions& options) {
    return fiedler(g, options).summary;
}

CheegerSandwich cheeger_sandwich(int d, double lambda2) {
    if (lambda2 < 0.0 || lambda2 > 2.0) {
        throw std::invalid_argument("lambda2 must lie in [0, 2]");
    }
    return {d * lambda2 / 2.0, std::sqrt(2.0 * d * lambda2)};
}

double cycle_count_bound(int d, int n, double lambda2, int k) {
    if (k < 3) throw std::invalid_argument("cycle_count_bound needs k >= 3");
    const double dk = std::pow(static_cast<double>(d), k);
    return dk / n + dk * std::pow(std::abs(1.0 - lambda2), k);
}

std::uint64_t closed_walks_through(const Graph& g, Vertex v, int k) {
    if (k < 1) throw std::invalid_argument("closed_walks_through needs k >= 1");
    if (!g.contains_vertex(v)) throw GraphError("vertex out of range");
    int max_deg = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) max_deg = std::max(max_deg, g.degree_of(u));
    if (max_deg > 1 && k * std::log2(static_cast<double>(max_deg)) >= 63.0) {
        throw std::overflow_error("closed walk count may exceed 64 bits");
    }
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<std::uint64_t> x(n, 0);
    std::vector<std::uint64_t> y(n, 0);
    x[v] = 1;
    for (int step = 0; step < k; ++step) {
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            std::uint64_t sum = 0;
            for (Vertex w : g.neighbors(u)) sum += x[w];
            y[u] = sum;
        }
        std::swap(x, y);
    }
    return x[v];
}

bool is_ramanujan_or_better(int d, double lambda2) {
    return lambda2 >= 1.0 - 2.0 * std::sqrt(d - 1.0) / d;
}

}  // namespace girthspan
