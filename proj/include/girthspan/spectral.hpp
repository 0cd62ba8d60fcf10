#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "girthspan/graph.hpp"
#include "girthspan/random.hpp"

namespace girthspan {

class SpectralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SolverMethod { dense, iterative };

std::string_view to_string(SolverMethod m);

/// Second-smallest eigenvalue of the normalized Laplacian I - A/d.
struct SpectralSummary {
    double lambda2 = 0.0;
    SolverMethod method = SolverMethod::dense;
    double residual = 0.0;      // ||M x - mu x|| for the returned eigenvector, M = A/d
    double tolerance = 0.0;     // what the solver was asked to reach
    int iterations = 0;         // Lanczos steps (iterative only)
    bool disconnected = false;  // lambda2 reported as 0 without solving
};

struct SpectralOptions {
    int dense_max_n = 2000;
    double dense_tolerance = 1e-9;
    double iterative_tolerance = 1e-6;
    int krylov_dimension = 120;
    int max_restarts = 200;
    Seed seed = 0x5eed;
    std::optional<SolverMethod> force;
};

/// lambda2 by the dense solver up to dense_max_n vertices, Lanczos above.
/// Requires a regular graph with at least two vertices.
SpectralSummary lambda2(const Graph& g, const SpectralOptions& options = {});

struct FiedlerPair {
    SpectralSummary summary;
    std::vector<double> vector;  // unit eigenvector orthogonal to the constant vector
};

/// lambda2 together with its eigenvector.
FiedlerPair fiedler(const Graph& g, const SpectralOptions& options = {});

struct CheegerSandwich {
    double lower = 0.0;  // d lambda2 / 2
    double upper = 0.0;  // sqrt(2 d lambda2)
};

CheegerSandwich cheeger_sandwich(int d, double lambda2);

/// d^k / n + d^k |1 - lambda2|^k, the spectral bound on length-k cycles
/// through a vertex of a d-regular graph on n vertices.
double cycle_count_bound(int d, int n, double lambda2, int k);

/// (A^k)_{vv}: closed walks of length k from v, by k sparse products.
std::uint64_t closed_walks_through(const Graph& g, Vertex v, int k);

/// lambda2 >= 1 - 2 sqrt(d-1) / d.
bool is_ramanujan_or_better(int d, double lambda2);

}  // namespace girthspan
