#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "girthspan/graph.hpp"
#include "girthspan/random.hpp"

namespace girthspan {

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RandomRegularOptions {
    int max_restarts = 1000;
};

/// Simple d-regular graph from the pairing model: stubs are paired at random
/// and pairs that would create a loop or a repeated edge are redrawn; a dead
/// end restarts the whole pairing.  Same (n, d, seed) gives the same graph.
Graph random_regular(int n, int d, Seed seed, const RandomRegularOptions& options = {});

/// 2x2 matrix over Z/pZ.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    std::int64_t p = 3;

    static Mat2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t p);
    std::int64_t det() const;
    /// Inverse of a determinant-one matrix.
    Mat2 inverse() const;
    Mat2 operator*(const Mat2& rhs) const;
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

bool is_prime(std::int64_t p);

/// [[1,2],[0,1]] and [[1,0],[2,1]] reduced mod p; they generate a free
/// subgroup of SL2(Z).
std::vector<Mat2> default_sl2_generators(std::int64_t p);

struct CayleyOptions {
    std::int64_t max_prime = 31;
};

/// Cayley graph of SL2(Z/pZ): one vertex per group element, x ~ s x for each
/// generator s.  The generator set is closed under inverses and deduplicated,
/// so the graph is |S|-regular on p(p^2-1) vertices.
Graph cayley_sl2(std::int64_t p, std::vector<Mat2> generators, const CayleyOptions& options = {});
Graph cayley_sl2(std::int64_t p, const CayleyOptions& options = {});

/// Elements of SL2(Z/pZ) in lexicographic (a, b, c, d) order; cayley_sl2
/// numbers its vertices by position in this list.
std::vector<Mat2> sl2_elements(std::int64_t p);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

/// Named fixture: "cycle", "complete", "path" take `n`; "petersen" ignores it.
Graph fixture(std::string_view name, int n = 0);

}  // namespace girthspan
