// Times the serial reference kernels against the OpenMP ones on the same
// inputs and checks that they agree.
//
//   bench_kernels [--n N] [--d D] [--repeat R] [--seed S]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "girthspan/generators.hpp"
#include "girthspan/kernels.hpp"

using namespace girthspan;

namespace {

double best_of(int repeat, const std::function<void()>& body) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const double t0 = omp_get_wtime();
        body();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const char* name, double serial_s, double omp_s, bool agree) {
    std::printf("%-22s %12.6f %12.6f %8.2fx  %s\n", name, serial_s, omp_s,
                omp_s > 0 ? serial_s / omp_s : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int n = 2000;
    int d = 16;
    int small_n = 20;
    int repeat = 3;
    Seed seed = 1;
    CLI::App app{"serial vs OpenMP kernel timings", "bench_kernels"};
    app.add_option("--n", n, "vertices for the graph kernels");
    app.add_option("--d", d, "degree");
    app.add_option("--small-n", small_n, "vertices for the subset kernels (<= 30)");
    app.add_option("--repeat", repeat, "timing repetitions, best kept");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    const Graph g = random_regular(n, d, seed);
    const Graph small = random_regular(small_n, 4, seed);
    std::printf("threads=%d  G: n=%d d=%d  small: n=%d d=4\n", omp_get_max_threads(), n, d, small_n);
    std::printf("%-22s %12s %12s %9s\n", "kernel", "serial[s]", "omp[s]", "speedup");

    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    std::vector<double> ys(x.size());
    std::vector<double> yo(x.size());
    for (int i = 0; i < n; ++i) x[i] = std::sin(0.1 * i);
    const double ts = best_of(repeat * 20, [&] { kernels::serial::adjacency_apply(g, x, ys); });
    const double to = best_of(repeat * 20, [&] { kernels::omp::adjacency_apply(g, x, yo); });
    row("adjacency_apply", ts, to, ys == yo);

    std::optional<int> gs;
    std::optional<int> go;
    row("girth", best_of(repeat, [&] { gs = kernels::serial::girth(g); }),
        best_of(repeat, [&] { go = kernels::omp::girth(g); }), gs == go);

    kernels::CycleCountTable cs;
    kernels::CycleCountTable co;
    row("vertex_cycle_counts", best_of(repeat, [&] { cs = kernels::serial::vertex_cycle_counts(g, 5); }),
        best_of(repeat, [&] { co = kernels::omp::vertex_cycle_counts(g, 5); }), cs.counts == co.counts);

    std::vector<Cycle> ss;
    std::vector<Cycle> so;
    row("short_cycles", best_of(repeat, [&] { ss = kernels::serial::short_cycles(g, 6, 10'000'000); }),
        best_of(repeat, [&] { so = kernels::omp::short_cycles(g, 6, 10'000'000); }), ss == so);

    kernels::CutRatio rs;
    kernels::CutRatio ro;
    row("min_cut_ratio", best_of(repeat, [&] { rs = kernels::serial::min_cut_ratio(small); }),
        best_of(repeat, [&] { ro = kernels::omp::min_cut_ratio(small); }),
        rs.boundary == ro.boundary && rs.size == ro.size && rs.mask == ro.mask);

    kernels::SlackMinimum ms;
    kernels::SlackMinimum mo;
    row("min_boundary_slack",
        best_of(repeat, [&] { ms = kernels::serial::min_boundary_slack(small, small, 0.25, 0.5); }),
        best_of(repeat, [&] { mo = kernels::omp::min_boundary_slack(small, small, 0.25, 0.5); }),
        ms.slack == mo.slack && ms.mask == mo.mask);
    return 0;
}
