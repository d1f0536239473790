// Timing comparison between the OpenMP kernels and their serial twins.
// Build target: bench_kernels.  Not wired into ctest; run by hand.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "numrad/ensembles.hpp"
#include "numrad/fuzz.hpp"
#include "numrad/radius.hpp"
#include "numrad/rng.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n", threads);

    {
        numrad::Rng rng(2024);
        const numrad::ComplexMatrix t = numrad::random_matrix(rng, 8, numrad::Ensemble::ginibre);
        const std::size_t points = 2048;
        const int repeats = 5;

        // warm both paths once so allocation noise stays out of the timings
        auto parallel = numrad::rotated_spectrum_grid(t, points);
        auto serial = numrad::rotated_spectrum_grid_serial(t, points);
        const bool equal = parallel == serial;

        auto start = Clock::now();
        for (int r = 0; r < repeats; ++r) serial = numrad::rotated_spectrum_grid_serial(t, points);
        const double t_serial = seconds_since(start) / repeats;

        start = Clock::now();
        for (int r = 0; r < repeats; ++r) parallel = numrad::rotated_spectrum_grid(t, points);
        const double t_parallel = seconds_since(start) / repeats;

        std::printf("theta grid (dim 8, %zu points): serial %.1f ms, parallel %.1f ms, "
                    "speedup %.2fx, outputs %s\n",
                    points, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel,
                    equal ? "identical" : "DIFFER");
    }

    {
        numrad::FuzzConfig cfg;
        cfg.seed = 1;
        cfg.trials = 40;
        cfg.dim = 4;

        auto start = Clock::now();
        const numrad::VerificationReport serial = numrad::fuzz_verify_serial(cfg);
        const double t_serial = seconds_since(start);

        start = Clock::now();
        const numrad::VerificationReport parallel = numrad::fuzz_verify(cfg);
        const double t_parallel = seconds_since(start);

        const bool equal =
            numrad::format_report_table(serial) == numrad::format_report_table(parallel);
        std::printf("fuzz batch (%d trials, dim %zu): serial %.2f s, parallel %.2f s, "
                    "speedup %.2fx, reports %s\n",
                    cfg.trials, cfg.dim, t_serial, t_parallel, t_serial / t_parallel,
                    equal ? "identical" : "DIFFER");
    }
    return 0;
}
