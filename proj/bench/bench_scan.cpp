// Throughput comparison of the serial and OpenMP candidate-scan kernels.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dnacode/scan.hpp"

using namespace dnacode;
using clk = std::chrono::steady_clock;

namespace {

double run(bool parallel, const std::vector<std::uint64_t>& words,
           const std::vector<std::uint64_t>& candidates, int d, std::uint64_t lanes,
           std::size_t& accepted) {
    accepted = 0;
    auto start = clk::now();
    for (std::uint64_t cand : candidates) {
        bool ok = parallel ? min_distance_at_least_parallel(cand, words, d, lanes)
                           : min_distance_at_least_serial(cand, words, d, lanes);
        accepted += ok;
    }
    return std::chrono::duration<double>(clk::now() - start).count();
}

}  // namespace

int main() {
    // d is low enough that random candidates almost never early-exit, so each
    // one scans the full store
    const int n = 16, d = 5;
    const std::size_t num_words = 1 << 17, num_candidates = 2000;
    std::mt19937_64 rng(42);
    std::uint64_t mask = (1ull << (2 * n)) - 1;

    std::vector<std::uint64_t> words(num_words), candidates(num_candidates);
    for (auto& w : words) w = rng() & mask;
    for (auto& c : candidates) c = rng() & mask;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("scan benchmark: n=%d d=%d, %zu stored words, %zu candidates, %d thread(s)\n",
                n, d, num_words, num_candidates, threads);

    std::size_t acc_serial = 0, acc_parallel = 0;
    // warm up, then measure
    run(false, words, candidates, d, lane_mask(n), acc_serial);
    double t_serial = run(false, words, candidates, d, lane_mask(n), acc_serial);
    double t_parallel = run(true, words, candidates, d, lane_mask(n), acc_parallel);

    double pairs = static_cast<double>(num_words) * static_cast<double>(num_candidates);
    std::printf("serial   %8.3f s  (%.1f Mpairs/s upper bound)\n", t_serial,
                pairs / t_serial / 1e6);
    std::printf("parallel %8.3f s  (%.1f Mpairs/s upper bound)\n", t_parallel,
                pairs / t_parallel / 1e6);
    std::printf("speedup  %.2fx\n", t_serial / t_parallel);

    if (acc_serial != acc_parallel) {
        std::printf("MISMATCH: serial accepted %zu, parallel accepted %zu\n", acc_serial,
                    acc_parallel);
        return 1;
    }
    std::printf("kernels agree (%zu accepted)\n", acc_serial);
    return 0;
}
