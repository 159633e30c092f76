#include "dnacode/scan.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dnacode {

bool min_distance_at_least_serial(std::uint64_t candidate,
                                  std::span<const std::uint64_t> words,
                                  int d, std::uint64_t low_lanes) {
    for (std::uint64_t w : words) {
        if (packed_hamming(candidate, w, low_lanes) < d) return false;
    }
    return true;
}

bool min_distance_at_least_parallel(std::uint64_t candidate,
                                    std::span<const std::uint64_t> words,
                                    int d, std::uint64_t low_lanes) {
    const std::size_t m = words.size();
    std::atomic<bool> violated{false};
    constexpr std::size_t kChunk = 4096;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>((m + kChunk - 1) / kChunk); ++c) {
        if (violated.load(std::memory_order_relaxed)) continue;
        std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        std::size_t end = std::min(begin + kChunk, m);
        for (std::size_t i = begin; i < end; ++i) {
            if (packed_hamming(candidate, words[i], low_lanes) < d) {
                violated.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    return !violated.load();
}

bool min_distance_at_least(std::uint64_t candidate,
                           std::span<const std::uint64_t> words,
                           int d, std::uint64_t low_lanes) {
#ifdef _OPENMP
    if (words.size() >= 1u << 15 && omp_get_max_threads() > 1)
        return min_distance_at_least_parallel(candidate, words, d, low_lanes);
#endif
    return min_distance_at_least_serial(candidate, words, d, low_lanes);
}

int min_distance_serial(std::uint64_t candidate,
                        std::span<const std::uint64_t> words,
                        std::uint64_t low_lanes, int n) {
    int best = n + 1;
    for (std::uint64_t w : words) best = std::min(best, packed_hamming(candidate, w, low_lanes));
    return best;
}

int min_distance_parallel(std::uint64_t candidate,
                          std::span<const std::uint64_t> words,
                          std::uint64_t low_lanes, int n) {
    int best = n + 1;
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(words.size());
#ifdef _OPENMP
#pragma omp parallel for reduction(min : best) schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < m; ++i)
        best = std::min(best, packed_hamming(candidate, words[static_cast<std::size_t>(i)], low_lanes));
    return best;
}

}  // namespace dnacode
