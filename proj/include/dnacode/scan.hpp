#ifndef DNACODE_SCAN_HPP
#define DNACODE_SCAN_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "dnacode/words.hpp"

namespace dnacode {

// Hot kernel of the greedy construction: test whether a candidate word keeps
// Hamming distance >= d to every word in a packed array.  The OpenMP variant
// must return exactly what the serial reference returns; the serial one is
// kept both as the oracle for tests and for small scans where threading
// overhead dominates.

bool min_distance_at_least_serial(std::uint64_t candidate,
                                  std::span<const std::uint64_t> words,
                                  int d, std::uint64_t low_lanes);

bool min_distance_at_least_parallel(std::uint64_t candidate,
                                    std::span<const std::uint64_t> words,
                                    int d, std::uint64_t low_lanes);

// Dispatches on problem size.
bool min_distance_at_least(std::uint64_t candidate,
                           std::span<const std::uint64_t> words,
                           int d, std::uint64_t low_lanes);

// Exact minimum over the array (no early exit); used by verification-style
// reporting.  Returns d_max+1 sentinel (2n+1 fits) when the array is empty.
int min_distance_serial(std::uint64_t candidate,
                        std::span<const std::uint64_t> words,
                        std::uint64_t low_lanes, int n);

int min_distance_parallel(std::uint64_t candidate,
                          std::span<const std::uint64_t> words,
                          std::uint64_t low_lanes, int n);

}  // namespace dnacode

#endif
