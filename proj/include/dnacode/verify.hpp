#ifndef DNACODE_VERIFY_HPP
#define DNACODE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>

#include "dnacode/code.hpp"

namespace dnacode {

struct VerifyReport {
    int min_pairwise_distance = -1;   // -1 when fewer than two words
    int min_cross_distance = -1;      // over all ordered pairs incl. self; -1 for GC
    std::set<int> gc_contents;
    int duplicate_count = 0;
    bool pass = false;
};

// Exhaustive O(M^2) check against the declared parameters, using a
// character-by-character distance written independently of the packed kernel.
VerifyReport verify(const Code& code);

// Distance on string forms; the oracle the packed kernel is checked against.
int reference_distance(const std::string& a, const std::string& b);

// Exact maximum code size via branch-and-bound maximum clique on the
// compatibility graph.  Returns nullopt when the search exceeds node_cap
// branch nodes.  Intended for C(n,w)*2^n up to a few thousand words.
std::optional<std::uint64_t> exact_max_code(int n, int d, int w, ConstraintKind kind,
                                            std::uint64_t node_cap = 50'000'000);

}  // namespace dnacode

#endif
