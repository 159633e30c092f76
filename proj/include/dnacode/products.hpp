#ifndef DNACODE_PRODUCTS_HPP
#define DNACODE_PRODUCTS_HPP

#include <optional>
#include <vector>

#include "dnacode/code.hpp"

namespace dnacode {

// A binary or ternary component code feeding the product constructions.
// If r_constrained, hamming(x, y^R) >= d holds for all ordered pairs.
struct ComponentCode {
    int alphabet = 2;  // 2 or 3
    int n = 0;
    int d = 0;
    std::optional<int> w;  // constant weight, when imposed
    bool r_constrained = false;
    std::vector<BinaryWord> binary_words;    // used when alphabet == 2
    std::vector<TernaryWord> ternary_words;  // used when alphabet == 3

    std::size_t size() const {
        return alphabet == 2 ? binary_words.size() : ternary_words.size();
    }
};

// All 2^{n-1} even-weight words; minimum distance 2.
ComponentCode parity_code(int n);

// Greedy lexicographic component codes (scan order 0<1, resp. 0<1<2).
ComponentCode binary_lexicode(int n, int d);
ComponentCode binary_cw_lexicode(int n, int d, int w);
ComponentCode ternary_cw_lexicode(int n, int d, int w);

// One representative from each {x, x^R} pair of odd-weight words, n even:
// size 2^{n-2}, distance 2, reversal-constrained.
ComponentCode odd_weight_r_code(int n);

// All x (.) y products of a constant-weight binary code and a binary code of
// the same length and distance; GC-content = b1.w, size |b1|*|b2|.  The
// result carries the reversal constraint when either factor does.
Code product_gc(const ComponentCode& b1, const ComponentCode& b2);

// All x (/) y products of a ternary constant-weight code and a binary code of
// length n-w.
Code product_ternary(const ComponentCode& t, const ComponentCode& b);

// Complements the first floor(n/2) coordinates of every word, turning
// reversal cross-distance constraints into reverse-complement ones (exactly
// for even n; for odd n build the source at distance d+1).
Code r_to_rc(const Code& code);

}  // namespace dnacode

#endif
