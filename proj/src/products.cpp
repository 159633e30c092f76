#include "dnacode/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacode {

namespace {

bool binary_ok(const BinaryWord& cand, const std::vector<BinaryWord>& accepted, int d) {
    return std::all_of(accepted.begin(), accepted.end(),
                       [&](const BinaryWord& a) { return hamming(cand, a) >= d; });
}

void next_ternary(std::vector<std::uint8_t>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < 2) {
            ++digits[i];
            std::fill(digits.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits.end(), 0);
            return;
        }
    }
    digits.clear();  // wrapped: enumeration done
}

}  // namespace

ComponentCode parity_code(int n) {
    if (n < 1) throw std::invalid_argument("parity_code: n must be >= 1");
    ComponentCode code{.alphabet = 2, .n = n, .d = 2};
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits)
        if (__builtin_popcountll(bits) % 2 == 0) code.binary_words.emplace_back(n, bits);
    return code;
}

ComponentCode binary_lexicode(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("binary_lexicode: bad parameters");
    ComponentCode code{.alphabet = 2, .n = n, .d = d};
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        BinaryWord cand(n, bits);
        if (binary_ok(cand, code.binary_words, d)) code.binary_words.push_back(cand);
    }
    return code;
}

ComponentCode binary_cw_lexicode(int n, int d, int w) {
    if (n < 1 || d < 1 || w < 0 || w > n)
        throw std::invalid_argument("binary_cw_lexicode: bad parameters");
    ComponentCode code{.alphabet = 2, .n = n, .d = d, .w = w};
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        if (__builtin_popcountll(bits) != w) continue;
        BinaryWord cand(n, bits);
        if (binary_ok(cand, code.binary_words, d)) code.binary_words.push_back(cand);
    }
    return code;
}

ComponentCode ternary_cw_lexicode(int n, int d, int w) {
    if (n < 1 || d < 1 || w < 0 || w > n)
        throw std::invalid_argument("ternary_cw_lexicode: bad parameters");
    ComponentCode code{.alphabet = 3, .n = n, .d = d, .w = w};
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
    while (!digits.empty()) {
        TernaryWord cand(digits);
        if (cand.weight() == w) {
            bool ok = std::all_of(code.ternary_words.begin(), code.ternary_words.end(),
                                  [&](const TernaryWord& a) { return hamming(cand, a) >= d; });
            if (ok) code.ternary_words.push_back(std::move(cand));
        }
        next_ternary(digits);
    }
    return code;
}

ComponentCode odd_weight_r_code(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("odd_weight_r_code: n must be even and >= 2");
    ComponentCode code{.alphabet = 2, .n = n, .d = 2, .r_constrained = true};
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        if (__builtin_popcountll(bits) % 2 == 0) continue;
        BinaryWord word(n, bits);
        // odd-weight words have no palindromes for even n; keep the
        // numerically smaller member of each {x, x^R} pair
        if (bits < word.reversed().bits()) code.binary_words.push_back(word);
    }
    return code;
}

Code product_gc(const ComponentCode& b1, const ComponentCode& b2) {
    if (b1.alphabet != 2 || b2.alphabet != 2)
        throw std::invalid_argument("product_gc: both factors must be binary");
    if (!b1.w) throw std::invalid_argument("product_gc: first factor must be constant-weight");
    if (b1.n != b2.n) throw std::invalid_argument("product_gc: length mismatch");

    Code out;
    out.params.n = b1.n;
    out.params.d = std::min(b1.d, b2.d);
    out.params.w = *b1.w;
    out.params.kind = (b1.r_constrained || b2.r_constrained) ? ConstraintKind::GC_R
                                                             : ConstraintKind::GC;
    out.words.reserve(b1.binary_words.size() * b2.binary_words.size());
    for (const auto& x : b1.binary_words)
        for (const auto& y : b2.binary_words) out.words.push_back(odot(x, y));
    return out;
}

Code product_ternary(const ComponentCode& t, const ComponentCode& b) {
    if (t.alphabet != 3 || b.alphabet != 2)
        throw std::invalid_argument("product_ternary: need a ternary and a binary factor");
    if (!t.w) throw std::invalid_argument("product_ternary: ternary factor must be constant-weight");
    if (b.n != t.n - *t.w)
        throw std::invalid_argument("product_ternary: binary factor length must be n-w");

    Code out;
    out.params.n = t.n;
    out.params.d = std::min(t.d, b.d);
    out.params.w = *t.w;
    out.params.kind = (t.r_constrained || b.r_constrained) ? ConstraintKind::GC_R
                                                           : ConstraintKind::GC;
    out.words.reserve(t.ternary_words.size() * b.binary_words.size());
    for (const auto& x : t.ternary_words)
        for (const auto& y : b.binary_words) out.words.push_back(oslash(x, y));
    return out;
}

Code r_to_rc(const Code& code) {
    if (code.params.kind != ConstraintKind::GC_R)
        throw std::invalid_argument("r_to_rc: input must carry the reversal constraint");
    const int n = code.params.n;
    if (n % 2 != 0 && code.params.d < 2)
        throw std::invalid_argument("r_to_rc: odd length needs source distance >= 2");

    const int half = n / 2;
    // first floor(n/2) positions are the high 2*half bits of the packing
    const std::uint64_t mask = half == 0 ? 0 : ((1ull << (2 * half)) - 1) << (2 * (n - half));

    Code out;
    out.params = code.params;
    out.params.kind = ConstraintKind::GC_RC;
    if (n % 2 != 0) out.params.d = code.params.d - 1;
    out.words.reserve(code.words.size());
    for (const auto& w : code.words) out.words.emplace_back(n, w.bits() ^ mask);
    return out;
}

}  // namespace dnacode
