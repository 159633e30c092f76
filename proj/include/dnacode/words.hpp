#ifndef DNACODE_WORDS_HPP
#define DNACODE_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dnacode {

// Nucleotides are identified with 2-bit codes A=0, C=1, G=2, T=3.
enum class Nucleotide : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr Nucleotide complement(Nucleotide x) {
    // A<->T and C<->G is bitwise negation of the 2-bit code.
    return static_cast<Nucleotide>(~static_cast<std::uint8_t>(x) & 3u);
}

constexpr bool is_gc(Nucleotide x) {
    auto v = static_cast<std::uint8_t>(x);
    return ((v ^ (v >> 1)) & 1u) != 0;  // C (01) and G (10)
}

constexpr char to_char(Nucleotide x) {
    return "ACGT"[static_cast<std::uint8_t>(x)];
}

std::optional<Nucleotide> nucleotide_from_char(char c);

inline constexpr int kMaxWordLength = 32;

// Fixed-length DNA word, 2 bits per position, position 1 in the
// most-significant pair.  A word of length n occupies the low 2n bits;
// everything above is zero.
class DnaWord {
  public:
    DnaWord(int n, std::uint64_t bits);

    static DnaWord parse(std::string_view text);

    int length() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    // pos is 0-based; position 0 is the leftmost character.
    Nucleotide at(int pos) const;
    DnaWord with(int pos, Nucleotide x) const;

    std::string str() const;

    friend bool operator==(const DnaWord&, const DnaWord&) = default;

  private:
    int n_;
    std::uint64_t bits_;
};

// Mask selecting the low bit of each of the n 2-bit lanes.
constexpr std::uint64_t lane_mask(int n) {
    std::uint64_t full = (n >= 32) ? ~0ull : ((1ull << (2 * n)) - 1);
    return full & 0x5555555555555555ull;
}

// Hamming distance between two equal-length packed words, branch-free.
constexpr int packed_hamming(std::uint64_t a, std::uint64_t b, std::uint64_t low_lanes) {
    std::uint64_t v = a ^ b;
    return __builtin_popcountll((v | (v >> 1)) & low_lanes);
}

constexpr int packed_gc_content(std::uint64_t bits, std::uint64_t low_lanes) {
    return __builtin_popcountll((bits ^ (bits >> 1)) & low_lanes);
}

std::uint64_t packed_reverse(std::uint64_t bits, int n);

inline std::uint64_t packed_complement(std::uint64_t bits, int n) {
    std::uint64_t full = (n >= 32) ? ~0ull : ((1ull << (2 * n)) - 1);
    return ~bits & full;
}

inline std::uint64_t packed_reverse_complement(std::uint64_t bits, int n) {
    return packed_complement(packed_reverse(bits, n), n);
}

int gc_content(const DnaWord& x);
int hamming(const DnaWord& x, const DnaWord& y);
DnaWord reverse_complement(const DnaWord& x);
DnaWord reverse_word(const DnaWord& x);

// Fixed-length binary word, 1 bit per position, position 1 in the
// most-significant bit; numeric order of bits() is 0<1 lexicographic order.
class BinaryWord {
  public:
    BinaryWord(int n, std::uint64_t bits);

    static BinaryWord parse(std::string_view text);

    int length() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int weight() const { return __builtin_popcountll(bits_); }

    int at(int pos) const;  // 0-based from the left
    BinaryWord reversed() const;

    std::string str() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

  private:
    int n_;
    std::uint64_t bits_;
};

int hamming(const BinaryWord& x, const BinaryWord& y);

// Word over {0,1,2}; weight counts nonzero digits.
class TernaryWord {
  public:
    explicit TernaryWord(std::vector<std::uint8_t> digits);

    static TernaryWord parse(std::string_view text);

    int length() const { return static_cast<int>(digits_.size()); }
    int weight() const;
    std::uint8_t at(int pos) const { return digits_[static_cast<std::size_t>(pos)]; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    TernaryWord reversed() const;

    std::string str() const;

    friend bool operator==(const TernaryWord&, const TernaryWord&) = default;

  private:
    std::vector<std::uint8_t> digits_;
};

int hamming(const TernaryWord& x, const TernaryWord& y);

// x (.) y: A if (x_i,y_i)=(0,1); C if (1,0); G if (1,1); T if (0,0).
// Bijective on pairs; gc_content(x (.) y) = weight(x).
DnaWord odot(const BinaryWord& x, const BinaryWord& y);

// x (/) y for ternary x of weight w and binary y of length n-w:
// C where x_i=1, G where x_i=2, and the j-th zero of x becomes A or T
// according to y_j (zeros indexed left to right).
DnaWord oslash(const TernaryWord& x, const BinaryWord& y);

// One of the six character orders that matter (the other 18 are equivalent
// under the A<->T / C<->G symmetry):
//   1 = A<C<G<T   2 = C<G<A<T   3 = A<T<C<G
//   4 = C<A<T<G   5 = C<A<G<T   6 = A<C<T<G
struct OrderingSpec {
    int index = 1;

    explicit OrderingSpec(int idx);

    // digit value of a nucleotide code under this ordering, and back
    int digit_of(Nucleotide x) const;
    Nucleotide nucleotide_of(int digit) const;

    friend bool operator==(const OrderingSpec&, const OrderingSpec&) = default;
};

std::uint64_t rank(const DnaWord& x, const OrderingSpec& ord);
DnaWord unrank(std::uint64_t r, int n, const OrderingSpec& ord);

struct SingleOffset {
    std::uint64_t rank = 0;
    OrderingSpec ordering{1};
    friend bool operator==(const SingleOffset&, const SingleOffset&) = default;
};

struct FactoredOffset {
    std::uint64_t rank1 = 0;
    std::uint64_t rank2 = 0;
    friend bool operator==(const FactoredOffset&, const FactoredOffset&) = default;
};

using OffsetSpec = std::variant<SingleOffset, FactoredOffset>;

std::string offset_to_string(const OffsetSpec& spec);
OffsetSpec parse_offset(std::string_view text, std::optional<int> ordering);

// Enumerates all 4^n words in the scan order defined by the offset spec:
// Single -> unrank((rank + k) mod 4^n, ord); Factored -> u_i (.) u_j with the
// first factor advancing slowest and both factor lists rotated by their ranks.
class WordStream {
  public:
    WordStream(int n, OffsetSpec spec);

    // Returns the packed bits of the next word, or nullopt when all 4^n
    // words have been emitted.
    std::optional<std::uint64_t> next();

    int length() const { return n_; }

  private:
    int n_;
    OffsetSpec spec_;
    std::uint64_t count_ = 0;
    std::uint64_t total_;
    // factored state
    std::uint64_t outer_ = 0, inner_ = 0;
};

void validate_offset(int n, const OffsetSpec& spec);

}  // namespace dnacode

#endif
