#include "dnacode/words.hpp"

#include <array>
#include <charconv>

namespace dnacode {

std::optional<Nucleotide> nucleotide_from_char(char c) {
    switch (c) {
        case 'A': return Nucleotide::A;
        case 'C': return Nucleotide::C;
        case 'G': return Nucleotide::G;
        case 'T': return Nucleotide::T;
        default: return std::nullopt;
    }
}

DnaWord::DnaWord(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxWordLength)
        throw std::invalid_argument("DnaWord length must be in [1,32], got " + std::to_string(n));
    if (n < 32 && (bits >> (2 * n)) != 0)
        throw std::invalid_argument("DnaWord has nonzero bits above position n");
}

DnaWord DnaWord::parse(std::string_view text) {
    if (text.empty() || text.size() > kMaxWordLength)
        throw std::invalid_argument("DNA word must have length 1..32");
    std::uint64_t bits = 0;
    for (char c : text) {
        auto nuc = nucleotide_from_char(c);
        if (!nuc)
            throw std::invalid_argument(std::string("invalid nucleotide character '") + c + "'");
        bits = (bits << 2) | static_cast<std::uint64_t>(*nuc);
    }
    return DnaWord(static_cast<int>(text.size()), bits);
}

Nucleotide DnaWord::at(int pos) const {
    if (pos < 0 || pos >= n_) throw std::out_of_range("DnaWord position out of range");
    return static_cast<Nucleotide>((bits_ >> (2 * (n_ - 1 - pos))) & 3u);
}

DnaWord DnaWord::with(int pos, Nucleotide x) const {
    if (pos < 0 || pos >= n_) throw std::out_of_range("DnaWord position out of range");
    int shift = 2 * (n_ - 1 - pos);
    std::uint64_t cleared = bits_ & ~(3ull << shift);
    return DnaWord(n_, cleared | (static_cast<std::uint64_t>(x) << shift));
}

std::string DnaWord::str() const {
    std::string s(static_cast<std::size_t>(n_), '?');
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = to_char(at(i));
    return s;
}

std::uint64_t packed_reverse(std::uint64_t bits, int n) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
        out = (out << 2) | (bits & 3u);
        bits >>= 2;
    }
    return out;
}

int gc_content(const DnaWord& x) { return packed_gc_content(x.bits(), lane_mask(x.length())); }

int hamming(const DnaWord& x, const DnaWord& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("hamming: length mismatch");
    return packed_hamming(x.bits(), y.bits(), lane_mask(x.length()));
}

DnaWord reverse_complement(const DnaWord& x) {
    return DnaWord(x.length(), packed_reverse_complement(x.bits(), x.length()));
}

DnaWord reverse_word(const DnaWord& x) {
    return DnaWord(x.length(), packed_reverse(x.bits(), x.length()));
}

BinaryWord::BinaryWord(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxWordLength)
        throw std::invalid_argument("BinaryWord length must be in [0,32]");
    if (n < 64 && (bits >> n) != 0)
        throw std::invalid_argument("BinaryWord has nonzero bits above position n");
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("invalid binary character '") + c + "'");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BinaryWord(static_cast<int>(text.size()), bits);
}

int BinaryWord::at(int pos) const {
    if (pos < 0 || pos >= n_) throw std::out_of_range("BinaryWord position out of range");
    return static_cast<int>((bits_ >> (n_ - 1 - pos)) & 1u);
}

BinaryWord BinaryWord::reversed() const {
    std::uint64_t b = bits_, out = 0;
    for (int i = 0; i < n_; ++i) {
        out = (out << 1) | (b & 1u);
        b >>= 1;
    }
    return BinaryWord(n_, out);
}

std::string BinaryWord::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + at(i));
    return s;
}

int hamming(const BinaryWord& x, const BinaryWord& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("hamming: length mismatch");
    return __builtin_popcountll(x.bits() ^ y.bits());
}

TernaryWord::TernaryWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_)
        if (d > 2) throw std::invalid_argument("ternary digit out of range");
}

TernaryWord TernaryWord::parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2')
            throw std::invalid_argument(std::string("invalid ternary character '") + c + "'");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return TernaryWord(std::move(digits));
}

int TernaryWord::weight() const {
    int w = 0;
    for (auto d : digits_) w += (d != 0);
    return w;
}

TernaryWord TernaryWord::reversed() const {
    return TernaryWord({digits_.rbegin(), digits_.rend()});
}

std::string TernaryWord::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

int hamming(const TernaryWord& x, const TernaryWord& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("hamming: length mismatch");
    int dist = 0;
    for (int i = 0; i < x.length(); ++i) dist += (x.at(i) != y.at(i));
    return dist;
}

DnaWord odot(const BinaryWord& x, const BinaryWord& y) {
    if (x.length() != y.length())
        throw std::invalid_argument("odot: length mismatch");
    int n = x.length();
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        unsigned xi = static_cast<unsigned>(x.at(i)), yi = static_cast<unsigned>(y.at(i));
        // (0,1)->A=00  (1,0)->C=01  (1,1)->G=10  (0,0)->T=11
        unsigned code = ((~(xi ^ yi) & 1u) << 1) | (~yi & 1u);
        bits = (bits << 2) | code;
    }
    return DnaWord(n, bits);
}

DnaWord oslash(const TernaryWord& x, const BinaryWord& y) {
    int n = x.length();
    if (y.length() != n - x.weight())
        throw std::invalid_argument("oslash: binary factor length must equal the zero count");
    std::uint64_t bits = 0;
    int j = 0;  // 1-based index of the next zero entry, counted left to right
    for (int i = 0; i < n; ++i) {
        Nucleotide z;
        switch (x.at(i)) {
            case 1: z = Nucleotide::C; break;
            case 2: z = Nucleotide::G; break;
            default:
                z = (y.at(j) == 0) ? Nucleotide::A : Nucleotide::T;
                ++j;
                break;
        }
        bits = (bits << 2) | static_cast<std::uint64_t>(z);
    }
    return DnaWord(n, bits);
}

namespace {

// digit_of[ord-1][code] and code_of[ord-1][digit]
constexpr std::array<std::array<std::uint8_t, 4>, 6> kDigitOf = {{
    {0, 1, 2, 3},  // A<C<G<T
    {2, 0, 1, 3},  // C<G<A<T
    {0, 2, 3, 1},  // A<T<C<G
    {1, 0, 3, 2},  // C<A<T<G
    {1, 0, 2, 3},  // C<A<G<T
    {0, 1, 3, 2},  // A<C<T<G
}};

constexpr std::array<std::array<std::uint8_t, 4>, 6> make_code_of() {
    std::array<std::array<std::uint8_t, 4>, 6> inv{};
    for (std::size_t o = 0; o < 6; ++o)
        for (std::size_t c = 0; c < 4; ++c) inv[o][kDigitOf[o][c]] = static_cast<std::uint8_t>(c);
    return inv;
}

constexpr auto kCodeOf = make_code_of();

}  // namespace

OrderingSpec::OrderingSpec(int idx) : index(idx) {
    if (idx < 1 || idx > 6)
        throw std::invalid_argument("ordering index must be 1..6");
}

int OrderingSpec::digit_of(Nucleotide x) const {
    return kDigitOf[static_cast<std::size_t>(index - 1)][static_cast<std::size_t>(x)];
}

Nucleotide OrderingSpec::nucleotide_of(int digit) const {
    if (digit < 0 || digit > 3) throw std::out_of_range("digit must be 0..3");
    return static_cast<Nucleotide>(kCodeOf[static_cast<std::size_t>(index - 1)][static_cast<std::size_t>(digit)]);
}

std::uint64_t rank(const DnaWord& x, const OrderingSpec& ord) {
    const auto& digit = kDigitOf[static_cast<std::size_t>(ord.index - 1)];
    std::uint64_t r = 0;
    std::uint64_t bits = x.bits();
    for (int i = x.length() - 1; i >= 0; --i) {
        r |= static_cast<std::uint64_t>(digit[bits & 3u]) << (2 * (x.length() - 1 - i));
        bits >>= 2;
    }
    return r;
}

DnaWord unrank(std::uint64_t r, int n, const OrderingSpec& ord) {
    if (n < 1 || n > kMaxWordLength)
        throw std::invalid_argument("unrank: length must be 1..32");
    if (n < 32 && (r >> (2 * n)) != 0)
        throw std::out_of_range("unrank: rank out of range for length");
    const auto& code = kCodeOf[static_cast<std::size_t>(ord.index - 1)];
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t digit = (r >> (2 * (n - 1 - i))) & 3u;
        bits = (bits << 2) | code[digit];
    }
    return DnaWord(n, bits);
}

std::string offset_to_string(const OffsetSpec& spec) {
    char buf[32];
    if (const auto* s = std::get_if<SingleOffset>(&spec)) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, s->rank, 16);
        return std::string(buf, p) + "^" + std::to_string(s->ordering.index);
    }
    const auto& f = std::get<FactoredOffset>(spec);
    auto [p1, e1] = std::to_chars(buf, buf + sizeof buf, f.rank1, 16);
    std::string out(buf, p1);
    out += "⊙";
    auto [p2, e2] = std::to_chars(buf, buf + sizeof buf, f.rank2, 16);
    out.append(buf, p2);
    return out;
}

namespace {

std::uint64_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    if (text.empty()) throw std::invalid_argument("empty offset");
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw std::invalid_argument("invalid base-16 offset: " + std::string(text));
    return value;
}

}  // namespace

OffsetSpec parse_offset(std::string_view text, std::optional<int> ordering) {
    // an inline "^<ordering>" suffix wins over the ordering argument
    if (std::size_t caret = text.find('^'); caret != std::string_view::npos) {
        std::string_view ord_text = text.substr(caret + 1);
        int idx = 0;
        auto [p, ec] = std::from_chars(ord_text.data(), ord_text.data() + ord_text.size(), idx);
        if (ec != std::errc{} || p != ord_text.data() + ord_text.size())
            throw std::invalid_argument("invalid ordering suffix: " + std::string(text));
        ordering = idx;
        text = text.substr(0, caret);
    }
    std::size_t sep = text.find("⊙");
    std::size_t sep_len = 3;
    if (sep == std::string_view::npos) {
        sep = text.find('o');
        sep_len = 1;
    }
    if (sep != std::string_view::npos) {
        return FactoredOffset{parse_hex(text.substr(0, sep)), parse_hex(text.substr(sep + sep_len))};
    }
    return SingleOffset{parse_hex(text), OrderingSpec(ordering.value_or(1))};
}

void validate_offset(int n, const OffsetSpec& spec) {
    if (const auto* s = std::get_if<SingleOffset>(&spec)) {
        if (n < 32 && s->rank >= (1ull << (2 * n)))
            throw std::invalid_argument("single offset rank out of range for length");
    } else {
        const auto& f = std::get<FactoredOffset>(spec);
        if (f.rank1 >= (1ull << n) || f.rank2 >= (1ull << n))
            throw std::invalid_argument("factored offset rank out of range for length");
    }
}

WordStream::WordStream(int n, OffsetSpec spec) : n_(n), spec_(std::move(spec)) {
    if (n < 1 || n > 31) throw std::invalid_argument("WordStream length must be 1..31");
    validate_offset(n, spec_);
    total_ = 1ull << (2 * n);
}

std::optional<std::uint64_t> WordStream::next() {
    if (count_ == total_) return std::nullopt;
    ++count_;
    if (const auto* s = std::get_if<SingleOffset>(&spec_)) {
        std::uint64_t r = (s->rank + count_ - 1) & (total_ - 1);
        return unrank(r, n_, s->ordering).bits();
    }
    const auto& f = std::get<FactoredOffset>(spec_);
    std::uint64_t half = 1ull << n_;
    BinaryWord u((n_), (outer_ + f.rank1) & (half - 1));
    BinaryWord v((n_), (inner_ + f.rank2) & (half - 1));
    if (++inner_ == half) {
        inner_ = 0;
        ++outer_;
    }
    return odot(u, v).bits();
}

}  // namespace dnacode
