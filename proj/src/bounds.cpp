#include "dnacode/bounds.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dnacode {

namespace {

constexpr int kMaxBinomial = 64;

using u128 = unsigned __int128;

std::uint64_t checked_u64(u128 v, const char* what) {
    if (v > static_cast<u128>(~0ull)) throw std::overflow_error(what);
    return static_cast<std::uint64_t>(v);
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div_ll(long long a, long long b) { return -floor_div(-a, b); }

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint64_t sq(long long x) { return static_cast<std::uint64_t>(x * x); }

}  // namespace

std::uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxBinomial + 1>, kMaxBinomial + 1> t{};
        for (int i = 0; i <= kMaxBinomial; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    (j <= i - 1 ? t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
        }
        return t;
    }();
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMaxBinomial) throw std::out_of_range("binomial table limited to n <= 64");
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// --- BinaryBoundProvider ---------------------------------------------------

std::optional<std::uint64_t> BinaryBoundProvider::exact(int n, int d) const {
    if (n < 1 || d < 1) return std::nullopt;
    if (d > n) return 1;
    if (d == n) return 2;
    if (d == 1) return 1ull << n;
    if (d == 2) return 1ull << (n - 1);
    if (d % 2 == 1) {
        // distances between distinct words of a d-odd code stay >= d+1 after
        // appending an overall parity bit, and shortening inverts the map
        auto v = exact(n + 1, d + 1);
        return v;
    }
    // even d >= 4 from here
    if (n < 2 * d && n <= 2 * kMaxWordLength) {
        // Plotkin region; optimal by Levenshtein given the Hadamard matrices
        // of order <= 64, which all exist
        return 2 * static_cast<std::uint64_t>(d / (2 * d - n));
    }
    if (n == 2 * d && n <= 2 * kMaxWordLength) return static_cast<std::uint64_t>(4 * d);
    if (d == 4 && n >= 9 && n <= 16) {
        static constexpr std::uint64_t k4[] = {20, 40, 72, 144, 256, 512, 1024, 2048};
        return k4[n - 9];
    }
    if (d == 6 && n >= 13 && n <= 16) {
        static constexpr std::uint64_t k6[] = {32, 64, 128, 256};
        return k6[n - 13];
    }
    return std::nullopt;
}

BinaryBoundProvider::Value BinaryBoundProvider::upper(int n, int d) const {
    if (auto v = exact(n, d)) return {*v, true, "A2_exact"};
    return {1ull << (n - d + 1), false, "singleton"};
}

BinaryBoundProvider::Value BinaryBoundProvider::lower(int n, int d) const {
    if (auto v = exact(n, d)) return {*v, true, "A2_exact"};
    return {d <= n ? 2ull : 1ull, false, "A2_trivial"};
}

BinaryBoundProvider::Value BinaryBoundProvider::upper_cw(int n, int d, int w) const {
    if (n < 0 || w < 0 || w > n) return {0, true, "A2cw_invalid"};
    w = std::min(w, n - w);
    if (w == 0) return {1, true, "A2cw_exact"};
    if (d <= 2) return {binomial(n, w), true, "A2cw_exact"};
    if (d % 2 == 1) return upper_cw(n, d + 1, w);  // constant-weight distances are even
    if (d > 2 * w) return {1, true, "A2cw_exact"};
    if (d == 2 * w) return {static_cast<std::uint64_t>(n / w), true, "A2cw_exact"};
    // Johnson recursion, approximate
    auto inner = upper_cw(n - 1, d, w - 1);
    return {static_cast<std::uint64_t>(n) * inner.value / static_cast<std::uint64_t>(w), false,
            "A2cw_johnson"};
}

// --- special cases ---------------------------------------------------------

std::optional<std::uint64_t> BoundEngine::special_exact(int n, int d, int w, ConstraintKind kind) const {
    if (n < 1 || w < 0 || w > n || d < 0 || d > n) return std::nullopt;
    w = std::min(w, n - w);  // A<->C, T<->G symmetry, valid for all three kinds

    const std::uint64_t total = binomial(n, w) << n;
    const bool rc_like = kind != ConstraintKind::GC;
    if (rc_like && kind == ConstraintKind::GC_R && n % 2 != 0)
        return std::nullopt;  // R and RC coincide only for even n

    if (d <= 1) {
        if (!rc_like) return total;
        // subtract the self-reverse-complement words, then take one per pair
        std::uint64_t palindromes = 0;
        if (n % 2 == 0 && w % 2 == 0) palindromes = binomial(n / 2, w / 2) << (n / 2);
        return (total - palindromes) / 2;
    }
    if (d == n) {
        if (rc_like) return 2 * w == n ? 2ull : 1ull;
        if (2 * w == n) return 4;
        if (3 * w >= n) return 3;
        return 2;
    }
    if (w == 0 && !rc_like) return binary_.exact(n, d);
    return std::nullopt;
}

std::optional<std::uint64_t> BoundEngine::exact_d2(int n, int w, ConstraintKind kind) const {
    if (n < 2 || w < 0 || w > n) return std::nullopt;
    if (kind == ConstraintKind::GC) return binomial(n, w) << (n - 1);
    if (n % 2 != 0) return std::nullopt;
    return binomial(n, w) << (n - 2);
}

// --- Plotkin-type bounds ---------------------------------------------------

namespace {

// Right-hand side of the integer Plotkin inequality minus the left-hand side;
// negative means the inequality fails, i.e. no code of size M exists.
bool plotkin_holds(int n, int d, int w, long long M) {
    long long wM = static_cast<long long>(w) * M;
    long long k = wM / n, r = wM % n;
    auto spread = [M](long long a) {
        // M^2 - fl(a/2)^2 - cl(a/2)^2 - fl((M-a)/2)^2 - cl((M-a)/2)^2
        long long fa = floor_div(a, 2), ca = ceil_div_ll(a, 2);
        long long fb = floor_div(M - a, 2), cb = ceil_div_ll(M - a, 2);
        return M * M - static_cast<long long>(sq(fa)) - static_cast<long long>(sq(ca)) -
               static_cast<long long>(sq(fb)) - static_cast<long long>(sq(cb));
    };
    long long rhs = (n - r) * spread(k) + r * spread(k + 1);
    long long lhs = M * (M - 1) * d;
    return lhs <= rhs;
}

constexpr std::uint64_t kPlotkinScanCap = 1ull << 22;

}  // namespace

std::optional<Bound> BoundEngine::plotkin_upper_integer(int n, int d, int w) const {
    if (n < 1 || d < 1 || w < 0 || w > n) return std::nullopt;
    long long q = static_cast<long long>(w) * w + 4ll * w * (n - w) +
                  static_cast<long long>(n - w) * (n - w);
    bool binding = 2ll * d * n > q;
    std::uint64_t cap = std::min<std::uint64_t>(binomial(n, w) << std::min(n, 40),
                                                binding ? kPlotkinScanCap : 4096);
    std::optional<std::uint64_t> first_failure;
    for (std::uint64_t m = 1; m <= cap; ++m) {
        bool holds = plotkin_holds(n, d, w, static_cast<long long>(m));
        if (!holds && !first_failure) first_failure = m;
        if (holds && first_failure) return std::nullopt;  // abstain, non-monotone tail
    }
    if (!first_failure) return std::nullopt;
    Bound b;
    b.value = *first_failure - 1;
    b.provenance = {"plotkin_integer(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    std::to_string(w) + ")"};
    return b;
}

std::optional<Bound> BoundEngine::plotkin_upper_real(int n, int d, int w) const {
    if (n < 1 || d < 1 || w < 0 || w > n) return std::nullopt;
    long long q = static_cast<long long>(w) * w + 4ll * w * (n - w) +
                  static_cast<long long>(n - w) * (n - w);
    long long two_dn = 2ll * d * n;
    if (two_dn <= q) return std::nullopt;
    Bound b;
    b.value = static_cast<std::uint64_t>(two_dn / (two_dn - q));
    b.provenance = {"plotkin_real(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    std::to_string(w) + ")"};
    return b;
}

Bound BoundEngine::halving(const Bound& upper_gc, int d) const {
    if (d <= 0) throw std::invalid_argument("halving bound requires d > 0");
    Bound out;
    out.value = upper_gc.value / 2;
    out.provenance = {"halving"};
    out.provenance.insert(out.provenance.end(), upper_gc.provenance.begin(),
                          upper_gc.provenance.end());
    return out;
}

// --- counting --------------------------------------------------------------

std::uint64_t BoundEngine::ball_volume(int n, int w, int r) const {
    if (n < 1 || w < 0 || w > n) throw std::invalid_argument("ball_volume: bad parameters");
    r = std::clamp(r, 0, n);
    u128 total = 0;
    for (int rr = 0; rr <= r; ++rr) {
        int imax = std::min({rr / 2, w, n - w});
        for (int i = 0; i <= imax; ++i) {
            u128 term = static_cast<u128>(binomial(w, i)) * binomial(n - w, i) *
                        binomial(n - 2 * i, rr - 2 * i);
            total += term << (2 * i);
        }
    }
    return checked_u64(total, "ball_volume overflow");
}

Bound BoundEngine::gilbert_lower_gc(int n, int d, int w) const {
    if (d < 1) throw std::invalid_argument("gilbert bound requires d >= 1");
    std::uint64_t total = binomial(n, w) << n;
    Bound b;
    b.value = ceil_div(total, ball_volume(n, w, d - 1));
    b.provenance = {"gilbert_gc(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    std::to_string(w) + ")"};
    return b;
}

Bound BoundEngine::sphere_packing_upper(int n, int d, int w) const {
    if (d < 1) throw std::invalid_argument("sphere-packing bound requires d >= 1");
    std::uint64_t total = binomial(n, w) << n;
    Bound b;
    b.value = total / ball_volume(n, w, (d - 1) / 2);
    b.provenance = {"sphere_packing(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    std::to_string(w) + ")"};
    return b;
}

std::uint64_t BoundEngine::v_count(int n, int w, int d) const {
    if (n < 0 || w < 0 || w > n || d < 0 || d > n) return 0;
    if ((n - d) % 2 != 0) return 0;
    if (n == 0) return 1;  // the empty word
    if (n % 2 == 1)
        // middle character always differs from its complement and is free: two
        // A/T choices keep the weight, two C/G choices lower it by one
        return 2 * (v_count(n - 1, w, d - 1) + (w > 0 ? v_count(n - 1, w - 1, d - 1) : 0));
    int m = n / 2, e = d / 2;
    int imin = std::max({0, w - m, ceil_div_ll(w - e, 2) > 0 ? static_cast<int>(ceil_div_ll(w - e, 2)) : 0});
    u128 total = 0;
    for (int i = imin; i <= w / 2; ++i) {
        u128 term = static_cast<u128>(binomial(m, i)) * binomial(m - i, w - 2 * i) *
                    binomial(m - w + 2 * i, e - w + 2 * i);
        total += term << (m + 2 * w - 4 * i);
    }
    return checked_u64(total, "v_count overflow");
}

Bound BoundEngine::gilbert_lower_gcrc(int n, int d, int w) const {
    if (d < 1) throw std::invalid_argument("gilbert bound requires d >= 1");
    u128 numerator = 0;
    for (int r = d; r <= n; ++r) numerator += v_count(n, w, r);
    Bound b;
    std::uint64_t denom = 2 * ball_volume(n, w, d - 1);
    b.value = checked_u64((numerator + denom - 1) / denom, "gilbert_gcrc overflow");
    b.provenance = {"gilbert_gcrc(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    std::to_string(w) + ")"};
    return b;
}

// --- Johnson aggregation ---------------------------------------------------

const BoundEngine::Cell& BoundEngine::johnson_gc_cell(int n, int d, int w) {
    auto key = std::make_tuple(n, d, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (n < 1 || w < 0 || w > n || d < 1)
        throw std::invalid_argument("johnson_upper: bad parameters");

    auto tag = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(d) + "," +
               std::to_string(w) + ")";
    };

    Cell best{binomial(n, w) << n, tag("total_words"), std::nullopt};
    auto consider = [&](std::uint64_t value, std::string method,
                        std::optional<std::tuple<int, int, int>> child = std::nullopt) {
        if (value < best.value) best = {value, std::move(method), child};
    };

    if (d > n) {
        consider(1, tag("single_word"));
    } else {
        if (auto v = special_exact(n, d, w, ConstraintKind::GC)) consider(*v, tag("prop1_exact"));
        if (d == 2) {
            if (auto v = exact_d2(n, w, ConstraintKind::GC)) consider(*v, tag("d2_formula"));
        }
        if (w == 0 || w == n) {
            auto v = binary_.upper(n, d);
            consider(v.value, "A2(" + std::to_string(n) + "," + std::to_string(d) +
                                  ")=" + std::to_string(v.value) + " [" + v.method + "]");
        }
        if (w > 0 && w < n) {
            std::uint64_t g = checked_u64(
                static_cast<u128>(2 * n) * johnson_gc_cell(n - 1, d, w - 1).value / static_cast<unsigned>(w),
                "johnson overflow");
            consider(g, tag("shorten_gc"), std::make_tuple(n - 1, d, w - 1));
            std::uint64_t h = checked_u64(
                static_cast<u128>(2 * n) * johnson_gc_cell(n - 1, d, w).value / static_cast<unsigned>(n - w),
                "johnson overflow");
            consider(h, tag("shorten_at"), std::make_tuple(n - 1, d, w));
        }
        if (auto p = plotkin_upper_integer(n, d, w)) consider(p->value, p->provenance.front());
        if (auto p = plotkin_upper_real(n, d, w)) consider(p->value, p->provenance.front());
        consider(sphere_packing_upper(n, d, w).value, tag("sphere_packing"));
    }

    return memo_.emplace(key, std::move(best)).first->second;
}

Bound BoundEngine::bound_from_cell(int n, int d, int w) {
    Bound b;
    std::optional<std::tuple<int, int, int>> cur = std::make_tuple(n, d, w);
    b.value = johnson_gc_cell(n, d, w).value;
    while (cur) {
        const Cell& cell = johnson_gc_cell(std::get<0>(*cur), std::get<1>(*cur), std::get<2>(*cur));
        b.provenance.push_back(cell.method + "=" + std::to_string(cell.value));
        cur = cell.child;
    }
    return b;
}

Bound BoundEngine::johnson_upper(int n, int d, int w, ConstraintKind kind) {
    if (n < 1 || w < 0 || w > n || d < 1)
        throw std::invalid_argument("johnson_upper: bad parameters");
    Bound gc = bound_from_cell(n, d, w);
    if (kind == ConstraintKind::GC) return gc;

    Bound best = halving(gc, d);
    if (auto v = special_exact(n, d, w, kind); v && *v < best.value)
        best = Bound{*v, {"prop1_exact_" + to_string(kind)}};
    if (d == 2) {
        if (auto v = exact_d2(n, w, kind); v && *v < best.value)
            best = Bound{*v, {"d2_formula_" + to_string(kind)}};
    }
    return best;
}

// --- aggregation -----------------------------------------------------------

BoundEngine::BestBounds BoundEngine::best_bounds(int n, int d, int w, ConstraintKind kind) {
    if (n < 1 || n > kMaxWordLength || w < 0 || w > n || d < 1 || d > n)
        throw std::invalid_argument("best_bounds: bad parameters");

    BestBounds out;
    out.upper = johnson_upper(n, d, w, kind);

    Bound lower{0, {"none"}};
    auto consider = [&](std::uint64_t value, std::vector<std::string> prov) {
        if (value > lower.value) lower = Bound{value, std::move(prov)};
    };

    switch (kind) {
        case ConstraintKind::GC: {
            Bound g = gilbert_lower_gc(n, d, w);
            consider(g.value, g.provenance);
            consider(1, {"single_word"});
            break;
        }
        case ConstraintKind::GC_RC: {
            Bound g = gilbert_lower_gcrc(n, d, w);
            consider(g.value, g.provenance);
            break;
        }
        case ConstraintKind::GC_R: {
            if (n % 2 == 0) {
                Bound g = gilbert_lower_gcrc(n, d, w);
                g.provenance.insert(g.provenance.begin(), "r_equals_rc_even_n");
                consider(g.value, g.provenance);
            } else if (d + 1 <= n) {
                Bound g = gilbert_lower_gcrc(n, d + 1, w);
                g.provenance.insert(g.provenance.begin(), "rc_to_r_odd_n(d+1)");
                consider(g.value, g.provenance);
            }
            break;
        }
    }
    if (auto v = special_exact(n, d, w, kind)) consider(*v, {"prop1_exact"});
    if (d == 2) {
        if (auto v = exact_d2(n, w, kind)) consider(*v, {"d2_formula"});
    }
    if (auto it = registered_.find(std::make_tuple(n, d, w, kind)); it != registered_.end())
        consider(it->second.first, {it->second.second});

    out.lower = std::move(lower);
    if (out.lower.value > out.upper.value)
        throw std::logic_error("lower bound exceeds upper bound for n=" + std::to_string(n) +
                               " d=" + std::to_string(d) + " w=" + std::to_string(w) +
                               " kind=" + to_string(kind));
    return out;
}

void BoundEngine::register_construction(int n, int d, int w, ConstraintKind kind,
                                        std::uint64_t size, const std::string& provenance) {
    auto key = std::make_tuple(n, d, w, kind);
    auto it = registered_.find(key);
    if (it == registered_.end() || size > it->second.first)
        registered_[key] = {size, provenance};
}

}  // namespace dnacode
