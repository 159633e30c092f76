#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "dnacode/bounds.hpp"

using namespace dnacode;

namespace {

std::string word_string(std::uint64_t bits, int n) { return DnaWord(n, bits).str(); }

int slow_gc(const std::string& s) {
    int w = 0;
    for (char c : s) w += (c == 'C' || c == 'G');
    return w;
}

int slow_dist(const std::string& a, const std::string& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

std::string slow_rc(const std::string& s) {
    std::string out(s.rbegin(), s.rend());
    for (char& c : out) {
        switch (c) {
            case 'A': c = 'T'; break;
            case 'T': c = 'A'; break;
            case 'C': c = 'G'; break;
            case 'G': c = 'C'; break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(32, 16) == 601080390ull);
}

TEST_CASE("binary bound provider exact values") {
    BinaryBoundProvider p;
    CHECK(p.exact(7, 1) == 128);
    CHECK(p.exact(7, 2) == 64);
    CHECK(p.exact(7, 7) == 2);
    CHECK(p.exact(9, 4) == 20);
    CHECK(p.exact(10, 3) == 72);
    CHECK(p.exact(12, 6) == 24);
    CHECK(p.exact(8, 5) == 4);
    CHECK(p.exact(15, 4) == 1024);
    CHECK_FALSE(p.exact(20, 8).has_value());
    CHECK(p.upper(20, 8).value == 1ull << 13);  // Singleton fallback
    CHECK_FALSE(p.upper(20, 8).exact);
}

TEST_CASE("special exact cases") {
    BoundEngine e;
    CHECK(e.special_exact(4, 4, 2, ConstraintKind::GC) == 4);
    CHECK(e.special_exact(5, 5, 2, ConstraintKind::GC_RC) == 1);
    CHECK(e.special_exact(3, 1, 1, ConstraintKind::GC) == 24);
    CHECK(e.special_exact(4, 1, 2, ConstraintKind::GC_RC) == 44);
    CHECK(e.special_exact(6, 6, 2, ConstraintKind::GC) == 3);
    CHECK(e.special_exact(6, 6, 1, ConstraintKind::GC) == 2);
    // symmetry applied before matching
    CHECK(e.special_exact(6, 6, 5, ConstraintKind::GC) == 2);
    CHECK_FALSE(e.special_exact(6, 3, 2, ConstraintKind::GC).has_value());
}

TEST_CASE("eq-f palindrome count against brute force") {
    // 96 words of length 4 and GC-content 2; count those equal to their RC
    int palindromes = 0, total = 0;
    for (std::uint64_t b = 0; b < 256; ++b) {
        std::string s = word_string(b, 4);
        if (slow_gc(s) != 2) continue;
        ++total;
        if (s == slow_rc(s)) ++palindromes;
    }
    CHECK(total == 96);
    CHECK(palindromes == 8);
    BoundEngine e;
    CHECK(e.special_exact(4, 1, 2, ConstraintKind::GC_RC) == (96 - 8) / 2);
}

TEST_CASE("exact d=2 values") {
    BoundEngine e;
    CHECK(e.exact_d2(12, 6, ConstraintKind::GC) == 1892352);
    CHECK(e.exact_d2(12, 6, ConstraintKind::GC_RC) == 946176);
    CHECK_FALSE(e.exact_d2(5, 2, ConstraintKind::GC_RC).has_value());
}

TEST_CASE("ball volume") {
    BoundEngine e;
    CHECK(e.ball_volume(4, 2, 1) == 5);
    CHECK(e.ball_volume(9, 3, 0) == 1);
    for (int n = 2; n <= 10; ++n)
        for (int w = 0; w <= n; ++w)
            CHECK(e.ball_volume(n, w, n) == (binomial(n, w) << n));
}

TEST_CASE("ball volume against brute-force distance enumeration, n <= 8") {
    BoundEngine e;
    std::mt19937_64 rng(29);
    for (int n = 2; n <= 8; ++n) {
        for (int w = 0; w <= n; ++w) {
            // the count is center-independent; try 3 random centers
            std::vector<std::string> centers;
            while (centers.size() < 3) {
                std::string s = word_string(rng() & ((1ull << (2 * n)) - 1), n);
                if (slow_gc(s) == w) centers.push_back(s);
            }
            for (const auto& center : centers) {
                std::vector<std::uint64_t> cumulative(static_cast<std::size_t>(n) + 1, 0);
                for (std::uint64_t b = 0; b < (1ull << (2 * n)); ++b) {
                    std::string s = word_string(b, n);
                    if (slow_gc(s) != w) continue;
                    for (int r = slow_dist(center, s); r <= n; ++r)
                        ++cumulative[static_cast<std::size_t>(r)];
                }
                for (int r = 0; r <= n; ++r)
                    CHECK(e.ball_volume(n, w, r) == cumulative[static_cast<std::size_t>(r)]);
            }
        }
    }
}

TEST_CASE("gilbert lower bound, GC") {
    BoundEngine e;
    CHECK(e.gilbert_lower_gc(4, 2, 2).value == 20);
    for (int n = 2; n <= 8; ++n)
        for (int w = 0; w <= n; ++w)
            CHECK(e.gilbert_lower_gc(n, 1, w).value == (binomial(n, w) << n));
    CHECK(e.gilbert_lower_gc(6, 2, 3).value <= 640);
    CHECK(e.gilbert_lower_gc(6, 2, 3).value >= 1);
}

TEST_CASE("sphere packing upper bound") {
    BoundEngine e;
    CHECK(e.sphere_packing_upper(4, 2, 2).value == 96);
    CHECK(e.sphere_packing_upper(4, 3, 2).value == 19);
    for (int n = 2; n <= 10; ++n)
        for (int d = 1; d <= n; ++d)
            for (int w = 0; w <= n; ++w)
                CHECK(e.sphere_packing_upper(n, d, w).value >= e.gilbert_lower_gc(n, d, w).value);
}

TEST_CASE("v_count examples and parity") {
    BoundEngine e;
    CHECK(e.v_count(2, 1, 2) == 8);
    CHECK(e.v_count(2, 1, 1) == 0);
    CHECK(e.v_count(3, 1, 1) == 4);
    for (int n = 1; n <= 12; ++n)
        for (int w = 0; w <= n; ++w)
            for (int d = 0; d <= n; ++d)
                if ((n - d) % 2 != 0) CHECK(e.v_count(n, w, d) == 0);
}

TEST_CASE("v_count sums to the slice size for n <= 10") {
    BoundEngine e;
    for (int n = 1; n <= 10; ++n)
        for (int w = 0; w <= n; ++w) {
            std::uint64_t sum = 0;
            for (int d = 0; d <= n; ++d) sum += e.v_count(n, w, d);
            CHECK(sum == (binomial(n, w) << n));
        }
}

TEST_CASE("v_count against brute force for n <= 8") {
    BoundEngine e;
    for (int n = 1; n <= 8; ++n) {
        std::map<std::pair<int, int>, std::uint64_t> hist;
        for (std::uint64_t b = 0; b < (1ull << (2 * n)); ++b) {
            std::string s = word_string(b, n);
            ++hist[{slow_gc(s), slow_dist(s, slow_rc(s))}];
        }
        for (int w = 0; w <= n; ++w)
            for (int d = 0; d <= n; ++d) {
                auto it = hist.find({w, d});
                std::uint64_t expected = it == hist.end() ? 0 : it->second;
                CHECK(e.v_count(n, w, d) == expected);
            }
    }
}

TEST_CASE("gilbert lower bound, GC with RC constraint") {
    BoundEngine e;
    CHECK(e.gilbert_lower_gcrc(4, 2, 2).value == 9);
    CHECK(e.gilbert_lower_gcrc(2, 1, 1).value == 4);
}

TEST_CASE("integer Plotkin-type bound") {
    BoundEngine e;
    auto b = e.plotkin_upper_integer(4, 4, 2);
    REQUIRE(b.has_value());
    CHECK(b->value == 4);
    auto c = e.plotkin_upper_integer(6, 6, 3);
    REQUIRE(c.has_value());
    CHECK(c->value >= 4);
    CHECK_FALSE(e.plotkin_upper_integer(5, 0, 2).has_value());
}

TEST_CASE("real Plotkin-type bound") {
    BoundEngine e;
    // 2dn = 32, w^2 + 4w(n-w) + (n-w)^2 = 4 + 16 + 4 = 24
    auto b = e.plotkin_upper_real(4, 4, 2);
    REQUIRE(b.has_value());
    CHECK(b->value == 32 / (32 - 24));
    CHECK_FALSE(e.plotkin_upper_real(4, 2, 2).has_value());
    // relaxation never beats the integer version
    for (int n = 2; n <= 10; ++n)
        for (int d = 1; d <= n; ++d)
            for (int w = 0; w <= n; ++w) {
                auto real = e.plotkin_upper_real(n, d, w);
                auto integer = e.plotkin_upper_integer(n, d, w);
                if (real && integer) CHECK(real->value >= integer->value);
            }
}

TEST_CASE("halving") {
    BoundEngine e;
    CHECK(e.halving(Bound{48, {"x"}}, 2).value == 24);
    CHECK(e.halving(Bound{5, {"x"}}, 3).value == 2);
    CHECK(e.halving(Bound{0, {"x"}}, 1).value == 0);
    CHECK_THROWS_AS(e.halving(Bound{4, {"x"}}, 0), std::invalid_argument);
}

TEST_CASE("johnson upper examples") {
    BoundEngine e;
    CHECK(e.johnson_upper(4, 2, 2, ConstraintKind::GC).value == 48);
    CHECK(e.johnson_upper(8, 8, 4, ConstraintKind::GC).value == 4);
    CHECK(e.johnson_upper(6, 6, 3, ConstraintKind::GC_RC).value == 2);
    CHECK_FALSE(e.johnson_upper(4, 2, 2, ConstraintKind::GC).provenance.empty());
}

TEST_CASE("johnson upper respects the w symmetry") {
    BoundEngine e;
    for (int n = 1; n <= 10; ++n)
        for (int d = 1; d <= n; ++d)
            for (int w = 0; w <= n; ++w)
                CHECK(e.johnson_upper(n, d, w, ConstraintKind::GC).value ==
                      e.johnson_upper(n, d, n - w, ConstraintKind::GC).value);
}

TEST_CASE("best bounds examples") {
    BoundEngine e;
    e.register_construction(4, 2, 2, ConstraintKind::GC_RC, 24, "lexicode(59^1)");
    auto b = e.best_bounds(4, 2, 2, ConstraintKind::GC_RC);
    CHECK(b.lower.value == 24);
    CHECK(b.upper.value == 24);
    CHECK(b.exact());

    auto c = e.best_bounds(12, 12, 6, ConstraintKind::GC_RC);
    CHECK(c.lower.value == 2);
    CHECK(c.upper.value == 2);
}

TEST_CASE("registration keeps the maximum and is idempotent") {
    BoundEngine e;
    e.register_construction(6, 3, 3, ConstraintKind::GC, 90, "lexicode(a)");
    e.register_construction(6, 3, 3, ConstraintKind::GC, 96, "lexicode(b)");
    e.register_construction(6, 3, 3, ConstraintKind::GC, 96, "lexicode(b)");
    e.register_construction(6, 3, 3, ConstraintKind::GC, 50, "lexicode(c)");
    CHECK(e.best_bounds(6, 3, 3, ConstraintKind::GC).lower.value == 96);
}

TEST_CASE("bound consistency sweep, n <= 10") {
    BoundEngine e;
    for (int n = 1; n <= 10; ++n)
        for (int d = 1; d <= n; ++d)
            for (int w = 0; w <= n; ++w)
                for (auto kind : {ConstraintKind::GC, ConstraintKind::GC_RC}) {
                    auto b = e.best_bounds(n, d, w, kind);
                    CHECK(b.lower.value <= b.upper.value);
                }
}
