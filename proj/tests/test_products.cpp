#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "dnacode/bounds.hpp"
#include "dnacode/products.hpp"
#include "dnacode/verify.hpp"

using namespace dnacode;

TEST_CASE("parity code") {
    ComponentCode c2 = parity_code(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2.binary_words[0].str() == "00");
    CHECK(c2.binary_words[1].str() == "11");

    ComponentCode c4 = parity_code(4);
    CHECK(c4.size() == 8);
    for (std::size_t i = 0; i < c4.size(); ++i)
        for (std::size_t j = i + 1; j < c4.size(); ++j)
            CHECK(hamming(c4.binary_words[i], c4.binary_words[j]) >= 2);

    CHECK(parity_code(1).size() == 1);
}

TEST_CASE("binary lexicodes") {
    CHECK(binary_cw_lexicode(4, 2, 2).size() == 6);
    CHECK(binary_lexicode(4, 2).size() == 8);
    CHECK(ternary_cw_lexicode(3, 3, 3).size() >= 2);
    CHECK_THROWS_AS(binary_cw_lexicode(4, 2, 5), std::invalid_argument);
}

TEST_CASE("odd weight reversal-constrained code") {
    CHECK(odd_weight_r_code(2).size() == 1);

    ComponentCode c = odd_weight_r_code(4);
    REQUIRE(c.size() == 4);
    CHECK(c.r_constrained);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i != j) CHECK(hamming(c.binary_words[i], c.binary_words[j]) >= 2);
            CHECK(hamming(c.binary_words[i], c.binary_words[j].reversed()) >= 2);
        }

    CHECK_THROWS_AS(odd_weight_r_code(3), std::invalid_argument);
}

TEST_CASE("product of constant-weight and parity codes meets the d=2 formula") {
    Code code = product_gc(binary_cw_lexicode(4, 2, 2), parity_code(4));
    CHECK(code.size() == 48);
    CHECK(code.params.kind == ConstraintKind::GC);
    CHECK(code.params.d == 2);
    CHECK(verify(code).pass);
    std::set<std::uint64_t> distinct;
    for (const auto& w : code.words) distinct.insert(w.bits());
    CHECK(distinct.size() == code.size());
}

TEST_CASE("single-pair product") {
    ComponentCode b1{.alphabet = 2, .n = 4, .d = 4, .w = 2, .binary_words = {BinaryWord::parse("1100")}};
    ComponentCode b2{.alphabet = 2, .n = 4, .d = 4, .binary_words = {BinaryWord::parse("0000")}};
    Code code = product_gc(b1, b2);
    REQUIRE(code.size() == 1);
    CHECK(code.words[0].str() == "CCTT");
}

TEST_CASE("product with the odd-weight code is reversal-constrained") {
    Code code = product_gc(binary_cw_lexicode(4, 2, 2), odd_weight_r_code(4));
    CHECK(code.size() == 24);
    CHECK(code.params.kind == ConstraintKind::GC_R);
    CHECK(verify(code).pass);
}

TEST_CASE("ternary product") {
    ComponentCode t{.alphabet = 3,
                    .n = 3,
                    .d = 2,
                    .w = 2,
                    .ternary_words = {TernaryWord::parse("110"), TernaryWord::parse("220")}};
    ComponentCode b{.alphabet = 2, .n = 1, .d = 2, .binary_words = {BinaryWord(1, 0)}};
    Code code = product_ternary(t, b);
    REQUIRE(code.size() == 2);
    CHECK(code.words[0].str() == "CCA");
    CHECK(code.words[1].str() == "GGA");
    CHECK(hamming(code.words[0], code.words[1]) == 2);

    ComponentCode t2{.alphabet = 3, .n = 2, .d = 2, .w = 2,
                     .ternary_words = {TernaryWord::parse("12")}};
    ComponentCode empty_len{.alphabet = 2, .n = 0, .d = 2, .binary_words = {BinaryWord(0, 0)}};
    Code single = product_ternary(t2, empty_len);
    REQUIRE(single.size() == 1);
    CHECK(single.words[0].str() == "CG");

    CHECK_THROWS_AS(product_ternary(t, empty_len), std::invalid_argument);
}

TEST_CASE("gc content of product words equals the first factor weight") {
    Code g = product_gc(binary_cw_lexicode(6, 2, 2), parity_code(6));
    for (const auto& w : g.words) CHECK(gc_content(w) == 2);
    CHECK(g.size() == binary_cw_lexicode(6, 2, 2).size() * parity_code(6).size());

    ComponentCode t = ternary_cw_lexicode(5, 2, 3);
    Code p = product_ternary(t, parity_code(2));
    for (const auto& w : p.words) CHECK(gc_content(w) == 3);
}

TEST_CASE("d=2 product witnesses meet the closed forms for n <= 8") {
    BoundEngine engine;
    for (int n = 2; n <= 8; n += 2) {
        for (int w = 0; w <= n; ++w) {
            Code gc = product_gc(binary_cw_lexicode(n, 2, w), parity_code(n));
            CHECK(gc.size() == *engine.exact_d2(n, w, ConstraintKind::GC));
            CHECK(verify(gc).pass);

            Code rc = r_to_rc(product_gc(binary_cw_lexicode(n, 2, w), odd_weight_r_code(n)));
            CHECK(rc.size() == *engine.exact_d2(n, w, ConstraintKind::GC_RC));
            CHECK(verify(rc).pass);
        }
    }
}

TEST_CASE("r_to_rc complements the first half") {
    ComponentCode b1{.alphabet = 2, .n = 4, .d = 2, .w = 2, .r_constrained = true,
                     .binary_words = {BinaryWord::parse("1100")}};
    ComponentCode b2{.alphabet = 2, .n = 4, .d = 2, .binary_words = {BinaryWord::parse("0000")}};
    Code source = product_gc(b1, b2);
    REQUIRE(source.words[0].str() == "CCTT");
    Code target = r_to_rc(source);
    CHECK(target.words[0].str() == "GGTT");
    CHECK(target.params.kind == ConstraintKind::GC_RC);
}

TEST_CASE("r_to_rc distance identity for even n, exhaustive n=4") {
    // complementing the first half turns reversal cross-distances into
    // reverse-complement cross-distances, exactly, for even n
    for (std::uint64_t a = 0; a < 256; ++a)
        for (std::uint64_t b = 0; b < 256; ++b) {
            DnaWord x1(4, a), x2(4, b);
            DnaWord y1(4, a ^ 0xf0), y2(4, b ^ 0xf0);  // complement positions 1..2
            CHECK(hamming(x1, reverse_word(x2)) == hamming(y1, reverse_complement(y2)));
            CHECK(hamming(x1, x2) == hamming(y1, y2));
            CHECK(gc_content(x1) == gc_content(y1));
        }
}

TEST_CASE("r_to_rc on odd n loses at most one, sampled") {
    std::mt19937_64 rng(31);
    for (int n : {5, 7}) {
        std::uint64_t half_mask = ((1ull << (2 * (n / 2))) - 1) << (2 * (n - n / 2));
        std::uint64_t mask = (1ull << (2 * n)) - 1;
        for (int trial = 0; trial < 500; ++trial) {
            DnaWord x1(n, rng() & mask), x2(n, rng() & mask);
            DnaWord y1(n, x1.bits() ^ half_mask), y2(n, x2.bits() ^ half_mask);
            int dr = hamming(x1, reverse_word(x2));
            int drc = hamming(y1, reverse_complement(y2));
            CHECK(std::abs(dr - drc) <= 1);
        }
    }
}
