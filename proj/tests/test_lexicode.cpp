#include <doctest.h>

#include <set>

#include "dnacode/lexicode.hpp"
#include "dnacode/verify.hpp"

using namespace dnacode;

namespace {

OffsetSpec zero_ord1() { return SingleOffset{0, OrderingSpec(1)}; }

}  // namespace

TEST_CASE("published sizes at zero offset, small cases") {
    CHECK(construct({4, 2, 2, ConstraintKind::GC}, zero_ord1()).size() == 48);
    CHECK(construct({6, 6, 3, ConstraintKind::GC_RC}, zero_ord1()).size() == 2);
    CHECK(construct({4, 4, 2, ConstraintKind::GC}, zero_ord1()).size() == 4);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(construct({4, 5, 2, ConstraintKind::GC}, zero_ord1()),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct({4, 0, 2, ConstraintKind::GC}, zero_ord1()),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct({4, 2, 5, ConstraintKind::GC}, zero_ord1()),
                    std::invalid_argument);
}

TEST_CASE("construction is deterministic") {
    CodeParams params{6, 3, 3, ConstraintKind::GC_RC};
    OffsetSpec spec = SingleOffset{0x42d, OrderingSpec(4)};
    Code a = construct(params, spec);
    Code b = construct(params, spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.words[i] == b.words[i]);
}

TEST_CASE("all constructed codes verify") {
    for (auto kind : {ConstraintKind::GC, ConstraintKind::GC_RC, ConstraintKind::GC_R}) {
        Code code = construct({6, 3, 3, kind}, zero_ord1());
        CHECK(verify(code).pass);
    }
}

TEST_CASE("maximality: no rejected word can be added, n <= 8") {
    struct Case {
        CodeParams params;
        OffsetSpec spec;
    };
    std::vector<Case> cases = {
        {{4, 2, 2, ConstraintKind::GC}, zero_ord1()},
        {{6, 3, 3, ConstraintKind::GC}, SingleOffset{0, OrderingSpec(2)}},
        {{6, 4, 3, ConstraintKind::GC_RC}, FactoredOffset{0x12, 0x19}},
        {{8, 5, 4, ConstraintKind::GC_RC}, SingleOffset{0xd3de, OrderingSpec(5)}},
        {{7, 3, 3, ConstraintKind::GC}, zero_ord1()},
    };
    for (const auto& c : cases) {
        Code code = construct(c.params, c.spec);
        const int n = c.params.n, d = c.params.d;
        std::set<std::uint64_t> member;
        for (const auto& w : code.words) member.insert(w.bits());

        for (std::uint64_t bits = 0; bits < (1ull << (2 * n)); ++bits) {
            if (member.count(bits)) continue;
            DnaWord cand(n, bits);
            if (gc_content(cand) != c.params.w) continue;
            auto self = constraint_image(cand, c.params.kind);
            if (self && hamming(cand, *self) < d) continue;
            bool compatible = true;
            for (const auto& w : code.words) {
                if (hamming(cand, w) < d) { compatible = false; break; }
                auto img = constraint_image(w, c.params.kind);
                if (img && hamming(cand, *img) < d) { compatible = false; break; }
            }
            CHECK_FALSE(compatible);
        }
    }
}

TEST_CASE("lexicodes meet the Gilbert-type lower bounds") {
    BoundEngine e;
    for (int n : {4, 6}) {
        int w = n / 2;
        for (int d = 1; d <= n; ++d) {
            CHECK(construct({n, d, w, ConstraintKind::GC}, zero_ord1()).size() >=
                  e.gilbert_lower_gc(n, d, w).value);
            CHECK(construct({n, d, w, ConstraintKind::GC_RC}, zero_ord1()).size() >=
                  e.gilbert_lower_gcrc(n, d, w).value);
        }
    }
}

TEST_CASE("doubling a GC_RC code preserves distance and doubles size") {
    Code code = construct({6, 3, 3, ConstraintKind::GC_RC}, zero_ord1());
    std::vector<DnaWord> doubled = code.words;
    for (const auto& w : code.words) doubled.push_back(reverse_complement(w));
    std::set<std::uint64_t> distinct;
    for (const auto& w : doubled) distinct.insert(w.bits());
    CHECK(distinct.size() == 2 * code.size());
    for (std::size_t i = 0; i < doubled.size(); ++i)
        for (std::size_t j = i + 1; j < doubled.size(); ++j)
            CHECK(hamming(doubled[i], doubled[j]) >= code.params.d);
}

TEST_CASE("register_result feeds the bound engine") {
    BoundEngine e;
    Code code = construct({4, 2, 2, ConstraintKind::GC}, zero_ord1());
    register_result(e, code);
    register_result(e, code);  // idempotent
    CHECK(e.best_bounds(4, 2, 2, ConstraintKind::GC).lower.value >= 48);

    Code broken = code;
    broken.words.push_back(code.words.front());  // duplicate
    CHECK_THROWS_AS(register_result(e, broken), std::invalid_argument);
}
