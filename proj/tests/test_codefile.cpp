#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <variant>

#include "dnacode/lexicode.hpp"

using namespace dnacode;

TEST_CASE("write/read round-trip, single offset") {
    Code code = construct({6, 3, 3, ConstraintKind::GC_RC}, SingleOffset{0x42d, OrderingSpec(4)});
    std::ostringstream out;
    write_code(out, code);

    std::istringstream in(out.str());
    Code back = read_code(in);
    CHECK(back.params == code.params);
    REQUIRE(back.size() == code.size());
    for (std::size_t i = 0; i < code.size(); ++i) CHECK(back.words[i] == code.words[i]);
    REQUIRE(back.spec.has_value());
    CHECK(offset_to_string(*back.spec) == offset_to_string(*code.spec));
}

TEST_CASE("write/read round-trip, factored offset") {
    Code code = construct({6, 4, 3, ConstraintKind::GC_RC}, FactoredOffset{0x12, 0x19});
    std::ostringstream out;
    write_code(out, code);
    std::istringstream in(out.str());
    Code back = read_code(in);
    REQUIRE(back.spec.has_value());
    CHECK(std::holds_alternative<FactoredOffset>(*back.spec));
    CHECK(back.size() == code.size());
}

TEST_CASE("codes without an offset record a dash") {
    Code code{{4, 2, 2, ConstraintKind::GC}, {DnaWord::parse("AACG")}, std::nullopt};
    std::ostringstream out;
    write_code(out, code);
    CHECK(out.str().find("offset=-") != std::string::npos);
    std::istringstream in(out.str());
    Code back = read_code(in);
    CHECK_FALSE(back.spec.has_value());
    CHECK(back.words[0].str() == "AACG");
}

TEST_CASE("header fields are parsed") {
    std::istringstream in("# n=4 d=2 w=2 constraint=gc ordering=- offset=-\nAACG\nACCA\n");
    Code code = read_code(in);
    CHECK(code.params.n == 4);
    CHECK(code.params.d == 2);
    CHECK(code.params.w == 2);
    CHECK(code.params.kind == ConstraintKind::GC);
    CHECK(code.size() == 2);
}

TEST_CASE("malformed inputs are rejected") {
    std::istringstream no_header("AACG\n");
    CHECK_THROWS_AS(read_code(no_header), std::invalid_argument);

    std::istringstream bad_word("# n=4 d=2 w=2 constraint=gc ordering=- offset=-\nAACX\n");
    CHECK_THROWS_AS(read_code(bad_word), std::invalid_argument);

    std::istringstream bad_len("# n=4 d=2 w=2 constraint=gc ordering=- offset=-\nAACGT\n");
    CHECK_THROWS_AS(read_code(bad_len), std::invalid_argument);

    std::istringstream bad_kind("# n=4 d=2 w=2 constraint=zz ordering=- offset=-\n");
    CHECK_THROWS_AS(read_code(bad_kind), std::invalid_argument);
}

TEST_CASE("file round-trip") {
    Code code = construct({4, 2, 2, ConstraintKind::GC}, SingleOffset{0, OrderingSpec(1)});
    std::string path = "roundtrip_test_code.txt";
    write_code_file(path, code);
    Code back = read_code_file(path);
    CHECK(back.size() == code.size());
    CHECK(back.params == code.params);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_code_file("no_such_file_here.txt"), std::runtime_error);
}
