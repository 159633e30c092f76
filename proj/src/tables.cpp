#include "dnacode/tables.hpp"

#include <stdexcept>

#include "dnacode/bounds.hpp"

namespace dnacode {

namespace {

TableEntrySpec entry(int n, int d, ConstraintKind kind, std::uint64_t size, bool optimal,
                     std::string offset, std::optional<std::uint64_t> stochastic = std::nullopt) {
    TableEntrySpec e;
    e.n = n;
    e.d = d;
    e.w = n / 2;
    e.kind = kind;
    e.expected_size = size;
    e.optimal = optimal;
    e.formula_d2 = offset == "-";
    e.better_stochastic = stochastic;
    e.offset_text = std::move(offset);
    return e;
}

std::vector<TableEntrySpec> build_table1() {
    const auto K = ConstraintKind::GC_RC;
    return {
        entry(4, 2, K, 24, true, "59^1"),
        entry(4, 3, K, 6, true, "59^2"),
        entry(4, 4, K, 2, true, "0^1"),
        entry(6, 2, K, 320, true, "0^1"),
        entry(6, 3, K, 39, false, "42d^4", 41),
        entry(6, 4, K, 16, false, "12o19"),
        entry(6, 5, K, 4, true, "bfc^2"),
        entry(6, 6, K, 2, true, "0^1"),
        entry(8, 2, K, 4480, true, "5021^1"),
        entry(8, 3, K, 384, false, "44dd^2", 390),
        entry(8, 4, K, 112, false, "4eo95"),
        entry(8, 5, K, 25, false, "d3de^5", 26),
        entry(8, 6, K, 10, false, "90a5^5", 12),
        entry(8, 7, K, 2, true, "0^1"),
        entry(8, 8, K, 2, true, "0^1"),
        entry(10, 2, K, 64512, true, "0^1"),
        entry(10, 3, K, 4084, false, "0^5"),
        entry(10, 4, K, 795, false, "bfc99^1"),
        entry(10, 5, K, 166, false, "0^5"),
        entry(10, 6, K, 46, false, "0^1"),
        entry(10, 7, K, 15, false, "c0d96^1"),
        entry(10, 8, K, 6, false, "c54c6^2"),
        entry(10, 9, K, 2, true, "0^1"),
        entry(10, 10, K, 2, true, "0^1"),
        entry(12, 2, K, 946176, true, "-"),
        entry(12, 3, K, 49764, false, "0o0"),
        entry(12, 4, K, 8704, false, "0o0"),
        entry(12, 5, K, 1362, false, "0^2"),
        entry(12, 6, K, 306, false, "4121c8^4"),
        entry(12, 7, K, 81, false, "0^5"),
        entry(12, 8, K, 27, false, "0^2"),
        entry(12, 9, K, 10, false, "96c697^1"),
        entry(12, 10, K, 4, true, "96c697^1"),
        entry(12, 11, K, 2, true, "0^1"),
        entry(12, 12, K, 2, true, "0^1"),
    };
}

std::vector<TableEntrySpec> build_table2() {
    const auto K = ConstraintKind::GC;
    return {
        entry(4, 2, K, 48, true, "0^1"),
        entry(4, 3, K, 12, true, "0^1"),
        entry(4, 4, K, 4, true, "0^1"),
        entry(6, 2, K, 640, true, "0^1"),
        entry(6, 3, K, 96, false, "0^2"),
        entry(6, 4, K, 40, true, "434^1"),
        entry(6, 5, K, 8, false, "0^1"),
        entry(6, 6, K, 4, true, "0^1"),
        entry(8, 2, K, 8960, true, "0^1"),
        entry(8, 3, K, 832, false, "5021^2"),
        entry(8, 4, K, 224, false, "0o0"),
        entry(8, 5, K, 56, false, "2do23"),
        entry(8, 6, K, 20, false, "90f6^1", 24),
        entry(8, 7, K, 5, true, "0^1"),
        entry(8, 8, K, 4, true, "0^1"),
        entry(10, 2, K, 129024, true, "0^1"),
        entry(10, 3, K, 9344, false, "0o0"),
        entry(10, 4, K, 1676, false, "0^2"),
        entry(10, 5, K, 360, false, "0o0"),
        entry(10, 6, K, 96, false, "0o0"),
        entry(10, 7, K, 32, false, "0o0"),
        entry(10, 8, K, 16, true, "c8e60^5"),
        entry(10, 9, K, 5, true, "3792d^2"),
        entry(10, 10, K, 4, true, "0^1"),
        entry(12, 2, K, 1892352, true, "-"),
        entry(12, 3, K, 112640, false, "0o0"),
        entry(12, 4, K, 17408, false, "0o0"),
        entry(12, 5, K, 2992, false, "0o0"),
        entry(12, 6, K, 736, false, "0o0"),
        entry(12, 7, K, 177, false, "c8e605^1"),
        entry(12, 8, K, 68, false, "994o70b"),
        entry(12, 9, K, 22, false, "0o0"),
        entry(12, 10, K, 8, false, "0^2"),
        entry(12, 11, K, 4, true, "0^1"),
        entry(12, 12, K, 4, true, "0^1"),
    };
}

}  // namespace

bool TableEntrySpec::zero_offset() const {
    return offset_text.starts_with("0^") || offset_text == "0o0";
}

OffsetSpec TableEntrySpec::offset() const {
    if (formula_d2) throw std::logic_error("formula-substituted entry has no offset");
    auto caret = offset_text.find('^');
    if (caret != std::string::npos)
        return parse_offset(offset_text.substr(0, caret),
                            std::stoi(offset_text.substr(caret + 1)));
    return parse_offset(offset_text, std::nullopt);
}

const std::vector<TableEntrySpec>& table_entries(int table) {
    static const std::vector<TableEntrySpec> t1 = build_table1();
    static const std::vector<TableEntrySpec> t2 = build_table2();
    if (table == 1) return t1;
    if (table == 2) return t2;
    throw std::invalid_argument("table must be 1 or 2");
}

bool entry_is_slow(const TableEntrySpec& entry) {
    if (entry.formula_d2) return false;
    // pair-check budget: GC-w candidates times expected acceptances
    long double candidates = static_cast<long double>(binomial(entry.n, entry.w)) *
                             (1ull << entry.n);
    long double cost = candidates * static_cast<long double>(entry.expected_size) *
                       (entry.kind == ConstraintKind::GC ? 1 : 2);
    return cost > 1.5e11L;
}

}  // namespace dnacode
