#ifndef DNACODE_TABLES_HPP
#define DNACODE_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnacode/code.hpp"

namespace dnacode {

// One cell of the published lower-bound tables (even n up to 12, w = n/2).
struct TableEntrySpec {
    int n = 0;
    int d = 0;
    int w = 0;
    ConstraintKind kind = ConstraintKind::GC_RC;
    std::uint64_t expected_size = 0;
    bool optimal = false;      // matching upper bound is known
    bool formula_d2 = false;   // value from the closed form, not constructed
    std::optional<std::uint64_t> better_stochastic;  // larger size from cited search; not a target
    std::string offset_text;   // "<hex>^<ordering>", "<hex>o<hex>", or "-"

    bool zero_offset() const;
    OffsetSpec offset() const;  // throws for formula rows
};

// table 1: reverse-complement constrained; table 2: GC-content only.
const std::vector<TableEntrySpec>& table_entries(int table);

// Entries whose greedy scan is out of desk-scale budget.
bool entry_is_slow(const TableEntrySpec& entry);

}  // namespace dnacode

#endif
