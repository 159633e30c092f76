#ifndef DNACODE_CODE_HPP
#define DNACODE_CODE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dnacode/words.hpp"

namespace dnacode {

enum class ConstraintKind {
    GC,     // constant GC-content only
    GC_RC,  // plus reverse-complement cross distance
    GC_R,   // plus reverse cross distance
};

std::string to_string(ConstraintKind kind);
std::optional<ConstraintKind> constraint_from_string(std::string_view text);

struct CodeParams {
    int n = 0;
    int d = 0;
    int w = 0;
    ConstraintKind kind = ConstraintKind::GC;

    void validate() const;  // throws std::invalid_argument

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// A verified-by-construction word list plus the ordering/offset it came from.
struct Code {
    CodeParams params;
    std::vector<DnaWord> words;
    std::optional<OffsetSpec> spec;  // absent for product-built codes

    std::size_t size() const { return words.size(); }
};

// Cross-constraint image under the code's kind: reverse-complement for GC_RC,
// plain reversal for GC_R, nullopt for GC.
std::optional<DnaWord> constraint_image(const DnaWord& x, ConstraintKind kind);

// Code file format shared by construct/product/verify:
//   # n=<n> d=<d> w=<w> constraint=<gc|gcrc|gcr> ordering=<1-6|-> offset=<hex|h1(.)h2|->
// then one ACGT word per line in acceptance order.
void write_code(std::ostream& out, const Code& code);
Code read_code(std::istream& in);

void write_code_file(const std::string& path, const Code& code);
Code read_code_file(const std::string& path);

}  // namespace dnacode

#endif
