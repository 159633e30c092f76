#ifndef DNACODE_BOUNDS_HPP
#define DNACODE_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dnacode/code.hpp"

namespace dnacode {

std::uint64_t binomial(int n, int k);  // 0 when k out of range

// Integer bound with the chain of formulas that produced it, innermost last.
struct Bound {
    std::uint64_t value = 0;
    std::vector<std::string> provenance;
};

// Exact values and fallbacks for the binary code sizes the shortening
// recursion bottoms out at.  Exactness matters: optimality claims inherit it.
class BinaryBoundProvider {
  public:
    struct Value {
        std::uint64_t value;
        bool exact;
        std::string method;
    };

    // Best known upper bound on the maximum binary code size for (n, d).
    Value upper(int n, int d) const;
    // Trivial constructive lower bound.
    Value lower(int n, int d) const;
    // Exact value when known (n <= 16 plus the closed-form families).
    std::optional<std::uint64_t> exact(int n, int d) const;

    // Constant-weight variant; exact for the closed-form cases, otherwise a
    // Johnson-recursion upper marked approximate.
    Value upper_cw(int n, int d, int w) const;
};

// Memoizing evaluator for all bounds.  Construction-derived lower bounds are
// registered explicitly; queries never mutate registered state.
class BoundEngine {
  public:
    // Exact special cases: w=0 (binary), d<=1, d=n, with the w <-> n-w
    // symmetry applied first.  Absent when no case matches.
    std::optional<std::uint64_t> special_exact(int n, int d, int w, ConstraintKind kind) const;

    // Exact values at d=2; absent for GC_RC/GC_R with odd n.
    std::optional<std::uint64_t> exact_d2(int n, int w, ConstraintKind kind) const;

    Bound johnson_upper(int n, int d, int w, ConstraintKind kind);

    std::optional<Bound> plotkin_upper_integer(int n, int d, int w) const;
    std::optional<Bound> plotkin_upper_real(int n, int d, int w) const;

    Bound halving(const Bound& upper_gc, int d) const;

    // Number of GC-content-w words within Hamming distance r of a fixed
    // GC-content-w word (independent of the center).
    std::uint64_t ball_volume(int n, int w, int r) const;

    Bound gilbert_lower_gc(int n, int d, int w) const;
    Bound sphere_packing_upper(int n, int d, int w) const;

    // #{x : gc_content(x)=w, H(x, x^RC)=d}; zero when n,d differ in parity.
    std::uint64_t v_count(int n, int w, int d) const;

    Bound gilbert_lower_gcrc(int n, int d, int w) const;

    struct BestBounds {
        Bound lower;
        Bound upper;
        bool exact() const { return lower.value == upper.value; }
    };
    BestBounds best_bounds(int n, int d, int w, ConstraintKind kind);

    // Feeds a verified construction size in as a lower bound.  Idempotent;
    // keeps the largest size seen per parameter set.
    void register_construction(int n, int d, int w, ConstraintKind kind,
                               std::uint64_t size, const std::string& provenance);

    const BinaryBoundProvider& binary() const { return binary_; }

  private:
    struct Cell {
        std::uint64_t value;
        std::string method;                          // formula applied at this node
        std::optional<std::tuple<int, int, int>> child;  // johnson recursion child, if any
    };

    const Cell& johnson_gc_cell(int n, int d, int w);
    Bound bound_from_cell(int n, int d, int w);

    BinaryBoundProvider binary_;
    std::map<std::tuple<int, int, int>, Cell> memo_;
    std::map<std::tuple<int, int, int, ConstraintKind>, std::pair<std::uint64_t, std::string>> registered_;
};

}  // namespace dnacode

#endif
