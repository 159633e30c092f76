#ifndef DNACODE_LEXICODE_HPP
#define DNACODE_LEXICODE_HPP

#include "dnacode/bounds.hpp"
#include "dnacode/code.hpp"

namespace dnacode {

// Greedy lexicographic construction: scan all 4^n words in the order given by
// the offset spec, keep every word that has GC-content w, satisfies the
// self-image distance check (GC_RC / GC_R), and stays at distance >= d from
// every accepted word and every accepted word's image.  The result is maximal
// and fully determined by (params, spec).
Code construct(const CodeParams& params, const OffsetSpec& spec);

// Verifies the code with the independent checker and, on success, feeds its
// size into the bound engine as a constructive lower bound.  Throws on a code
// that fails verification.  Idempotent.
void register_result(BoundEngine& engine, const Code& code);

}  // namespace dnacode

#endif
