#pragma once

#include "psl/sequence.hpp"

namespace psl {

// Reference implementations for testing. Deliberately naive and kept apart
// from the optimized code paths they vouch for.

// Same contract as compute_sidelobes, written directly from the definition
// of the reversed ordering.
sidelobe_array oracle_sidelobes(const binary_sequence& seq);

struct exhaustive_result {
    std::int32_t psl = 0;
    binary_sequence witness;
};

// True minimum PSL over all 2^n sequences, n in [2, 24]. Prunes with the
// PSL-preserving symmetries (negation, reversal, alternating negation),
// visiting one representative per orbit.
exhaustive_result exhaustive_min_psl(std::size_t n);

}  // namespace psl
