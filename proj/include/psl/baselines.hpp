#pragma once

#include "psl/sequence.hpp"

#include <cstdint>

namespace psl {

// Polynomial over GF(2); bit i of coefficient_mask holds the coefficient
// of x^i. The leading (degree) and constant bits must both be set.
struct primitive_polynomial {
    unsigned degree;
    std::uint32_t coefficient_mask;

    primitive_polynomial(unsigned degree, std::uint32_t coefficient_mask);
};

// One known primitive polynomial per degree in [2, 17].
primitive_polynomial builtin_polynomial(unsigned degree);

// True iff x has maximal order 2^degree - 1 in GF(2)[x]/(poly), which for
// the degrees handled here is exactly primitivity.
bool is_primitive(const primitive_polynomial& poly);

// Maximal-length LFSR output over one full period 2^degree - 1, bits
// mapped 1 -> +1 and 0 -> -1.
binary_sequence mseq(const primitive_polynomial& poly, std::uint32_t initial_state = 1);

// Periodic (cyclic) autocorrelation at the given shift.
std::int64_t periodic_acf(const binary_sequence& seq, std::size_t shift);

// Quadratic-residue indicator sequence of length p for an odd prime p;
// index 0 gets +1, index j gets +1 iff j is a residue mod p.
binary_sequence legendre(std::uint64_t p);

// Length 2^k sign sequence: +1 where the number of overlapping "11" pairs
// in the binary expansion of the index is even.
binary_sequence rudin_shapiro(unsigned k);

// Cyclic shift: element i of the result is seq[(i + shift) mod n].
binary_sequence rotate(const binary_sequence& seq, std::int64_t shift);

struct rotation_score {
    std::size_t shift = 0;
    std::int32_t psl = 0;
};

// Rotation with the smallest aperiodic PSL; ties go to the smallest shift.
// Scanning all n rotations costs O(n^3) and is parallelized internally;
// the result does not depend on the thread count.
rotation_score best_rotation_psl(const binary_sequence& seq);

}  // namespace psl
