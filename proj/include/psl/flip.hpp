#pragma once

#include "psl/sequence.hpp"

#include <span>

namespace psl {

// Index geometry of a single-bit flip at `position` in a length-`length`
// sequence. Sidelobe entries below delta_min are untouched (both terms of
// the flipped bit fall outside the overlap), entries from pair_begin() up
// receive corrections from both sides, the band in between from one side.
struct flip_geometry {
    std::size_t length;
    std::size_t position;
    std::size_t delta_min;
    std::size_t delta_max;
    bool low_half;  // true when the position sits in the lower half

    flip_geometry(std::size_t length, std::size_t position);

    std::size_t pair_begin() const noexcept { return low_half ? delta_max - 1 : delta_max; }
};

// In-place O(n) update: negates seq[position] and patches `sidelobes` so it
// again equals compute_sidelobes(seq). The caller guarantees the array
// matches the sequence on entry; checking that would cost O(n^2), so it is
// only asserted when PSL_FLIP_PARANOIA is defined (debug builds).
//
// Applying the same flip twice restores both arguments exactly.
void flip_update(std::size_t position, binary_sequence& seq, sidelobe_array& sidelobes);

// Sequential single flips; every position is validated before anything is
// mutated, so an out-of-range entry leaves the state untouched.
void flip_many(std::span<const std::size_t> positions, binary_sequence& seq,
               sidelobe_array& sidelobes);

}  // namespace psl
