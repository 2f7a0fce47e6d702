#include "psl/flip.hpp"

#ifdef PSL_FLIP_PARANOIA
#include <cassert>
#endif

namespace psl {

flip_geometry::flip_geometry(std::size_t length, std::size_t position)
    : length(length), position(position) {
    if (length < 2) throw std::invalid_argument("flip needs a sequence of length at least 2");
    if (position >= length) throw std::invalid_argument("flip position out of range");
    delta_min = std::min(length - position - 1, position);
    delta_max = std::max(length - position, position);
    low_half = 2 * position <= length - 1;
}

// Core update, bounds already validated. Every sidelobe entry w[i] is the
// sum of products s[j]*s[j+u] with u = n-1-i; flipping s[f] changes each
// product containing position f by -2*s[f]*partner, where partner is the
// other factor. Entries with i >= pair_begin see f from both sides.
static void flip_core(std::size_t f, binary_sequence& seq, sidelobe_array& lobes) {
    const std::size_t n = seq.size();
    spin* s = seq.data();
    std::int32_t* w = lobes.data();
    const flip_geometry g(n, f);
    const std::size_t pair = g.pair_begin();
    const std::int32_t twice = 2 * static_cast<std::int32_t>(s[f]);

    if (g.low_half) {
        for (std::size_t i = g.delta_min; i < pair; ++i)
            w[i] -= twice * s[f + (n - 1 - i)];
    } else {
        const std::size_t offset = n - 1 - f;
        for (std::size_t i = g.delta_min; i < pair; ++i)
            w[i] -= twice * s[i - offset];
    }
    for (std::size_t i = pair; i < n - 1; ++i) {
        const std::size_t u = n - 1 - i;
        w[i] -= twice * (static_cast<std::int32_t>(s[f + u]) + s[f - u]);
    }
    s[f] = static_cast<spin>(-s[f]);
}

void flip_update(std::size_t position, binary_sequence& seq, sidelobe_array& sidelobes) {
    if (sidelobes.owner_length() != seq.size())
        throw std::invalid_argument("sidelobe array does not match the sequence length");
    if (position >= seq.size()) throw std::invalid_argument("flip position out of range");
#ifdef PSL_FLIP_PARANOIA
    assert(sidelobes == compute_sidelobes(seq) && "stale sidelobe array passed to flip_update");
#endif
    flip_core(position, seq, sidelobes);
}

void flip_many(std::span<const std::size_t> positions, binary_sequence& seq,
               sidelobe_array& sidelobes) {
    if (sidelobes.owner_length() != seq.size())
        throw std::invalid_argument("sidelobe array does not match the sequence length");
    for (std::size_t p : positions)
        if (p >= seq.size()) throw std::invalid_argument("flip position out of range");
    for (std::size_t p : positions) flip_core(p, seq, sidelobes);
}

}  // namespace psl
