#include "psl/oracle.hpp"

#include <array>
#include <climits>

namespace psl {

sidelobe_array oracle_sidelobes(const binary_sequence& seq) {
    const std::size_t n = seq.size();
    std::vector<std::int32_t> values(n - 1);
    // entry i has i+1 overlapping terms: products at distance n-1-i
    for (std::size_t i = 0; i < n - 1; ++i) {
        std::int32_t acc = 0;
        for (std::size_t j = 0; j <= i; ++j)
            acc += static_cast<std::int32_t>(seq[j]) * seq[j + (n - 1 - i)];
        values[i] = acc;
    }
    return sidelobe_array(std::move(values), n);
}

namespace {

std::array<std::uint8_t, 256> make_byte_reverse_table() {
    std::array<std::uint8_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        unsigned r = 0;
        for (unsigned i = 0; i < 8; ++i)
            if (b & (1u << i)) r |= 1u << (7 - i);
        t[b] = static_cast<std::uint8_t>(r);
    }
    return t;
}

std::uint32_t reverse_low_bits(std::uint32_t v, unsigned n) {
    static const std::array<std::uint8_t, 256> table = make_byte_reverse_table();
    const std::uint32_t full = (static_cast<std::uint32_t>(table[v & 0xFF]) << 24) |
                               (static_cast<std::uint32_t>(table[(v >> 8) & 0xFF]) << 16) |
                               (static_cast<std::uint32_t>(table[(v >> 16) & 0xFF]) << 8) |
                               static_cast<std::uint32_t>(table[(v >> 24) & 0xFF]);
    return full >> (32 - n);
}

// PSL of the mask's sequence, giving up early once it reaches `bound`.
int mask_psl_below(const spin* s, std::size_t n, int bound) {
    int peak = 0;
    for (std::size_t u = 1; u < n; ++u) {
        int c = 0;
        for (std::size_t j = 0; j + u < n; ++j)
            c += static_cast<int>(s[j]) * s[j + u];
        const int a = c < 0 ? -c : c;
        if (a > peak) {
            peak = a;
            if (peak >= bound) return peak;
        }
    }
    return peak;
}

}  // namespace

exhaustive_result exhaustive_min_psl(std::size_t n) {
    if (n < 2 || n > 24)
        throw std::invalid_argument("exhaustive search supports lengths 2 through 24");
    const std::uint32_t count = 1u << n;
    const std::uint32_t full = count - 1;
    const std::uint32_t alternating = 0xAAAAAAAAu & full;

    int best = INT_MAX;
    std::uint32_t best_mask = 0;
    spin buffer[24];

    for (std::uint32_t mask = 0; mask < count; ++mask) {
        // negation, reversal, and alternating negation preserve PSL; visit
        // only the smallest mask of each orbit (at most 8 images)
        const std::uint32_t reversed = reverse_low_bits(mask, static_cast<unsigned>(n));
        std::uint32_t smallest = mask;
        for (std::uint32_t image : {mask, reversed, mask ^ alternating, reversed ^ alternating}) {
            smallest = std::min(smallest, image);
            smallest = std::min(smallest, image ^ full);
        }
        if (smallest != mask) continue;

        for (std::size_t i = 0; i < n; ++i)
            buffer[i] = (mask >> i) & 1 ? spin{-1} : spin{1};
        const int psl = mask_psl_below(buffer, n, best);
        if (psl < best) {
            best = psl;
            best_mask = mask;
        }
    }

    std::vector<spin> witness(n);
    for (std::size_t i = 0; i < n; ++i)
        witness[i] = (best_mask >> i) & 1 ? spin{-1} : spin{1};
    return {best, binary_sequence(std::move(witness))};
}

}  // namespace psl
