#include "psl/baselines.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace psl {

primitive_polynomial::primitive_polynomial(unsigned degree, std::uint32_t coefficient_mask)
    : degree(degree), coefficient_mask(coefficient_mask) {
    if (degree < 2 || degree > 24)
        throw std::invalid_argument("polynomial degree must be between 2 and 24");
    if (coefficient_mask >> degree != 1u)
        throw std::invalid_argument("coefficient mask must have exact degree");
    if ((coefficient_mask & 1u) == 0)
        throw std::invalid_argument("polynomial needs a nonzero constant term");
}

primitive_polynomial builtin_polynomial(unsigned degree) {
    // one known primitive polynomial per degree, x^d + ... + 1
    static constexpr std::uint32_t masks[] = {
        0x7,     // 2: x^2+x+1
        0xB,     // 3: x^3+x+1
        0x13,    // 4: x^4+x+1
        0x25,    // 5: x^5+x^2+1
        0x43,    // 6: x^6+x+1
        0x89,    // 7: x^7+x^3+1
        0x11D,   // 8: x^8+x^4+x^3+x^2+1
        0x211,   // 9: x^9+x^4+1
        0x409,   // 10: x^10+x^3+1
        0x805,   // 11: x^11+x^2+1
        0x1053,  // 12: x^12+x^6+x^4+x+1
        0x201B,  // 13: x^13+x^4+x^3+x+1
        0x4443,  // 14: x^14+x^10+x^6+x+1
        0x8003,  // 15: x^15+x+1
        0x1100B, // 16: x^16+x^12+x^3+x+1
        0x20009, // 17: x^17+x^3+1
    };
    if (degree < 2 || degree > 17)
        throw std::invalid_argument("built-in polynomials cover degrees 2 through 17");
    return primitive_polynomial(degree, masks[degree - 2]);
}

namespace {

// multiplication in GF(2)[x]/(poly); operands already reduced
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t poly, unsigned degree) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> degree & 1) a ^= poly;
    }
    return r;
}

std::uint64_t gf2_pow_x(std::uint64_t exponent, std::uint64_t poly, unsigned degree) {
    std::uint64_t base = 2;  // the polynomial x
    std::uint64_t r = 1;
    while (exponent) {
        if (exponent & 1) r = gf2_mulmod(r, base, poly, degree);
        base = gf2_mulmod(base, base, poly, degree);
        exponent >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t q = 2; q * q <= v; q += (q == 2 ? 1 : 2)) {
        if (v % q) continue;
        factors.push_back(q);
        while (v % q == 0) v /= q;
    }
    if (v > 1) factors.push_back(v);
    return factors;
}

}  // namespace

bool is_primitive(const primitive_polynomial& poly) {
    const std::uint64_t group_order = (std::uint64_t{1} << poly.degree) - 1;
    if (gf2_pow_x(group_order, poly.coefficient_mask, poly.degree) != 1) return false;
    for (std::uint64_t q : prime_factors(group_order))
        if (gf2_pow_x(group_order / q, poly.coefficient_mask, poly.degree) == 1) return false;
    return true;
}

binary_sequence mseq(const primitive_polynomial& poly, std::uint32_t initial_state) {
    const std::uint32_t state_mask = (std::uint32_t{1} << poly.degree) - 1;
    if (initial_state == 0) throw std::invalid_argument("LFSR initial state must be nonzero");
    if (initial_state > state_mask)
        throw std::invalid_argument("LFSR initial state wider than the register");

    // Fibonacci form: feedback is the parity of the tapped state bits.
    const std::uint32_t taps = poly.coefficient_mask & state_mask;
    const std::size_t n = state_mask;  // period 2^d - 1
    std::vector<spin> out(n);
    std::uint32_t reg = initial_state;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (reg & 1) ? spin{1} : spin{-1};
        const std::uint32_t feedback = std::popcount(reg & taps) & 1u;
        reg = (reg >> 1) | (feedback << (poly.degree - 1));
    }
    return binary_sequence(std::move(out));
}

std::int64_t periodic_acf(const binary_sequence& seq, std::size_t shift) {
    const std::size_t n = seq.size();
    shift %= n;
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = j + shift < n ? j + shift : j + shift - n;
        acc += static_cast<std::int64_t>(seq[j]) * seq[k];
    }
    return acc;
}

binary_sequence legendre(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("legendre needs an odd prime");
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw std::invalid_argument("legendre needs an odd prime");
    if (p > (std::uint64_t{1} << 27))
        throw std::invalid_argument("length too large for the quadratic-residue sieve");

    std::vector<std::uint8_t> residue(p, 0);
    for (std::uint64_t j = 1; j < p; ++j) residue[(j * j) % p] = 1;

    std::vector<spin> out(p, spin{-1});
    out[0] = 1;  // (0/p) = 0 is not a spin; +1 by convention
    for (std::uint64_t j = 1; j < p; ++j)
        if (residue[j]) out[j] = 1;
    return binary_sequence(std::move(out));
}

binary_sequence rudin_shapiro(unsigned k) {
    if (k < 1) throw std::invalid_argument("rudin_shapiro needs k >= 1");
    if (k > 26) throw std::invalid_argument("rudin_shapiro supports k up to 26");
    const std::size_t n = std::size_t{1} << k;
    std::vector<spin> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned pairs = std::popcount(i & (i >> 1));
        out[i] = (pairs & 1u) ? spin{-1} : spin{1};
    }
    return binary_sequence(std::move(out));
}

binary_sequence rotate(const binary_sequence& seq, std::int64_t shift) {
    const std::size_t n = seq.size();
    const std::size_t s =
        static_cast<std::size_t>(((shift % static_cast<std::int64_t>(n)) + n) % n);
    std::vector<spin> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = seq[(i + s) % n];
    return binary_sequence(std::move(out));
}

namespace {

// PSL of the rotation starting at offset, stopping early at `bound`
std::int32_t rotation_psl_below(const spin* s, std::size_t n, std::size_t offset,
                                std::int32_t bound) {
    std::int32_t peak = 0;
    for (std::size_t u = 1; u < n; ++u) {
        std::int32_t c = 0;
        for (std::size_t j = 0; j + u < n; ++j) {
            const std::size_t a = j + offset < n ? j + offset : j + offset - n;
            std::size_t b = a + u;
            if (b >= n) b -= n;
            c += static_cast<std::int32_t>(s[a]) * s[b];
        }
        const std::int32_t m = c < 0 ? -c : c;
        if (m > peak) {
            peak = m;
            if (peak >= bound) return peak;
        }
    }
    return peak;
}

}  // namespace

rotation_score best_rotation_psl(const binary_sequence& seq) {
    const std::size_t n = seq.size();
    const spin* s = seq.data();
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    // Exact per-worker minima merge to the exact global minimum, so the
    // partition (and thus the worker count) cannot change the answer.
    std::vector<rotation_score> local(workers);
    auto scan_block = [&](unsigned w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        rotation_score best{lo, rotation_psl_below(s, n, lo, INT32_MAX)};
        for (std::size_t shift = lo + 1; shift < hi; ++shift) {
            const std::int32_t p = rotation_psl_below(s, n, shift, best.psl);
            if (p < best.psl) best = {shift, p};
        }
        local[w] = best;
    };

    if (workers == 1) {
        scan_block(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan_block, w);
        for (auto& t : pool) t.join();
    }

    rotation_score best = local[0];
    for (unsigned w = 1; w < workers; ++w) {
        if (local[w].psl < best.psl ||
            (local[w].psl == best.psl && local[w].shift < best.shift))
            best = local[w];
    }
    return best;
}

}  // namespace psl
