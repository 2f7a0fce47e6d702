#pragma once

#include <cstdint>
#include <random>

namespace psl {

// Finalizer of the splitmix64 generator; good avalanche, cheap, and handy
// for deriving decorrelated seeds from structured input.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seed for instance i of a parallel campaign. Pure function of the master
// seed and the instance index; instance 0 is what a plain run() uses.
constexpr std::uint64_t instance_seed(std::uint64_t master_seed, unsigned instance) {
    return splitmix64_mix(master_seed + 0x9E3779B97F4A7C15ull * instance);
}

// mt19937_64 with a bias-free bounded draw. The engine's output stream is
// fixed by the standard, so runs reproduce across platforms.
class rng64 {
public:
    explicit rng64(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform draw from [0, bound); bound must be positive
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift with rejection of the biased low range.
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace psl
