#include "psl/oracle.hpp"

#include "psl/rng.hpp"
#include "psl/sequence.hpp"

#include "doctest.h"

using namespace psl;

TEST_CASE("oracle agrees with compute_sidelobes") {
    rng64 gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + gen.below(60);
        const binary_sequence b = binary_sequence::random(n, gen);
        CHECK(oracle_sidelobes(b) == compute_sidelobes(b));
    }
}

TEST_CASE("oracle on Barker-13") {
    const binary_sequence b = parse_sequence_text("+++++--++-+-+");
    const cost_report cost = evaluate(oracle_sidelobes(b));
    CHECK(cost.psl == 1);
    CHECK(cost.fitness == fitness_value{6});
}

TEST_CASE("exhaustive minimum PSL table") {
    // true minima for n = 2..16, frozen from an independent full search
    const std::int32_t expected[] = {1, 1, 1, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2};
    for (std::size_t n = 2; n <= 16; ++n) {
        const exhaustive_result r = exhaustive_min_psl(n);
        CHECK(r.psl == expected[n - 2]);
        CHECK(r.witness.size() == n);
        CHECK(psl_direct(r.witness) == r.psl);
    }
}

TEST_CASE("length 13 optimum is the Barker bound") {
    const exhaustive_result r = exhaustive_min_psl(13);
    CHECK(r.psl == 1);
}

TEST_CASE("exhaustive search rejects out-of-range lengths") {
    CHECK_THROWS_AS(exhaustive_min_psl(1), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_min_psl(25), std::invalid_argument);
}
