#pragma once

#include "psl/flip.hpp"
#include "psl/rng.hpp"
#include "psl/sequence.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace psl {

// What the hill climber compares against right after a kick: the cost of
// the kicked state (default), or the best cost seen before the kick. The
// latter can cascade into repeated kicks and is kept only for study.
enum class kick_cost_policy { reset_after_kick, keep_previous_best };

struct run_config {
    std::size_t length = 0;
    std::uint64_t seed = 0;
    double budget_seconds = 60.0;
    std::optional<std::int32_t> target_psl;  // stop once best_psl <= target
    int kick_max = 4;                        // K; kicks flip 1 + R(K) bits
    kick_cost_policy kick_policy = kick_cost_policy::reset_after_kick;
    std::optional<binary_sequence> initial;  // unset: uniform random spins
    // Optional deterministic stop: cap on neighborhood scans. Wall-clock
    // stops make the counters run-dependent; reproducible experiments and
    // the determinism tests use this instead.
    std::optional<std::uint64_t> max_rounds;

    void validate() const;  // throws std::invalid_argument
};

struct trace_point {
    double elapsed_seconds = 0.0;
    std::int32_t psl = 0;

    bool operator==(const trace_point&) const = default;
};

struct run_report {
    std::size_t n = 0;
    std::uint64_t seed = 0;           // master seed of the campaign
    std::uint64_t instance_seed = 0;  // derived stream this instance used
    unsigned instance = 0;
    double budget_seconds = 0.0;
    std::int32_t best_psl = 0;
    fitness_value best_fitness = 0;  // lowest quartic fitness held by any
                                     // visited (accepted or kicked) state
    std::string best_sequence;       // text form of the best-PSL witness
    fitness_value final_fitness = 0;
    std::uint64_t iterations = 0;  // neighborhood scans started
    std::uint64_t flips = 0;       // neighbors probed (reverts not counted)
    std::uint64_t kicks = 0;
    double elapsed_seconds = 0.0;
    std::vector<trace_point> improvement_trace;  // every new PSL record
};

enum class scan_outcome { improved, local_optimum, deadline_expired, target_reached };

struct scan_limits {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::optional<std::int32_t> target_psl;
};

// Kick magnitude and targets: 1 + R(kick_max) distinct positions (clamped
// to n), sampled with Floyd's method. Exposed so tests can mirror the
// generator stream of a running optimizer.
std::vector<std::size_t> draw_kick_positions(rng64& gen, std::size_t n, int kick_max);

class optimizer_state {
public:
    optimizer_state(binary_sequence start, rng64 gen, int kick_max = 4,
                    kick_cost_policy policy = kick_cost_policy::reset_after_kick,
                    std::chrono::steady_clock::time_point started_at =
                        std::chrono::steady_clock::now());

    // One circular scan: draws r = R(n), probes neighbors (r+i) mod n in
    // order, keeps the first flip with strictly smaller fitness, reverts
    // all others. Returns local_optimum after exactly n failed probes with
    // the state unchanged. The PSL beacon is consulted on every probe,
    // accepted or not.
    scan_outcome scan_step() { return scan_step(scan_limits{}); }
    scan_outcome scan_step(const scan_limits& limits);

    // Random multi-flip perturbation to escape a local optimum.
    void kick();

    const binary_sequence& sequence() const noexcept { return seq_; }
    const sidelobe_array& sidelobes() const noexcept { return lobes_; }
    fitness_value current_cost() const noexcept { return cost_; }
    std::int32_t best_psl() const noexcept { return best_psl_; }
    const binary_sequence& best_sequence() const noexcept { return best_seq_; }
    fitness_value best_fitness() const noexcept { return best_fitness_; }
    std::uint64_t rounds() const noexcept { return rounds_; }
    std::uint64_t probes() const noexcept { return probes_; }
    std::uint64_t kicks() const noexcept { return kicks_; }
    const std::vector<trace_point>& trace() const noexcept { return trace_; }

    // Campaign-wide PSL record. When set, the state publishes its record
    // improvements (atomic minimum) and scan_step stops early with
    // target_reached once the shared record meets the limit's target.
    void set_shared_best(std::atomic<std::int32_t>* shared);

private:
    binary_sequence seq_;
    sidelobe_array lobes_;
    rng64 gen_;
    int kick_max_;
    kick_cost_policy policy_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::int32_t>* shared_best_ = nullptr;
    fitness_value cost_ = 0;
    std::int32_t best_psl_ = 0;
    binary_sequence best_seq_;
    fitness_value best_fitness_ = 0;
    std::vector<trace_point> trace_;
    std::uint64_t rounds_ = 0;
    std::uint64_t probes_ = 0;
    std::uint64_t kicks_ = 0;

    void record_psl(std::int32_t new_psl);
};

// Full campaign on one thread: random (or configured) start, one O(n^2)
// sidelobe computation, then scan/kick until the budget, the target, or
// the round cap is hit.
run_report run(const run_config& config);

// run() with an explicit instance index (seed stream instance_seed(seed, i))
// and an optional cross-instance record for early stopping.
run_report run_instance(const run_config& config, unsigned instance,
                        std::atomic<std::int32_t>* shared_best = nullptr);

using progress_callback = std::function<void(double elapsed_seconds, std::int32_t best_psl)>;

// Independent instances on separate threads; returns the report with the
// lowest best_psl (ties: earliest achievement, then lowest instance index).
// `progress`, when given, is called about once per second.
run_report run_parallel(const run_config& config, unsigned instances,
                        const progress_callback& progress = {});

}  // namespace psl
