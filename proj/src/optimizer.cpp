#include "psl/optimizer.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <thread>

namespace psl {

using clock = std::chrono::steady_clock;

namespace {

double seconds_since(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

void atomic_min(std::atomic<std::int32_t>& target, std::int32_t value) {
    std::int32_t seen = target.load(std::memory_order_relaxed);
    while (value < seen &&
           !target.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
    }
}

}  // namespace

void run_config::validate() const {
    if (length < 2) throw std::invalid_argument("sequence length must be at least 2");
    if (!(budget_seconds > 0)) throw std::invalid_argument("time budget must be positive");
    if (kick_max < 1) throw std::invalid_argument("kick bound must be at least 1");
    if (initial && initial->size() != length)
        throw std::invalid_argument("initial sequence length does not match the configured length");
}

std::vector<std::size_t> draw_kick_positions(rng64& gen, std::size_t n, int kick_max) {
    if (n < 2) throw std::invalid_argument("sequence length must be at least 2");
    if (kick_max < 1) throw std::invalid_argument("kick bound must be at least 1");
    std::size_t x = static_cast<std::size_t>(1 + gen.below(static_cast<std::uint64_t>(kick_max)));
    if (x > n) x = n;
    // Floyd's sampling: x distinct positions in [0, n) from x draws
    std::vector<std::size_t> chosen;
    chosen.reserve(x);
    for (std::size_t j = n - x; j < n; ++j) {
        const auto t = static_cast<std::size_t>(gen.below(j + 1));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
            chosen.push_back(t);
        else
            chosen.push_back(j);
    }
    return chosen;
}

optimizer_state::optimizer_state(binary_sequence start, rng64 gen, int kick_max,
                                 kick_cost_policy policy, clock::time_point started_at)
    : seq_(std::move(start)),
      lobes_(compute_sidelobes(seq_)),
      gen_(std::move(gen)),
      kick_max_(kick_max),
      policy_(policy),
      start_(started_at),
      best_seq_(seq_) {
    if (kick_max_ < 1) throw std::invalid_argument("kick bound must be at least 1");
    const cost_report initial = evaluate(lobes_);
    cost_ = initial.fitness;
    best_fitness_ = initial.fitness;
    best_psl_ = initial.psl;
    trace_.push_back({seconds_since(start_), initial.psl});
}

void optimizer_state::set_shared_best(std::atomic<std::int32_t>* shared) {
    shared_best_ = shared;
    if (shared_best_) atomic_min(*shared_best_, best_psl_);
}

void optimizer_state::record_psl(std::int32_t new_psl) {
    best_psl_ = new_psl;
    best_seq_ = seq_;
    trace_.push_back({seconds_since(start_), new_psl});
    if (shared_best_) atomic_min(*shared_best_, new_psl);
}

scan_outcome optimizer_state::scan_step(const scan_limits& limits) {
    if (limits.target_psl && best_psl_ <= *limits.target_psl)
        return scan_outcome::target_reached;
    ++rounds_;
    const std::size_t n = seq_.size();
    const auto r = static_cast<std::size_t>(gen_.below(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pos = r + i;
        if (pos >= n) pos -= n;
        flip_update(pos, seq_, lobes_);
        const cost_report probed = evaluate(lobes_);
        ++probes_;
        // beacon: the record is taken on every probe, accepted or not
        if (probed.psl < best_psl_) record_psl(probed.psl);
        if (probed.fitness < cost_) {
            cost_ = probed.fitness;
            if (probed.fitness < best_fitness_) best_fitness_ = probed.fitness;
            return scan_outcome::improved;
        }
        flip_update(pos, seq_, lobes_);  // revert; the snapshot keeps any record
        if (limits.target_psl && best_psl_ <= *limits.target_psl)
            return scan_outcome::target_reached;
        if ((probes_ & 31u) == 0) {
            if (limits.deadline && clock::now() >= *limits.deadline)
                return scan_outcome::deadline_expired;
            if (shared_best_ && limits.target_psl &&
                shared_best_->load(std::memory_order_relaxed) <= *limits.target_psl)
                return scan_outcome::target_reached;
        }
    }
    return scan_outcome::local_optimum;
}

void optimizer_state::kick() {
    const std::vector<std::size_t> positions =
        draw_kick_positions(gen_, seq_.size(), kick_max_);
    flip_many(positions, seq_, lobes_);
    ++kicks_;
    const cost_report kicked = evaluate(lobes_);
    if (kicked.psl < best_psl_) record_psl(kicked.psl);
    if (kicked.fitness < best_fitness_) best_fitness_ = kicked.fitness;
    if (policy_ == kick_cost_policy::reset_after_kick) cost_ = kicked.fitness;
}

run_report run(const run_config& config) { return run_instance(config, 0, nullptr); }

run_report run_instance(const run_config& config, unsigned instance,
                        std::atomic<std::int32_t>* shared_best) {
    config.validate();
    const auto t0 = clock::now();
    const auto deadline =
        t0 + std::chrono::duration_cast<clock::duration>(
                 std::chrono::duration<double>(config.budget_seconds));

    rng64 gen(instance_seed(config.seed, instance));
    binary_sequence start =
        config.initial ? *config.initial : binary_sequence::random(config.length, gen);
    optimizer_state state(std::move(start), std::move(gen), config.kick_max,
                          config.kick_policy, t0);
    state.set_shared_best(shared_best);
    const scan_limits limits{deadline, config.target_psl};

    const auto should_stop = [&] {
        if (config.target_psl && state.best_psl() <= *config.target_psl) return true;
        if (shared_best && config.target_psl &&
            shared_best->load(std::memory_order_relaxed) <= *config.target_psl)
            return true;
        if (config.max_rounds && state.rounds() >= *config.max_rounds) return true;
        return clock::now() >= deadline;
    };

    while (!should_stop()) {
        const scan_outcome out = state.scan_step(limits);
        if (out == scan_outcome::improved) continue;
        if (out != scan_outcome::local_optimum) break;  // deadline or target
        if (should_stop()) break;
        state.kick();
    }

    run_report report;
    report.n = config.length;
    report.seed = config.seed;
    report.instance_seed = instance_seed(config.seed, instance);
    report.instance = instance;
    report.budget_seconds = config.budget_seconds;
    report.best_psl = state.best_psl();
    report.best_fitness = state.best_fitness();
    report.best_sequence = sequence_to_text(state.best_sequence());
    report.final_fitness = state.current_cost();
    report.iterations = state.rounds();
    report.flips = state.probes();
    report.kicks = state.kicks();
    report.elapsed_seconds = seconds_since(t0);
    report.improvement_trace = state.trace();
    return report;
}

run_report run_parallel(const run_config& config, unsigned instances,
                        const progress_callback& progress) {
    config.validate();
    if (instances < 1) throw std::invalid_argument("instance count must be at least 1");

    std::atomic<std::int32_t> shared{std::numeric_limits<std::int32_t>::max()};
    std::vector<run_report> results(instances);
    std::vector<std::exception_ptr> failures(instances);
    std::atomic<unsigned> finished{0};

    const auto t0 = clock::now();
    std::vector<std::thread> pool;
    pool.reserve(instances);
    for (unsigned k = 0; k < instances; ++k) {
        pool.emplace_back([&, k] {
            try {
                results[k] = run_instance(config, k, &shared);
            } catch (...) {
                failures[k] = std::current_exception();
            }
            finished.fetch_add(1, std::memory_order_release);
        });
    }

    auto last_report = t0;
    while (finished.load(std::memory_order_acquire) < instances) {
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
        const auto now = clock::now();
        if (progress && now - last_report >= std::chrono::seconds(1)) {
            progress(seconds_since(t0), shared.load(std::memory_order_relaxed));
            last_report = now;
        }
    }
    for (auto& t : pool) t.join();
    for (auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    // winner: lowest PSL, then earliest achievement, then lowest instance
    unsigned winner = 0;
    for (unsigned k = 1; k < instances; ++k) {
        const run_report& a = results[k];
        const run_report& b = results[winner];
        const double ta = a.improvement_trace.back().elapsed_seconds;
        const double tb = b.improvement_trace.back().elapsed_seconds;
        if (a.best_psl < b.best_psl ||
            (a.best_psl == b.best_psl && ta < tb))
            winner = k;
    }
    return results[winner];
}

}  // namespace psl
