#include "psl/baselines.hpp"
#include "psl/optimizer.hpp"
#include "psl/oracle.hpp"
#include "psl/report_io.hpp"
#include "psl/sequence.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>

namespace {

// invalid flag combinations and values; mapped to exit code 2
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + output_path + " for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write to " + output_path + " failed");
}

// --seed wins; PSLOPT_SEED is the fallback; otherwise the system entropy
std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given) return seed_flag;
    if (const char* env = std::getenv("PSLOPT_SEED")) {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0')
            throw usage_error(std::string("PSLOPT_SEED is not a valid seed: ") + env);
        return v;
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

unsigned mseq_degree_for_length(std::size_t length) {
    for (unsigned d = 2; d <= 17; ++d)
        if (length == (std::size_t{1} << d) - 1) return d;
    return 0;
}

unsigned exact_log2(std::size_t length) {
    for (unsigned k = 1; k <= 26; ++k)
        if (length == std::size_t{1} << k) return k;
    return 0;
}

psl::binary_sequence make_family(const std::string& family, std::size_t length,
                                 std::uint64_t seed) {
    if (family == "random") {
        psl::rng64 gen(seed);
        return psl::binary_sequence::random(length, gen);
    }
    if (family == "mseq") {
        const unsigned d = mseq_degree_for_length(length);
        if (d == 0)
            throw usage_error("mseq needs a length of the form 2^d - 1 with d in [2, 17]");
        return psl::mseq(psl::builtin_polynomial(d));
    }
    if (family == "legendre") {
        try {
            return psl::legendre(length);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    if (family == "rudin-shapiro") {
        const unsigned k = exact_log2(length);
        if (k == 0) throw usage_error("rudin-shapiro needs a length of the form 2^k");
        return psl::rudin_shapiro(k);
    }
    throw usage_error("unknown family: " + family);
}

struct optimize_options {
    std::size_t length = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double budget = 60.0;
    std::int32_t target_psl = 0;
    bool target_given = false;
    unsigned instances = 0;
    std::string init = "random";
    int kick_max = 4;
    std::string kick_policy = "reset";
    std::uint64_t max_rounds = 0;
    bool max_rounds_given = false;
    std::string output;
    std::string format = "json";
    std::string trace_path;
    std::string best_out;
    bool quiet = false;
};

int cmd_optimize(const optimize_options& opt) {
    if (opt.format != "json" && opt.format != "csv" && opt.format != "text")
        throw usage_error("--format must be json, csv, or text");
    psl::run_config config;
    config.seed = resolve_seed(opt.seed_given, opt.seed);
    config.budget_seconds = opt.budget;
    config.kick_max = opt.kick_max;
    if (opt.kick_policy == "reset")
        config.kick_policy = psl::kick_cost_policy::reset_after_kick;
    else if (opt.kick_policy == "keep")
        config.kick_policy = psl::kick_cost_policy::keep_previous_best;
    else
        throw usage_error("--kick-policy must be reset or keep");
    if (opt.target_given) config.target_psl = opt.target_psl;
    if (opt.max_rounds_given) config.max_rounds = opt.max_rounds;

    if (opt.init.rfind("file:", 0) == 0) {
        psl::binary_sequence initial = psl::read_sequence_file(opt.init.substr(5));
        if (opt.length != 0 && opt.length != initial.size())
            throw usage_error("--length does not match the initial sequence file");
        config.length = initial.size();
        config.initial = std::move(initial);
    } else {
        if (opt.length == 0) throw usage_error("--length is required");
        config.length = opt.length;
        if (opt.init != "random") {
            try {
                config.initial = make_family(opt.init, opt.length, 0);
            } catch (const usage_error&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
        }
    }
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }

    psl::progress_callback progress;
    if (!opt.quiet) {
        progress = [](double elapsed, std::int32_t best) {
            if (best == INT32_MAX)
                std::fprintf(stderr, "elapsed %.1fs, starting\n", elapsed);
            else
                std::fprintf(stderr, "elapsed %.1fs, best psl %d\n", elapsed, best);
        };
    }

    const psl::run_report report = psl::run_parallel(config, opt.instances, progress);

    if (!opt.trace_path.empty())
        emit(psl::trace_to_csv(report.improvement_trace), opt.trace_path);
    if (!opt.best_out.empty())
        psl::write_sequence_file(psl::parse_sequence_text(report.best_sequence), opt.best_out);

    if (opt.format == "json") {
        emit(psl::report_to_json(report), opt.output);
    } else if (opt.format == "csv") {
        emit(psl::trace_to_csv(report.improvement_trace), opt.output);
    } else if (opt.format == "text") {
        std::string text;
        text += "n: " + std::to_string(report.n) + "\n";
        text += "seed: " + std::to_string(report.seed) + "\n";
        text += "best_psl: " + std::to_string(report.best_psl) + "\n";
        text += "best_fitness: " + psl::fitness_to_string(report.best_fitness) + "\n";
        text += "best_sequence: " + report.best_sequence + "\n";
        text += "iterations: " + std::to_string(report.iterations) + "\n";
        text += "flips: " + std::to_string(report.flips) + "\n";
        text += "kicks: " + std::to_string(report.kicks) + "\n";
        char buf[48];
        std::snprintf(buf, sizeof buf, "elapsed_seconds: %.3f\n", report.elapsed_seconds);
        text += buf;
        emit(text, opt.output);
    } else {
        throw usage_error("--format must be json, csv, or text");
    }
    return exit_ok;
}

struct analyze_options {
    std::string input;
    bool sidelobes = false;
    bool best_rotation = false;
    std::string format = "text";
    std::string output;
};

int cmd_analyze(const analyze_options& opt) {
    if (opt.format != "json" && opt.format != "csv" && opt.format != "text")
        throw usage_error("--format must be json, csv, or text");
    const psl::binary_sequence seq = psl::read_sequence_file(opt.input);
    const psl::sidelobe_array lobes = psl::compute_sidelobes(seq);
    const psl::cost_report cost = psl::evaluate(lobes);
    psl::rotation_score rotation{};
    if (opt.best_rotation) rotation = psl::best_rotation_psl(seq);

    const std::size_t n = seq.size();
    if (opt.format == "text") {
        std::string text;
        text += "n: " + std::to_string(n) + "\n";
        text += "psl: " + std::to_string(cost.psl) + "\n";
        text += "fitness: " + psl::fitness_to_string(cost.fitness) + "\n";
        if (opt.best_rotation) {
            text += "best_rotation_shift: " + std::to_string(rotation.shift) + "\n";
            text += "best_rotation_psl: " + std::to_string(rotation.psl) + "\n";
        }
        if (opt.sidelobes) {
            text += "sidelobes:\n";
            // listed by shift; entry n-1-u of the array has shift u
            for (std::size_t u = 1; u < n; ++u)
                text += "  " + std::to_string(u) + " " + std::to_string(lobes[n - 1 - u]) + "\n";
        }
        emit(text, opt.output);
    } else if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = "pslopt-analyze-v1";
        j["n"] = n;
        j["psl"] = cost.psl;
        j["fitness"] = psl::fitness_to_string(cost.fitness);
        if (opt.best_rotation)
            j["best_rotation"] = {{"shift", rotation.shift}, {"psl", rotation.psl}};
        if (opt.sidelobes) {
            auto arr = nlohmann::ordered_json::array();
            for (std::size_t u = 1; u < n; ++u) arr.push_back(lobes[n - 1 - u]);
            j["sidelobes"] = std::move(arr);  // index 0 holds shift 1
        }
        emit(j.dump(2), opt.output);
    } else if (opt.format == "csv") {
        std::string text = "# schema: pslopt-analyze-v1\nshift,value\n";
        for (std::size_t u = 1; u < n; ++u)
            text += std::to_string(u) + "," + std::to_string(lobes[n - 1 - u]) + "\n";
        emit(text, opt.output);
    } else {
        throw usage_error("--format must be json, csv, or text");
    }
    return exit_ok;
}

struct generate_options {
    std::string family;
    std::size_t length = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string poly_hex;
    std::uint32_t lfsr_init = 1;
    std::int64_t rotation = 0;
    std::string output;
};

int cmd_generate(const generate_options& opt) {
    psl::binary_sequence seq = [&] {
        if (opt.family == "mseq" && !opt.poly_hex.empty()) {
            char* end = nullptr;
            errno = 0;
            const unsigned long long mask = std::strtoull(opt.poly_hex.c_str(), &end, 16);
            if (errno != 0 || end == opt.poly_hex.c_str() || *end != '\0' ||
                mask > 0xFFFFFFFFull)
                throw usage_error("--poly must be a hexadecimal coefficient mask");
            const unsigned degree = mask < 4 ? 0 : 31 - __builtin_clz(static_cast<std::uint32_t>(mask));
            psl::primitive_polynomial poly = [&] {
                try {
                    return psl::primitive_polynomial(degree,
                                                     static_cast<std::uint32_t>(mask));
                } catch (const std::invalid_argument& e) {
                    throw usage_error(e.what());
                }
            }();
            if (!psl::is_primitive(poly))
                throw usage_error("--poly is not a primitive polynomial");
            if (opt.length != 0 && opt.length != (std::size_t{1} << degree) - 1)
                throw usage_error("--length does not match the polynomial degree");
            try {
                return psl::mseq(poly, opt.lfsr_init);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
        }
        if (opt.length == 0) throw usage_error("--length is required");
        if (opt.family == "mseq" && opt.lfsr_init != 1) {
            const unsigned d = mseq_degree_for_length(opt.length);
            if (d == 0)
                throw usage_error("mseq needs a length of the form 2^d - 1 with d in [2, 17]");
            try {
                return psl::mseq(psl::builtin_polynomial(d), opt.lfsr_init);
            } catch (const std::invalid_argument& e) {
                throw usage_error(e.what());
            }
        }
        return make_family(opt.family, opt.length, resolve_seed(opt.seed_given, opt.seed));
    }();
    if (opt.rotation != 0) seq = psl::rotate(seq, opt.rotation);
    emit(psl::sequence_to_text(seq), opt.output);
    return exit_ok;
}

struct bench_options {
    std::vector<std::size_t> lengths;
    std::string squares;  // "LO:HI" grid of x^2 lengths
    double budget = 60.0;
    unsigned instances = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::int32_t target_psl = 0;
    bool target_given = false;
    int kick_max = 4;
    bool mseq_rotations = false;
    std::string format = "csv";
    std::string output;
    bool quiet = false;
};

int cmd_bench(const bench_options& opt) {
    if (opt.format != "json" && opt.format != "csv" && opt.format != "text")
        throw usage_error("--format must be json, csv, or text");
    std::vector<std::size_t> lengths = opt.lengths;
    if (!opt.squares.empty()) {
        const std::size_t colon = opt.squares.find(':');
        if (colon == std::string::npos)
            throw usage_error("--squares expects LO:HI");
        std::size_t lo = 0;
        std::size_t hi = 0;
        try {
            lo = std::stoull(opt.squares.substr(0, colon));
            hi = std::stoull(opt.squares.substr(colon + 1));
        } catch (const std::exception&) {
            throw usage_error("--squares expects LO:HI");
        }
        if (lo < 2 || hi < lo) throw usage_error("--squares expects 2 <= LO <= HI");
        for (std::size_t x = lo; x <= hi; ++x) lengths.push_back(x * x);
    }
    if (lengths.empty()) throw usage_error("no lengths given; use --lengths or --squares");

    const std::uint64_t master = resolve_seed(opt.seed_given, opt.seed);

    struct bench_row {
        std::size_t length;
        std::int32_t best_psl;
        std::int32_t mseq_psl;  // -1 when not a 2^d - 1 length
        double sqrt_n;
        bool record;
    };
    std::vector<bench_row> rows;

    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const std::size_t n = lengths[i];
        psl::run_config config;
        config.length = n;
        config.seed = master + i;  // one derived campaign per row
        config.budget_seconds = opt.budget;
        config.kick_max = opt.kick_max;
        if (opt.target_given) config.target_psl = opt.target_psl;
        try {
            config.validate();
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }

        psl::progress_callback progress;
        if (!opt.quiet) {
            progress = [n](double elapsed, std::int32_t best) {
                if (best != INT32_MAX)
                    std::fprintf(stderr, "length %zu: elapsed %.1fs, best psl %d\n", n,
                                 elapsed, best);
            };
        }
        const psl::run_report report = psl::run_parallel(config, opt.instances, progress);

        bench_row row{};
        row.length = n;
        row.best_psl = report.best_psl;
        row.mseq_psl = -1;
        if (const unsigned d = mseq_degree_for_length(n)) {
            const psl::binary_sequence m = psl::mseq(psl::builtin_polynomial(d));
            row.mseq_psl = opt.mseq_rotations ? psl::best_rotation_psl(m).psl
                                              : psl::psl_direct(m);
        }
        row.sqrt_n = std::sqrt(static_cast<double>(n));
        row.record = static_cast<std::int64_t>(row.best_psl) * row.best_psl <
                     static_cast<std::int64_t>(n);
        rows.push_back(row);
    }

    if (opt.format == "csv") {
        std::string text = "# schema: pslopt-bench-v1\nlength,best_psl,mseq_psl,sqrt_n,record\n";
        char buf[128];
        for (const bench_row& r : rows) {
            const std::string m = r.mseq_psl < 0 ? "" : std::to_string(r.mseq_psl);
            std::snprintf(buf, sizeof buf, "%zu,%d,%s,%.3f,%d\n", r.length, r.best_psl,
                          m.c_str(), r.sqrt_n, r.record ? 1 : 0);
            text += buf;
        }
        emit(text, opt.output);
    } else if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = "pslopt-bench-v1";
        auto arr = nlohmann::ordered_json::array();
        for (const bench_row& r : rows) {
            nlohmann::ordered_json row;
            row["length"] = r.length;
            row["best_psl"] = r.best_psl;
            if (r.mseq_psl < 0)
                row["mseq_psl"] = nullptr;
            else
                row["mseq_psl"] = r.mseq_psl;
            row["sqrt_n"] = r.sqrt_n;
            row["record"] = r.record;
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        emit(j.dump(2), opt.output);
    } else if (opt.format == "text") {
        std::string text = "length  best_psl  mseq_psl  sqrt_n   record\n";
        char buf[128];
        for (const bench_row& r : rows) {
            const std::string m = r.mseq_psl < 0 ? "-" : std::to_string(r.mseq_psl);
            std::snprintf(buf, sizeof buf, "%-7zu %-9d %-9s %-8.3f %s\n", r.length,
                          r.best_psl, m.c_str(), r.sqrt_n, r.record ? "yes" : "no");
            text += buf;
        }
        emit(text, opt.output);
    } else {
        throw usage_error("--format must be json, csv, or text");
    }
    return exit_ok;
}

struct exhaustive_options {
    std::size_t length = 0;
    std::string format = "text";
    std::string output;
};

int cmd_exhaustive(const exhaustive_options& opt) {
    if (opt.format != "json" && opt.format != "text")
        throw usage_error("--format must be json or text");
    psl::exhaustive_result result = [&] {
        try {
            return psl::exhaustive_min_psl(opt.length);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }();
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = "pslopt-exhaustive-v1";
        j["n"] = opt.length;
        j["min_psl"] = result.psl;
        j["witness"] = psl::sequence_to_text(result.witness);
        emit(j.dump(2), opt.output);
    } else {
        emit("n=" + std::to_string(opt.length) + " min_psl=" + std::to_string(result.psl) +
                 " witness=" + psl::sequence_to_text(result.witness),
             opt.output);
    }
    return exit_ok;
}

struct polysearch_options {
    unsigned degree = 0;
    bool rotations = false;
    std::uint64_t limit = 0;  // 0: no cap on polynomials scored
    std::string output;
};

// scores the m-sequence of every primitive polynomial of one degree;
// exhaustive by construction and very slow at large degrees
int cmd_polysearch(const polysearch_options& opt) {
    if (opt.degree < 2 || opt.degree > 17)
        throw usage_error("--degree must be between 2 and 17");
    std::string text = "# schema: pslopt-polysearch-v1\npoly_hex,psl\n";
    std::uint64_t scored = 0;
    std::uint32_t best_mask = 0;
    std::int32_t best_psl = INT32_MAX;
    const std::uint32_t lo = std::uint32_t{1} << opt.degree;
    for (std::uint32_t mask = lo | 1u; mask < lo * 2; mask += 2) {
        const psl::primitive_polynomial poly(opt.degree, mask);
        if (!psl::is_primitive(poly)) continue;
        const psl::binary_sequence m = psl::mseq(poly);
        const std::int32_t p =
            opt.rotations ? psl::best_rotation_psl(m).psl : psl::psl_direct(m);
        char buf[48];
        std::snprintf(buf, sizeof buf, "%" PRIx32 ",%d\n", mask, p);
        text += buf;
        if (p < best_psl) {
            best_psl = p;
            best_mask = mask;
        }
        if (opt.limit && ++scored >= opt.limit) break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "# best poly_hex=%" PRIx32 " psl=%d\n", best_mask,
                  best_psl);
    text += buf;
    emit(text, opt.output);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary sequences with low peak sidelobe level: optimizer, "
                 "baseline generators, and analysis tools"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pslopt 1.0.0");

    const unsigned default_instances =
        std::min(12u, std::max(1u, std::thread::hardware_concurrency()));

    optimize_options oopt;
    oopt.instances = default_instances;
    CLI::App* optimize = app.add_subcommand("optimize", "Search for a low-PSL sequence");
    optimize->add_option("--length", oopt.length, "Sequence length n");
    auto* oseed = optimize->add_option("--seed", oopt.seed, "Master RNG seed");
    optimize->add_option("--budget", oopt.budget, "Time budget in seconds")
        ->check(CLI::PositiveNumber);
    auto* otarget =
        optimize->add_option("--target-psl", oopt.target_psl, "Stop once best PSL <= target");
    optimize->add_option("--instances", oopt.instances, "Parallel instances")
        ->check(CLI::PositiveNumber);
    optimize->add_option("--init", oopt.init,
                         "Initial sequence: random, mseq, legendre, rudin-shapiro, or file:PATH");
    optimize->add_option("--kick-max", oopt.kick_max, "Kick magnitude bound K")
        ->check(CLI::PositiveNumber);
    optimize->add_option("--kick-policy", oopt.kick_policy,
                         "Cost baseline after a kick: reset (default) or keep");
    auto* orounds = optimize->add_option("--max-rounds", oopt.max_rounds,
                                         "Deterministic stop after this many scans");
    optimize->add_option("--output", oopt.output, "Write the report here instead of stdout");
    optimize->add_option("--format", oopt.format, "Report format: json, csv, or text");
    optimize->add_option("--trace", oopt.trace_path, "Write the improvement trace CSV here");
    optimize->add_option("--best-out", oopt.best_out, "Write the best sequence text file here");
    optimize->add_flag("--quiet", oopt.quiet, "No progress output on stderr");

    analyze_options aopt;
    CLI::App* analyze = app.add_subcommand("analyze", "Score a sequence file");
    analyze->add_option("input", aopt.input, "Sequence file")->required();
    analyze->add_flag("--sidelobes", aopt.sidelobes, "List every sidelobe value");
    analyze->add_flag("--best-rotation", aopt.best_rotation,
                      "Also find the best cyclic rotation (O(n^3), slow at large n)");
    analyze->add_option("--format", aopt.format, "Output format: json, csv, or text");
    analyze->add_option("--output", aopt.output, "Write here instead of stdout");

    generate_options gopt;
    CLI::App* generate = app.add_subcommand("generate", "Emit a baseline sequence");
    generate->add_option("--family", gopt.family,
                         "random, mseq, legendre, or rudin-shapiro")
        ->required();
    generate->add_option("--length", gopt.length, "Sequence length n");
    auto* gseed = generate->add_option("--seed", gopt.seed, "RNG seed (family random)");
    generate->add_option("--poly", gopt.poly_hex,
                         "Hex coefficient mask of a primitive polynomial (family mseq)");
    generate->add_option("--lfsr-init", gopt.lfsr_init, "LFSR initial state (family mseq)");
    generate->add_option("--rotation", gopt.rotation, "Cyclic shift applied to the output");
    generate->add_option("--output", gopt.output, "Write here instead of stdout");

    bench_options bopt;
    bopt.instances = default_instances;
    CLI::App* bench = app.add_subcommand("bench", "Optimizer vs. baselines over many lengths");
    bench->add_option("--lengths", bopt.lengths, "Comma-separated lengths")->delimiter(',');
    bench->add_option("--squares", bopt.squares, "Grid of squares: LO:HI gives x^2 for x in [LO,HI]");
    bench->add_option("--budget", bopt.budget, "Budget per length in seconds")
        ->check(CLI::PositiveNumber);
    bench->add_option("--instances", bopt.instances, "Parallel instances per length")
        ->check(CLI::PositiveNumber);
    auto* bseed = bench->add_option("--seed", bopt.seed, "Master RNG seed");
    auto* btarget = bench->add_option("--target-psl", bopt.target_psl,
                                      "Stop a length early once best PSL <= target");
    bench->add_option("--kick-max", bopt.kick_max, "Kick magnitude bound K")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--mseq-rotations", bopt.mseq_rotations,
                    "Score m-sequences over all rotations (O(n^3), slow at large n)");
    bench->add_option("--format", bopt.format, "Output format: csv, json, or text");
    bench->add_option("--output", bopt.output, "Write here instead of stdout");
    bench->add_flag("--quiet", bopt.quiet, "No progress output on stderr");

    exhaustive_options eopt;
    CLI::App* exhaustive =
        app.add_subcommand("exhaustive", "Exact minimum PSL by brute force (n <= 24)");
    exhaustive->group("");  // developer tool, hidden from help
    exhaustive->add_option("--length", eopt.length, "Sequence length n")->required();
    exhaustive->add_option("--format", eopt.format, "Output format: json or text");
    exhaustive->add_option("--output", eopt.output, "Write here instead of stdout");

    polysearch_options popt;
    CLI::App* polysearch = app.add_subcommand(
        "polysearch", "Score the m-sequence of every primitive polynomial of a degree");
    polysearch->group("");  // developer tool, hidden from help
    polysearch->add_option("--degree", popt.degree, "Polynomial degree")->required();
    polysearch->add_flag("--rotations", popt.rotations, "Score over all rotations (slow)");
    polysearch->add_option("--limit", popt.limit, "Stop after this many polynomials");
    polysearch->add_option("--output", popt.output, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        oopt.seed_given = oseed->count() > 0;
        oopt.target_given = otarget->count() > 0;
        oopt.max_rounds_given = orounds->count() > 0;
        gopt.seed_given = gseed->count() > 0;
        bopt.seed_given = bseed->count() > 0;
        bopt.target_given = btarget->count() > 0;

        if (*optimize) return cmd_optimize(oopt);
        if (*analyze) return cmd_analyze(aopt);
        if (*generate) return cmd_generate(gopt);
        if (*bench) return cmd_bench(bopt);
        if (*exhaustive) return cmd_exhaustive(eopt);
        if (*polysearch) return cmd_polysearch(popt);
        return exit_usage;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}
