#pragma once

#include "psl/optimizer.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct cli_result {
    int status = -1;
    std::string output;
};

// runs the CLI binary through the shell, capturing stdout (and stderr when
// asked); PSLOPT_BIN is injected by the build
inline cli_result run_cli(const std::string& args, bool capture_stderr = false,
                          const std::string& env_prefix = "") {
    std::string command = env_prefix;
    if (!command.empty()) command += ' ';
    command += PSLOPT_BIN;
    command += ' ';
    command += args;
    command += capture_stderr ? " 2>&1" : " 2>/dev/null";

    cli_result result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.status = WEXITSTATUS(status);
    return result;
}

// report equality with the wall-clock fields ignored
inline bool same_modulo_timing(const psl::run_report& a, const psl::run_report& b) {
    if (a.n != b.n || a.seed != b.seed || a.instance_seed != b.instance_seed ||
        a.instance != b.instance || a.best_psl != b.best_psl ||
        a.best_fitness != b.best_fitness || a.final_fitness != b.final_fitness ||
        a.best_sequence != b.best_sequence || a.iterations != b.iterations ||
        a.flips != b.flips || a.kicks != b.kicks)
        return false;
    if (a.improvement_trace.size() != b.improvement_trace.size()) return false;
    for (std::size_t i = 0; i < a.improvement_trace.size(); ++i)
        if (a.improvement_trace[i].psl != b.improvement_trace[i].psl) return false;
    return true;
}

}  // namespace testsupport
