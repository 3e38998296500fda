#pragma once

#include "dcasm/translate.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dcasm::cli {

enum class Command { translate, solve, oracle, check, emit_asp };

enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_mismatch = 2, exit_guardrail = 3 };

struct RunConfig {
    Command command = Command::solve;
    std::string input;            // empty only with --random
    UnaSelection una;
    std::optional<EmitStyle> style;
    std::size_t models = 0;       // 0 = all
    bool force = false;
    bool program = false;         // input is a ground program, not a theory
    bool herbrand = false;        // program mode: skip the Eq-rewrite
    std::optional<std::size_t> random;
    std::uint64_t seed = 0;
    std::string output;           // empty = standard output
};

/// Parses argv (without the program name). `-una` and `-no-una` are
/// accepted as spelled in the original tool. Throws Error on bad usage.
RunConfig parse_args(std::vector<std::string> args);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with usage errors reported on `err`.
int main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace dcasm::cli
