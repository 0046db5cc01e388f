#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "algeff/comodel.hpp"
#include "algeff/theory.hpp"

namespace algeff::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    kOk = 0,        // Done, Valid, Respected
    kFailed = 1,    // type error, Violated
    kStuck = 2,     // unhandled top-level operation
    kBadInput = 3,  // parse or reference error
};

struct CommandResult {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// ALGEFF_BUDGET when set to a positive integer, kDefaultBudget otherwise.
std::size_t budget_from_env();

/// A built-in theory expression, or the path of a theory file.
TheoryPtr load_theory(std::string_view spec);

/// `state`, `broken-state`, `transcript`, `transcript(k)`, `input(v, ...)`,
/// `choice-stream`, or the path of a comodel file.
Cointerpretation load_comodel(std::string_view spec, const TheoryPtr& theory);

CommandResult cmd_run(std::string_view program, std::string_view theory, std::string_view comodel,
                      const std::optional<std::string>& world);

enum class CheckKind { Model, Comodel, Handler };
CommandResult cmd_check(CheckKind kind, std::string_view definitions, std::string_view theory);

CommandResult cmd_normalize(std::string_view program, std::string_view theory);
CommandResult cmd_type(std::string_view program, std::string_view theory);

/// Reads lines until `:q` or end of input. Errors are reported per line.
void repl(std::istream& in, std::ostream& out, bool prompt);

}  // namespace algeff::cli
