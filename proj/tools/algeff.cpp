#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "algeff/cli/commands.hpp"

namespace {

using algeff::cli::CommandResult;

std::optional<std::string> read_source(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int finish(const CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algeff: algebraic effects, models, comodels and handlers"};
    app.require_subcommand(1);

    std::string program, theory, comodel, world, kind, file;

    auto* run = app.add_subcommand("run", "Evaluate a program and run it against a comodel");
    run->add_option("program", program, "Program file, or - for standard input")->required();
    run->add_option("--theory", theory, "Built-in theory expression or theory file")->required();
    run->add_option("--comodel", comodel, "Built-in comodel or comodel file")->required();
    auto* world_opt = run->add_option("--world", world, "Initial world (default: the first one)");

    auto* check = app.add_subcommand("check", "Validate a model, comodel or handler");
    check->add_option("kind", kind, "model, comodel or handler")
        ->required()
        ->check(CLI::IsMember({"model", "comodel", "handler"}));
    check->add_option("file", file, "Definition file")->required();
    check->add_option("--theory", theory, "Built-in theory expression or theory file")->required();

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of a program's computation");
    normalize->add_option("program", program, "Program file, or - for standard input")->required();
    normalize->add_option("--theory", theory, "Built-in theory expression or theory file")->required();

    auto* type = app.add_subcommand("type", "Print the type of a program");
    type->add_option("program", program, "Program file, or - for standard input")->required();
    type->add_option("--theory", theory, "Built-in theory expression or theory file")->required();

    app.add_subcommand("repl", "Interactive loop");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Error& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : algeff::cli::kBadInput;
    }

    const std::string& path = app.got_subcommand(check) ? file : program;
    std::optional<std::string> source;
    if (!app.got_subcommand("repl")) {
        source = read_source(path);
        if (!source) {
            std::cerr << "error: cannot read " << path << "\n";
            return algeff::cli::kBadInput;
        }
    }

    if (app.got_subcommand(run)) {
        std::optional<std::string> w;
        if (world_opt->count() > 0) w = world;
        return finish(algeff::cli::cmd_run(*source, theory, comodel, w));
    }
    if (app.got_subcommand(check)) {
        const auto k = kind == "model"     ? algeff::cli::CheckKind::Model
                       : kind == "comodel" ? algeff::cli::CheckKind::Comodel
                                           : algeff::cli::CheckKind::Handler;
        return finish(algeff::cli::cmd_check(k, *source, theory));
    }
    if (app.got_subcommand(normalize)) return finish(algeff::cli::cmd_normalize(*source, theory));
    if (app.got_subcommand(type)) return finish(algeff::cli::cmd_type(*source, theory));
    algeff::cli::repl(std::cin, std::cout, isatty(STDIN_FILENO) != 0);
    return 0;
}
