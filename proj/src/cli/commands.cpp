#include "algeff/cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "algeff/cli/parser.hpp"
#include "algeff/free.hpp"
#include "algeff/lang/eval.hpp"
#include "algeff/lang/types.hpp"
#include "algeff/model.hpp"

namespace algeff::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool is_file(std::string_view path) {
    std::error_code ec;
    return !path.empty() && std::filesystem::is_regular_file(std::filesystem::path(path), ec);
}

std::string read_file(std::string_view path) {
    std::ifstream in{std::string(path)};
    if (!in) throw Error(ErrorKind::SyntaxError, "cannot read " + std::string(path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::TypeError:
    case ErrorKind::RuntimeError: return kFailed;
    default: return kBadInput;
    }
}

/// Runs `body`, turning library errors into an exit code and a message.
template <class F>
CommandResult guarded(F&& body) {
    CommandResult r;
    try {
        body(r);
    } catch (const Error& e) {
        r.exit_code = exit_code_for(e);
        r.err += std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        r.exit_code = kBadInput;
        r.err += std::string("error: ") + e.what() + "\n";
    }
    return r;
}

/// `name` or `name(args)`; args is the text between the outer parentheses.
std::pair<std::string, std::optional<std::string>> split_call(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {spec, std::nullopt};
    if (spec.back() != ')') throw Error(ErrorKind::SyntaxError, "malformed comodel " + spec);
    return {trim(spec.substr(0, open)), spec.substr(open + 1, spec.size() - open - 2)};
}

std::string render(const TheoryPtr& theory, const Tree& t) {
    return (has_normalizer(*theory) ? normalize(*theory, t) : t).to_string();
}

/// First whitespace-delimited chunk of `s` that is balanced in brackets and
/// quotes, and the remainder.
std::pair<std::string, std::string> split_chunk(std::string_view s) {
    std::size_t i = s.find_first_not_of(" \t");
    if (i == std::string_view::npos) return {};
    const std::size_t start = i;
    int depth = 0;
    bool quoted = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (quoted) {
            if (c == '\\') ++i;
            else if (c == '"') quoted = false;
            continue;
        }
        if (c == '"') quoted = true;
        else if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if ((c == ' ' || c == '\t') && depth == 0) break;
    }
    return {std::string(s.substr(start, i - start)), std::string(s.substr(std::min(i, s.size())))};
}

}  // namespace

std::size_t budget_from_env() {
    if (const char* v = std::getenv("ALGEFF_BUDGET")) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    return kDefaultBudget;
}

TheoryPtr load_theory(std::string_view spec) {
    if (is_file(spec)) return parse_theory_file(read_file(spec));
    return parse_theory_spec(spec);
}

Cointerpretation load_comodel(std::string_view spec, const TheoryPtr& theory) {
    if (is_file(spec)) return parse_comodel_file(read_file(spec), theory);
    const auto [name, args] = split_call(trim(spec));
    if (name == "state" && !args) return state_comodel(theory);
    if (name == "broken-state" && !args) return broken_state_comodel(theory);
    if (name == "choice-stream" && !args) return alternating_choice_comodel(theory);
    if (name == "transcript") {
        std::size_t bound = 4;
        if (args) bound = static_cast<std::size_t>(parse_element(*args, Universe::fin(1 << 10)).as_int());
        return transcript_comodel(theory, bound);
    }
    if (name == "input" && args) {
        return input_comodel(theory, parse_elements(*args, theory->require("read").arity));
    }
    throw Error(ErrorKind::SyntaxError, "unknown comodel " + std::string(spec));
}

CommandResult cmd_run(std::string_view program, std::string_view theory, std::string_view comodel,
                      const std::optional<std::string>& world) {
    return guarded([&](CommandResult& r) {
        const auto prog = parse_program(program);
        const TheoryPtr th = load_theory(theory);
        const Cointerpretation co = load_comodel(comodel, th);
        lang::typecheck(*prog, *th);
        const FreeElement m = lang::eval_pure(*prog, th);
        if (!world && co.world.size() == 0) throw Error(ErrorKind::NonEnumerableWorld, "the world is empty");
        const Value w0 = world ? parse_element(*world, co.world) : co.world.element(0);
        const RunOutcome outcome = tensor_run(m, w0, co);
        r.out = outcome.to_string() + "\n";
        r.exit_code = outcome.is_done() ? kOk : kStuck;
    });
}

CommandResult cmd_check(CheckKind kind, std::string_view definitions, std::string_view theory) {
    return guarded([&](CommandResult& r) {
        const TheoryPtr th = load_theory(theory);
        switch (kind) {
        case CheckKind::Model: {
            const ModelCheck c = validate_model(parse_model_file(definitions, th));
            r.out = c.to_string() + "\n";
            r.exit_code = c.valid() ? kOk : kFailed;
            break;
        }
        case CheckKind::Comodel: {
            const ComodelCheck c = validate_comodel(parse_comodel_file(definitions, th));
            r.out = c.to_string() + "\n";
            r.exit_code = c.valid() ? kOk : kFailed;
            break;
        }
        case CheckKind::Handler: {
            const auto h = parse_value(definitions);
            const lang::HandlerCheck c = lang::check_handler_equations(*h, th, budget_from_env());
            r.out = c.to_string() + "\n";
            r.exit_code = c.status == lang::HandlerCheck::Status::Violated ? kFailed : kOk;
            break;
        }
        }
    });
}

CommandResult cmd_normalize(std::string_view program, std::string_view theory) {
    return guarded([&](CommandResult& r) {
        const auto prog = parse_program(program);
        const TheoryPtr th = load_theory(theory);
        lang::typecheck(*prog, *th);
        const FreeElement m = lang::eval_pure(*prog, th);
        if (!has_normalizer(*th)) r.err = "note: " + th->name + " has no normal forms; printing the tree as evaluated\n";
        r.out = render(th, m.tree) + "\n";
    });
}

CommandResult cmd_type(std::string_view program, std::string_view theory) {
    return guarded([&](CommandResult& r) {
        const auto prog = parse_program(program);
        const TheoryPtr th = load_theory(theory);
        r.out = lang::typecheck(*prog, *th).to_string() + "\n";
    });
}

// ---- repl ------------------------------------------------------------------

namespace {

struct Session {
    TheoryPtr theory = single_state_theory(Universe::fin(2));
    lang::EnvPtr env = lang::initial_env();
    lang::TypeContext ctx;

    std::string describe_theory() const {
        std::string out = "theory " + theory->name + ":";
        for (const auto& d : theory->ops) out += " " + d.name;
        return out;
    }

    lang::CompType check(const lang::Comp& c) const { return lang::typecheck(c, *theory, ctx); }
    Tree eval(const lang::Comp& c) const { return lang::eval_comp(c, env, theory); }

    std::string execute(const std::string& line, bool& quit) {
        const auto [head, rest] = split_chunk(line);
        if (head == ":q" || head == ":quit") {
            quit = true;
            return {};
        }
        if (head == ":help") {
            return ":type <comp> | :normalize <comp> | :run <comodel> <world> <comp> | :load <file> | "
                   ":theory <theory> | let <name> = <value> | <comp> | :q";
        }
        if (head == ":type") return check(*parse_program(rest)).to_string();
        if (head == ":normalize") {
            const auto c = parse_program(rest);
            check(*c);
            return render(theory, eval(*c));
        }
        if (head == ":run") {
            const auto [co_spec, after] = split_chunk(rest);
            const auto [world, program] = split_chunk(after);
            const Cointerpretation co = load_comodel(co_spec, theory);
            const auto c = parse_program(program);
            check(*c);
            return tensor_run(FreeElement{theory, eval(*c)}, parse_element(world, co.world), co).to_string();
        }
        if (head == ":load" || head == ":theory") {
            theory = load_theory(trim(rest));
            return describe_theory();
        }
        if (head.size() > 1 && head[0] == ':') throw Error(ErrorKind::SyntaxError, "unknown command " + head);
        if (head == "let") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos) throw Error(ErrorKind::SyntaxError, "expected let <name> = <value>");
            const std::string name = trim(std::string_view(rest).substr(0, eq));
            const auto v = parse_value(std::string_view(rest).substr(eq + 1));
            const lang::ValueType t = lang::typecheck(*v, *theory, ctx);
            env = lang::extend(env, name, lang::eval_value(*v, env, theory));
            ctx[name] = t;
            return name + " : " + t.to_string();
        }
        const auto c = parse_program(line);
        check(*c);
        return render(theory, eval(*c));
    }
};

}  // namespace

void repl(std::istream& in, std::ostream& out, bool prompt) {
    Session session;
    std::string line;
    while (true) {
        if (prompt) out << "algeff> " << std::flush;
        if (!std::getline(in, line)) break;
        if (const std::string t = trim(line); t.empty() || t[0] == '#') continue;
        bool quit = false;
        try {
            const std::string reply = session.execute(line, quit);
            if (!reply.empty()) out << reply << "\n";
        } catch (const std::exception& e) {
            out << "error: " << e.what() << "\n";
        }
        if (quit) break;
    }
}

}  // namespace algeff::cli
