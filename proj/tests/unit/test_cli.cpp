#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "algeff/cli/commands.hpp"
#include "algeff/cli/parser.hpp"
#include "algeff/lang/ast.hpp"
#include "corpus.hpp"

using namespace algeff;
using namespace algeff::cli;
using lang::Comp;
using lang::CompPtr;
using lang::Val;
using lang::ValPtr;

namespace {

const char* const kIncrement = "do x <- get!() in do _ <- put!(x+1) in return x";

// Random ASTs for the round-trip property.
struct AstGen {
    std::mt19937 rng{corpus::kSeed};
    std::size_t pick(std::size_t n) { return corpus::pick(rng, n); }
    std::string name() {
        static const char* const names[] = {"x", "y", "f", "k", "s'", "_"};
        return names[pick(6)];
    }
    std::string var() {
        static const char* const names[] = {"x", "y", "f", "fst"};
        return names[pick(4)];
    }

    ValPtr value(int depth) {
        const std::size_t choice = depth == 0 ? pick(5) : pick(9);
        switch (choice) {
        case 0: return Val::var(var());
        case 1: return Val::boolean(pick(2) == 1);
        case 2: return Val::unit();
        case 3: return Val::integer(static_cast<std::int64_t>(pick(20)));
        case 4: return Val::str(pick(2) ? "a b" : "q\"uote");
        case 5: return Val::pair(value(depth - 1), value(depth - 1));
        case 6: return Val::fun(name(), comp(depth - 1));
        case 7: return Val::add(value(depth - 1), value(depth - 1));
        default: {
            std::vector<lang::OpClause> clauses;
            const std::size_t n = pick(3);
            static const char* const ops[] = {"get", "put", "choose"};
            for (std::size_t i = 0; i < n; ++i) clauses.push_back({ops[i], name(), name(), comp(depth - 1), {}});
            return Val::handler(name(), comp(depth - 1), std::move(clauses));
        }
        }
    }

    CompPtr comp(int depth) {
        const std::size_t choice = depth == 0 ? pick(2) : pick(6);
        switch (choice) {
        case 0: return Comp::ret(value(depth == 0 ? 0 : depth - 1));
        case 1: return Comp::op(pick(2) ? "get" : "put", value(depth == 0 ? 0 : depth - 1));
        case 2: return Comp::bind(name(), comp(depth - 1), comp(depth - 1));
        case 3: return Comp::cond(value(depth - 1), comp(depth - 1), comp(depth - 1));
        case 4: return Comp::app(value(depth - 1), value(depth - 1));
        default: return Comp::handle(value(depth - 1), comp(depth - 1));
        }
    }
};

std::string repl_transcript(const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out;
    repl(in, out, false);
    return out.str();
}

}  // namespace

TEST_CASE("parse_program: reference examples") {
    const CompPtr c = parse_program(kIncrement);
    const CompPtr expected = Comp::bind(
        "x", Comp::op("get", Val::unit()),
        Comp::bind("_", Comp::op("put", Val::add(Val::var("x"), Val::integer(1))), Comp::ret(Val::var("x"))));
    CHECK(lang::same(*c, *expected));

    const CompPtr w = parse_program("with h handle return true");
    CHECK(w->kind == Comp::Kind::Handle);
    CHECK(lang::same(*w, *Comp::handle(Val::var("h"), Comp::ret(Val::boolean(true)))));

    try {
        parse_program("return");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.where() == Location{1, 7});
        CHECK(e.reason() == "expected a value, found end of input");
    }
}

TEST_CASE("parse_program: sequencing and precedence") {
    const CompPtr semi = parse_program("put!(1); put!(2); return ()");
    const CompPtr nested = parse_program("do _ <- put!(1) in do _ <- put!(2) in return ()");
    CHECK(lang::same(*semi, *nested));

    const CompPtr app = parse_program("(fun x -> return x) 3");
    REQUIRE(app->kind == Comp::Kind::App);
    CHECK(app->value->kind == Val::Kind::Fun);

    const CompPtr paren = parse_program("(return 1)");
    CHECK(paren->kind == Comp::Kind::Return);

    const CompPtr sum = parse_program("return x + 1 + 2");
    REQUIRE(sum->value->kind == Val::Kind::Add);
    CHECK(sum->value->left->kind == Val::Kind::Add);

    CHECK(parse_program("# comment\nreturn 1 # trailing").get()->value->number == 1);
    CHECK(parse_program("get!()")->value->kind == Val::Kind::Unit);
}

TEST_CASE("parse_program: syntax errors carry line and column") {
    auto where = [](const std::string& text) {
        try {
            parse_program(text);
        } catch (const SyntaxError& e) {
            return e.where();
        }
        return Location{};
    };
    CHECK(where("do x <- get!() return x") == Location{1, 16});
    CHECK(where("return 1\n  )") == Location{2, 3});
    CHECK(where("return \"open") == Location{1, 8});
    CHECK(where("handler") == Location{1, 8});
    CHECK(where("return $") == Location{1, 8});
}

TEST_CASE("print and parse round-trip on random programs") {
    AstGen gen;
    for (int i = 0; i < 300; ++i) {
        const CompPtr c = gen.comp(4);
        const std::string text = lang::print(*c);
        CAPTURE(text);
        const CompPtr back = parse_program(text);
        CHECK(lang::same(*c, *back));
        CHECK(lang::print(*back) == text);
    }
}

TEST_CASE("universes and elements") {
    CHECK(parse_universe("fin 3 * bool * unit").to_string() == "fin 3 * bool * unit");
    CHECK(parse_universe("(fin 3 * bool) * unit") ==
          Universe::product(Universe::product(Universe::fin(3), Universe::boolean()), Universe::unit()));
    CHECK(parse_universe("enum {a, \"b c\"}") == Universe::enumeration({"a", "b c"}));
    CHECK(parse_universe("seq(enum {a}, 2)").size() == 3);
    CHECK_THROWS_AS(parse_universe("fin"), SyntaxError);

    CHECK(parse_element("5", Universe::fin(10)).modulus() == 10);
    CHECK(parse_element("(1, true)", parse_universe("fin 2 * bool")) ==
          Value::pair(Value::integer(1), Value::boolean(true)));
    CHECK(parse_element("[\"x\"]", Universe::sequences(Universe::enumeration({"x"}), 2)) ==
          Value::list({Value::label("x")}));
    CHECK(parse_element("b", Universe::enumeration({"a", "b"})) == Value::label("b"));
    try {
        parse_element("10", Universe::fin(10));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParameterOutOfUniverse);
    }
    CHECK(parse_elements("a, b", Universe::enumeration({"a", "b"})).size() == 2);
    CHECK(parse_elements("", Universe::unit()).empty());
}

TEST_CASE("theory expressions") {
    CHECK(parse_theory_spec("singlestate(fin 10)")->ops[0].arity == Universe::fin(10));
    CHECK(parse_theory_spec("state(fin 2, bool)")->ops.size() == 2);
    CHECK(parse_theory_spec("io(enum {\"Hello world!\"})")->find("print") != nullptr);
    for (const char* name : {"exception", "choice", "semilattice", "pointedset", "empty", "singleton", "group"}) {
        CAPTURE(name);
        CHECK(parse_theory_spec(name) != nullptr);
    }
    const TheoryPtr both = parse_theory_spec("combine!(singlestate(fin 2), exception)");
    CHECK(both->ops.size() == 3);
    // Four single-state laws plus get and put commuting with abort.
    CHECK(both->eqs.size() == 4 + 2);
    CHECK_THROWS_AS(parse_theory_spec("reader(bool)"), SyntaxError);
    CHECK_THROWS_AS(parse_theory_spec("choice extra"), SyntaxError);
}

TEST_CASE("theory files") {
    const char* const text = R"(
theory counter {
  op get : unit ~> fin 3;
  op put : fin 3 ~> unit;
  equation get-put (unit) : get((); \s. put(s; \u. return ())) = return ();
  equation put-get forall fin 3 (fin 3) : put(p; \u. get((); \s. return s)) = put(p; \u. return p);
  equation put-put forall fin 3 * fin 3 (unit) :
    put(fst p; \u. put(snd p; {return ()})) = put(snd p);
}
)";
    const TheoryPtr t = parse_theory_file(text);
    CHECK(t->name == "counter");
    REQUIRE(t->eqs.size() == 3);
    const Equation& pg = *t->equation("put-get");
    CHECK(pg.parameters().size() == 3);
    const Value two = Universe::fin(3).element(2);
    CHECK(pg.lhs(two).to_string() == "put(2; {get((); {return 0, return 1, return 2})})");
    CHECK(pg.rhs(two).to_string() == "put(2; {return 2})");
    // put(snd p) without a continuation is the generic operation.
    CHECK(t->equation("put-put")->rhs(Value::pair(Value::integer(0, 3), Value::integer(1, 3))).to_string() ==
          "put(1; {return ()})");

    CHECK_THROWS_AS(parse_theory_file("theory t { equation e (unit) : fly(()) = return (); }"), SyntaxError);
    CHECK_THROWS_AS(parse_theory_file("theory t { op a : unit ~> bool; equation e (unit) : a((); {return ()}) = "
                                      "return (); }"),
                    SyntaxError);
}

TEST_CASE("model files") {
    const TheoryPtr sl = semilattice_theory();
    const char* const left = R"(model left : semilattice carrier bool {
  bot () [] -> false;
  vee () [false, false] -> false; vee () [false, true] -> false;
  vee () [true, false] -> true; vee () [true, true] -> true;
})";
    const ModelCheck c = validate_model(parse_model_file(left, sl));
    CHECK(c.to_string() == "Violated commutativity: param = (), valuation = {x = false, y = true}");

    try {
        parse_model_file("model m : choice carrier bool { }", sl);
        FAIL("expected a mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TheoryMismatch);
    }
    try {
        parse_model_file("model m carrier bool { bot () [] -> false; }", sl);
        FAIL("expected a missing entry");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidModel);
    }
    CHECK_THROWS_AS(parse_model_file("model m carrier bool { vee () [true] -> true; }", sl), SyntaxError);
}

TEST_CASE("comodel files") {
    const TheoryPtr st = single_state_theory(Universe::fin(2));
    const char* const text = R"(comodel c : singlestate world fin 2 {
  get () @ 0 -> 0 @ 0; get () @ 1 -> 1 @ 1;
  put 0 @ 0 -> () @ 0; put 0 @ 1 -> () @ 0; put 1 @ 0 -> () @ 1; put 1 @ 1 -> () @ 1;
})";
    const Cointerpretation c = parse_comodel_file(text, st);
    CHECK(validate_comodel(c).valid());
    CHECK(c.world.size() == 2U);

    const char* const broken = R"(comodel c world fin 2 {
  get () @ 0 -> 0 @ 0; get () @ 1 -> 0 @ 1;
  put 0 @ 0 -> () @ 0; put 0 @ 1 -> () @ 0; put 1 @ 0 -> () @ 1; put 1 @ 1 -> () @ 1;
})";
    CHECK(validate_comodel(parse_comodel_file(broken, st)).to_string() ==
          validate_comodel(broken_state_comodel(st)).to_string());
}

TEST_CASE("cmd_run: reference examples") {
    const CommandResult inc = cmd_run(kIncrement, "singlestate(fin 10)", "state", std::string("5"));
    CHECK(inc.out == "5 @ 6\n");
    CHECK(inc.exit_code == kOk);

    const CommandResult abort = cmd_run("do x <- get!() in do _ <- abort!() in return x",
                                        "combine(singlestate(fin 10), exception)", "state", std::string("5"));
    CHECK(abort.out == "unhandled toplevel operation: abort\n");
    CHECK(abort.exit_code == kStuck);

    const CommandResult hello =
        cmd_run("print!(\"Hello world!\")", "io(enum {\"Hello world!\"})", "transcript", std::nullopt);
    CHECK(hello.out == "() @ [\"Hello world!\"]\n");
    CHECK(hello.exit_code == kOk);
}

TEST_CASE("commands: exit codes") {
    CHECK(cmd_run("return", "choice", "state", std::nullopt).exit_code == kBadInput);
    CHECK(cmd_run("return 1", "nonsense", "state", std::nullopt).exit_code == kBadInput);
    CHECK(cmd_run("return 1", "singlestate(fin 2)", "warp", std::nullopt).exit_code == kBadInput);
    CHECK(cmd_run("return 1", "singlestate(fin 2)", "state", std::string("7")).exit_code == kBadInput);
    const CommandResult ill = cmd_run("if 1 then return 1 else return 2", "singlestate(fin 2)", "state", std::nullopt);
    CHECK(ill.exit_code == kFailed);
    CHECK(ill.err.rfind("error: type error at 1:4", 0) == 0);

    CHECK(cmd_type("print!(\"hi\")", "io(enum {hi})").out == "unit ! {print}\n");
    CHECK(cmd_type("fly!(())", "choice").exit_code == kFailed);

    const CommandResult input =
        cmd_run("do a <- read!() in do b <- read!() in return (a, b)", "io(enum {hi, bye})", "input(bye, hi)",
                std::nullopt);
    CHECK(input.out == "(\"bye\", \"hi\") @ 2\n");
}

TEST_CASE("cmd_normalize and cmd_check") {
    const CommandResult n =
        cmd_normalize("do x <- get!() in do y <- get!() in return (x, y)", "singlestate(fin 2)");
    CHECK(n.out == "get((); {put(0; {return (0, 0)}), put(1; {return (1, 1)})})\n");
    CHECK(n.err.empty());

    const CommandResult raw = cmd_normalize("lookup!(1)", "state(fin 2, bool)");
    CHECK(raw.out == "lookup(1; {return false, return true})\n");
    CHECK_FALSE(raw.err.empty());

    const CommandResult h =
        cmd_check(CheckKind::Handler, "handler { return x -> return x | abort(_; k) -> return false }", "exception");
    CHECK(h.out == "Respected (bounded)\n");
    CHECK(h.exit_code == kOk);
    CHECK(cmd_check(CheckKind::Model, "model m carrier unit { bot () [] -> (); vee () [(), ()] -> (); }", "semilattice")
              .out == "Valid\n");
    CHECK(cmd_check(CheckKind::Comodel, "comodel c world unit { }", "choice").exit_code == kBadInput);
}

TEST_CASE("budget from the environment") {
    ::unsetenv("ALGEFF_BUDGET");
    CHECK(budget_from_env() == kDefaultBudget);
    ::setenv("ALGEFF_BUDGET", "25", 1);
    CHECK(budget_from_env() == 25);
    ::setenv("ALGEFF_BUDGET", "many", 1);
    CHECK(budget_from_env() == kDefaultBudget);
    ::unsetenv("ALGEFF_BUDGET");
}

TEST_CASE("repl: reference examples") {
    CHECK(repl_transcript(":theory io(enum {\"hi\"})\n:type print!(\"hi\")\n") ==
          "theory io: print read\nunit ! {print}\n");
    CHECK(repl_transcript(":normalize do x <- get!() in do y <- get!() in return (x,y)\n") ==
          "get((); {put(0; {return (0, 0)}), put(1; {return (1, 1)})})\n");
    CHECK(repl_transcript(":q\nreturn 1\n").empty());
}

TEST_CASE("repl: definitions, runs and recoverable errors") {
    const std::string out = repl_transcript(
        "let inc = fun x -> return x + 1\n"
        ":run state 0 do x <- get!() in do y <- inc x in put!(y); return x\n"
        "return (\n"
        ":nope\n"
        "fly!(())\n"
        ":theory choice\n"
        "do b <- choose!() in not b\n");
    CHECK(out ==
          "inc : int -> int ! {}\n"
          "0 @ 1\n"
          "error: syntax error at 1:9: expected a value, found end of input\n"
          "error: unknown command :nope\n"
          "error: type error at 1:1: unknown operation fly\n"
          "theory choice: choose\n"
          "choose((); {return false, return true})\n");
}
