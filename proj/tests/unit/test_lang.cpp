#include <doctest.h>

#include <random>

#include "algeff/cli/parser.hpp"
#include "algeff/free.hpp"
#include "algeff/lang/eval.hpp"
#include "algeff/lang/types.hpp"
#include "corpus.hpp"

using namespace algeff;
using namespace algeff::lang;
using cli::parse_program;
using cli::parse_value;

namespace {

std::string type_of(const std::string& program, const TheoryPtr& theory) {
    return typecheck(*parse_program(program), *theory).to_string();
}

Tree run(const std::string& program, const TheoryPtr& theory) {
    return eval_pure(*parse_program(program), theory).tree;
}

Value closed(const std::string& value, const TheoryPtr& theory) {
    return eval_value(*parse_value(value), initial_env(), theory);
}

const char* const kExceptionHandler = "handler { return x -> return x | abort(_; k) -> return false }";
const char* const kBothHandler =
    "handler { return x -> return x | choose(_; k) -> do a <- k true in do b <- k false in return (a, b) }";
const char* const kStateHandler =
    "handler { return x -> return (fun s -> return (x, s))"
    " | get(_; k) -> return (fun s -> do f <- k s in f s)"
    " | put(s'; k) -> return (fun _ -> do f <- k () in f s') }";
const char* const kDroppingStateHandler =
    "handler { return x -> return (fun s -> return (x, s))"
    " | get(_; k) -> return (fun s -> do f <- k s in f s)"
    " | put(s'; k) -> return (fun s -> do f <- k () in f s) }";

// k in the defining equations, built from the public surface only.
class TreeContinuation : public Callable {
public:
    TreeContinuation(Value h, Tree node) : h_(std::move(h)), node_(std::move(node)) {}
    std::string describe() const override { return "<k>"; }
    Tree apply(const Value& a) const override { return handle(h_, node_.child(a)); }

private:
    Value h_;
    Tree node_;
};

}  // namespace

TEST_CASE("typing: reference examples") {
    CHECK(type_of("return true", choice_theory()) == "bool ! {}");
    const TheoryPtr io = io_theory(Universe::enumeration({"hi"}));
    CHECK(type_of("print!(\"hi\")", io) == "unit ! {print}");

    TypecheckOptions pure;
    pure.allowed_dirt = std::set<std::string>{};
    CHECK_THROWS_AS(typecheck(*parse_program("print!(\"hi\")"), *io, {}, pure), TypeError);

    const ValueType h = typecheck(*parse_value(kExceptionHandler), *exception_theory());
    CHECK(h.to_string() == "bool ! {abort} => bool ! {}");
}

TEST_CASE("typing: errors carry their location") {
    const TheoryPtr st = single_state_theory(Universe::fin(2));
    try {
        typecheck(*parse_program("do x <- get!() in fly!(x)"), *st);
        FAIL("expected a type error");
    } catch (const TypeError& e) {
        CHECK(e.reason() == TypeError::Reason::UnknownOperation);
        CHECK(e.where() == Location{1, 19});
    }
    try {
        typecheck(*parse_program("return y"), *st);
        FAIL("expected a type error");
    } catch (const TypeError& e) {
        CHECK(e.reason() == TypeError::Reason::UnboundVariable);
        CHECK(e.where() == Location{1, 8});
    }
    try {
        typecheck(*parse_program("if true then return true else return ()"), *st);
        FAIL("expected a type error");
    } catch (const TypeError& e) {
        CHECK(e.reason() == TypeError::Reason::Mismatch);
    }
}

TEST_CASE("typing: dirt of handled computations") {
    const TheoryPtr ex = exception_theory();
    CHECK(type_of(std::string("with ") + kExceptionHandler + " handle (do _ <- abort!() in return true)", ex) ==
          "bool ! {}");
    CHECK_THROWS_AS(type_of(std::string("with ") + kBothHandler + " handle (do b <- choose!() in return b)",
                            choice_theory()),
                    TypeError);
    const TheoryPtr st = single_state_theory(Universe::fin(10));
    CHECK(type_of("do x <- get!() in do _ <- put!(x + 1) in return x", st) == "fin 10 ! {get, put}");
}

TEST_CASE("eval_pure: reference examples") {
    const TheoryPtr st = single_state_theory(Universe::fin(10));
    CHECK(run("do x <- return true in return x", st) == Tree::leaf(Value::boolean(true)));

    // l++ : get(s. put(s + 1; return s)).
    const OpDecl& get = st->ops[0];
    const OpDecl& put = st->ops[1];
    const Tree expected = call(get, Value::unit(), [&](const Value& s) {
        return call(put, Value::integer((s.as_int() + 1) % 10, 10), [&](const Value&) { return Tree::leaf(s); });
    });
    CHECK(run("do x <- get!() in do _ <- put!(x + 1) in return x", st) == expected);
    CHECK(run("do x <- get!() in put!(x + 1); return x", st) == expected);

    const TheoryPtr ex = exception_theory();
    CHECK(run("if true then return 1 else abort!()", ex) == Tree::leaf(Value::integer(1)));
}

TEST_CASE("eval_pure is deterministic") {
    const TheoryPtr st = single_state_theory(Universe::fin(3));
    const std::string p = std::string("with ") + kStateHandler + " handle (do x <- get!() in put!(x + 2); return x)";
    const Tree a = run(p, st);
    const Tree b = run(p, st);
    CHECK(a.to_string() == b.to_string());
}

TEST_CASE("handle: reference examples") {
    const TheoryPtr ex = exception_theory();
    const Value h = closed(kExceptionHandler, ex);
    CHECK(handle(h, Tree::leaf(Value::integer(7))) == Tree::leaf(Value::integer(7)));
    CHECK(run(std::string("with ") + kExceptionHandler + " handle (do _ <- abort!() in return true)", ex) ==
          Tree::leaf(Value::boolean(false)));

    const TheoryPtr ch = choice_theory();
    CHECK(run(std::string("with ") + kBothHandler + " handle (do b <- choose!() in return b)", ch) ==
          Tree::leaf(Value::pair(Value::boolean(true), Value::boolean(false))));
}

TEST_CASE("handle: state-passing handler runs a program") {
    const TheoryPtr st = single_state_theory(Universe::fin(10));
    const Tree t = run(std::string("do f <- with ") + kStateHandler +
                           " handle (do x <- get!() in put!(x + 1); return x) in f 5",
                       st);
    CHECK(t == Tree::leaf(Value::pair(Value::integer(5), Value::integer(6))));
}

TEST_CASE("handle: unhandled operations are forwarded") {
    const TheoryPtr t = combine(*exception_theory(), *choice_theory(), false);
    const Tree r = run(std::string("with ") + kExceptionHandler +
                           " handle (do b <- choose!() in if b then abort!() else return true)",
                       t);
    const OpDecl& choose = *t->find("choose");
    // b = false returns true; b = true aborts into false.
    CHECK(r == binary(choose, Value::unit(), Tree::leaf(Value::boolean(true)), Tree::leaf(Value::boolean(false))));
}

TEST_CASE("handler defining equations hold node by node") {
    const TheoryPtr ch = choice_theory();
    const Value h = closed(kBothHandler, ch);
    const auto ast = parse_value(kBothHandler);
    const std::vector<Value> leaves{Value::boolean(false), Value::boolean(true)};
    for (const Tree& t : corpus::trees(*ch, leaves, 3, 40)) {
        if (t.is_leaf()) {
            CHECK(handle(h, t) == eval_comp(*ast->body, extend(initial_env(), ast->name, t.value()), ch));
            continue;
        }
        const OpClause& c = ast->clauses.front();
        EnvPtr env = extend(initial_env(), c.param, t.param());
        env = extend(env, c.kont, Value::opaque(std::make_shared<TreeContinuation>(h, t)));
        CHECK(handle(h, t) == eval_comp(*c.body, env, ch));
    }
}

TEST_CASE("forwarding coherence: a handler without clauses is a lift") {
    const TheoryPtr st = single_state_theory(Universe::fin(2));
    const char* const text = "handler { return x -> do y <- get!() in return (x, y) }";
    const Value h = closed(text, st);
    const auto ast = parse_value(text);
    const std::vector<Value> leaves{Value::integer(0, 2), Value::integer(1, 2)};
    for (const Tree& t : corpus::trees(*st, leaves, 4, 50)) {
        const Tree lifted = lift([&](const Value& x) {
            return eval_comp(*ast->body, extend(initial_env(), ast->name, x), st);
        }, t);
        CHECK(handle(h, t) == lifted);
    }
}

TEST_CASE("subject reduction on evaluated programs") {
    const TheoryPtr st = combine(*single_state_theory(Universe::fin(3)), *exception_theory(), false);
    const std::vector<std::string> programs{
        "return 2",
        "do x <- get!() in return x",
        "do x <- get!() in put!(x + 1); return x",
        "do x <- get!() in do _ <- abort!() in return x",
        "do x <- get!() in if true then return (x, x) else return (x + 1, x)",
        "put!(2); get!()",
        "do f <- return (fun s -> put!(s); return s) in f 1",
    };
    for (const auto& p : programs) {
        CAPTURE(p);
        const CompType ty = typecheck(*parse_program(p), *st);
        const Tree t = run(p, st);
        auto universe = ty.value.universe();
        std::function<void(const Tree&)> walk = [&](const Tree& n) {
            if (n.is_leaf()) {
                if (universe) CHECK(universe->contains(n.value()));
                return;
            }
            CHECK(ty.dirt.count(n.op()) == 1);
            for (const auto& k : n.kont()) walk(k);
        };
        walk(t);
    }
}

TEST_CASE("check_handler_equations: reference examples") {
    const TheoryPtr st = single_state_theory(Universe::fin(2));
    const HandlerCheck good = check_handler_equations(*parse_value(kStateHandler), st);
    CHECK(good.status == HandlerCheck::Status::Respected);
    CHECK(good.uncovered.empty());
    CHECK(good.to_string() == "Respected (bounded)");

    const HandlerCheck bad = check_handler_equations(*parse_value(kDroppingStateHandler), st);
    REQUIRE(bad.status == HandlerCheck::Status::Violated);
    CHECK(*bad.equation == "put-get");

    const TheoryPtr io = io_theory(Universe::enumeration({"a", "b"}));
    const HandlerCheck vacuous = check_handler_equations(*parse_value("handler { return x -> return x }"), io);
    CHECK(vacuous.status == HandlerCheck::Status::Respected);
    CHECK(vacuous.uncovered == std::vector<std::string>{"print", "read"});
}

TEST_CASE("check_handler_equations: a handler that breaks commutativity of choice") {
    const TheoryPtr ch = choice_theory();
    // Picking the left branch respects idempotence and associativity only.
    const HandlerCheck left =
        check_handler_equations(*parse_value("handler { return x -> return x | choose(_; k) -> k true }"), ch);
    REQUIRE(left.status == HandlerCheck::Status::Violated);
    CHECK(*left.equation == "commutativity");
    const HandlerCheck right =
        check_handler_equations(*parse_value("handler { return x -> return x | choose(_; k) -> k false }"), ch);
    CHECK(right.status == HandlerCheck::Status::Violated);
}

TEST_CASE("runtime values") {
    const TheoryPtr st = single_state_theory(Universe::fin(2));
    CHECK(is_handler(closed(kStateHandler, st)));
    CHECK_FALSE(is_handler(closed("fun x -> return x", st)));
    CHECK_THROWS_AS(apply(Value::integer(1), Value::unit()), Error);
    CHECK(apply(closed("fun x -> return x + 1", st), Value::integer(1, 2)) == Tree::leaf(Value::integer(0, 2)));
    CHECK(closed("(1, true)", st) == Value::pair(Value::integer(1), Value::boolean(true)));
}
