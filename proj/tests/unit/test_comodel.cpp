#include <doctest.h>

#include "algeff/comodel.hpp"
#include "algeff/errors.hpp"
#include "corpus.hpp"

using namespace algeff;

namespace {

Tree ret(Value v) { return Tree::leaf(std::move(v)); }
Value fin(std::int64_t i, std::int64_t n) { return Value::integer(i, n); }

Tree increment(const Theory& ss, std::int64_t n) {
    return call(ss.ops[0], Value::unit(), [&](const Value& s) {
        return call(ss.ops[1], fin((s.as_int() + 1) % n, n), [&](const Value&) { return ret(s); });
    });
}

}  // namespace

TEST_SUITE("comodel") {

TEST_CASE("leaves finish immediately") {
    auto ss = single_state_theory(Universe::fin(3));
    auto c = state_comodel(ss);
    auto out = cointerpret_tree(fin(2, 3), ret(Value::boolean(true)), c);
    CHECK(out == RunOutcome::done(Value::boolean(true), fin(2, 3)));
    CHECK(out.steps == 0);
}

TEST_CASE("increment runs against the state comodel") {
    auto ss = single_state_theory(Universe::fin(10));
    auto out = cointerpret_tree(fin(5, 10), increment(*ss, 10), state_comodel(ss));
    CHECK(out.to_string() == "5 @ 6");
    CHECK(out.steps == 2);
}

TEST_CASE("abort gets stuck") {
    auto exc = exception_theory();
    auto ss = single_state_theory(Universe::fin(10));
    auto both = combine(*ss, *exc, false);
    auto c = state_comodel(both);
    Tree t = constant(both->require("abort"), Value::unit());
    for (const auto& w : Universe::fin(10).enumerate()) {
        auto out = cointerpret_tree(w, t, c);
        CHECK_FALSE(out.is_done());
        CHECK(out.op == "abort");
        CHECK(out.world == w);
        CHECK(out.to_string() == "unhandled toplevel operation: abort");
    }
}

TEST_CASE("abort has no cooperation on a nonempty world") {
    auto exc = exception_theory();
    try {
        make_cointerpretation(exc, Universe::fin(2),
                              {{"abort", [](const Value&, const Value& w) { return std::pair{Value::unit(), w}; }}});
        FAIL("expected InvalidCooperation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidCooperation);
    }
    CHECK_NOTHROW(make_cointerpretation(
        exc, Universe::empty(), {{"abort", [](const Value&, const Value& w) { return std::pair{Value::unit(), w}; }}}));
}

TEST_CASE("comodel laws") {
    auto ss = single_state_theory(Universe::fin(3));
    CHECK(validate_comodel(state_comodel(ss)).valid());

    auto s2 = single_state_theory(Universe::fin(2));
    auto broken = validate_comodel(broken_state_comodel(s2));
    REQUIRE_FALSE(broken.valid());
    CHECK(*broken.equation == "get-put");
    CHECK(broken.witness->world == fin(1, 2));

    auto ch = choice_theory();
    auto stream = alternating_choice_comodel(ch);
    auto comm = validate_comodel_equation(stream, *ch->equation("commutativity"));
    REQUIRE_FALSE(comm.valid());
    CHECK(comm.witness->world == fin(0, 2));
    CHECK_FALSE(validate_comodel(stream).valid());
}

TEST_CASE("uncovered operations block validation") {
    auto ss = single_state_theory(Universe::fin(2));
    auto partial = make_cointerpretation(
        ss, Universe::fin(2), {{"get", [](const Value&, const Value& w) { return std::pair{w, w}; }}});
    try {
        validate_comodel(partial);
        FAIL("expected UncoveredOperation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UncoveredOperation);
    }
}

TEST_CASE("the tensor of a state tree is its normal form") {
    auto ss = single_state_theory(Universe::fin(3));
    auto c = state_comodel(ss);
    for (const auto& t : corpus::trees(*ss, Universe::fin(2).enumerate(), 5, 100)) {
        auto nf = state_normal_form(*ss, t);
        for (const auto& s : Universe::fin(3).enumerate()) {
            CHECK(tensor_run(FreeElement{ss, t}, s, c) == RunOutcome::done(nf.g.at(s), nf.f.at(s)));
        }
    }
}

TEST_CASE("equal trees give equal runs") {
    auto ss = single_state_theory(Universe::fin(3));
    auto c = state_comodel(ss);
    for (const auto& e : ss->eqs) {
        for (const auto& p : e.parameters()) {
            for (const auto& w : Universe::fin(3).enumerate()) {
                CHECK(cointerpret_tree(w, e.lhs(p), c) == cointerpret_tree(w, e.rhs(p), c));
            }
        }
    }
}

TEST_CASE("transcript and input comodels") {
    auto io = io_theory(Universe::enumeration({"Hello world!", "bye"}));
    auto hello = call(io->require("print"), Value::label("Hello world!"), [](const Value&) { return ret(Value::unit()); });
    auto transcript = transcript_comodel(io, 2);
    auto out = cointerpret_tree(Value::list({}), hello, transcript);
    CHECK(out.to_string() == "() @ [\"Hello world!\"]");
    CHECK(validate_comodel(transcript).valid());

    auto full = cointerpret_tree(Value::list({Value::label("bye"), Value::label("bye")}), hello, transcript);
    CHECK(full.world.items().size() == 2);

    auto input = input_comodel(io, {Value::label("bye"), Value::label("Hello world!")});
    auto read_twice = call(io->require("read"), Value::unit(), [&](const Value& a) {
        return call(io->require("read"), Value::unit(), [&](const Value& b) { return ret(Value::pair(a, b)); });
    });
    auto r = cointerpret_tree(fin(0, 3), read_twice, input);
    CHECK(r.to_string() == "(\"bye\", \"Hello world!\") @ 2");
    CHECK(cointerpret_tree(fin(2, 3), read_twice, input).value ==
          Value::pair(Value::label("Hello world!"), Value::label("Hello world!")));
}

}
