#include <doctest.h>

#include <set>

#include "algeff/errors.hpp"
#include "algeff/free.hpp"
#include "corpus.hpp"

using namespace algeff;

namespace {

Tree ret(Value v) { return Tree::leaf(std::move(v)); }
Value lab(const char* s) { return Value::label(s); }
Value fin(std::int64_t i, std::int64_t n) { return Value::integer(i, n); }

std::vector<Value> fin_values(std::int64_t n) { return Universe::fin(n).enumerate(); }

}  // namespace

TEST_SUITE("free") {

TEST_CASE("eta") {
    auto ss = single_state_theory(Universe::fin(2));
    CHECK(eta(ss, lab("v")).tree == ret(lab("v")));

    auto empty = empty_theory();
    CHECK(tree_equal_modulo(empty, ret(lab("x")), ret(lab("y"))) == Verdict::Distinct);
    CHECK(tree_equal_modulo(empty, ret(lab("x")), ret(lab("x"))) == Verdict::Equal);

    auto one = singleton_theory();
    CHECK(tree_equal_modulo(one, eta(one, lab("x")).tree, eta(one, lab("y")).tree) == Verdict::Equal);
}

TEST_CASE("lift and sequence follow the two clauses") {
    auto ch = choice_theory();
    Kleisli phi = [&](const Value& x) { return FreeElement{ch, ret(Value::pair(x, x))}; };
    CHECK(lift(phi, eta(ch, lab("x"))).tree == ret(Value::pair(lab("x"), lab("x"))));

    auto choose = generic_op(ch, "choose", Value::unit());
    auto negated = sequence(choose, [&](const Value& b) { return eta(ch, Value::boolean(!b.as_bool())); });
    CHECK(negated.tree.to_string() == "choose((); {return true, return false})");

    const OpDecl& c = ch->require("choose");
    Tree node = binary(c, Value::unit(), ret(lab("x")), ret(lab("y")));
    auto h = [&](const Value& v) { return FreeElement{ch, binary(c, Value::unit(), ret(v), ret(v))}; };
    CHECK(sequence(FreeElement{ch, node}, h).tree ==
          binary(c, Value::unit(), h(lab("x")).tree, h(lab("y")).tree));
}

TEST_CASE("generic operations") {
    auto exc = exception_theory();
    CHECK(generic_op(exc, "abort", Value::unit()).tree.to_string() == "abort((); {})");

    auto io = io_theory(Universe::enumeration({"Hello world!"}));
    auto hello = sequence(generic_op(io, "print", lab("Hello world!")),
                          [&](const Value&) { return eta(io, Value::unit()); });
    CHECK(hello.tree.to_string() == "print(\"Hello world!\"; {return ()})");

    CHECK_THROWS_AS(generic_op(io, "launch", Value::unit()), Error);
    CHECK_THROWS_AS(generic_op(io, "print", lab("bye")), Error);
}

TEST_CASE("monad laws hold syntactically on trees") {
    auto ss = single_state_theory(Universe::fin(2));
    const auto ts = corpus::trees(*ss, fin_values(2), 3, 60);
    Kleisli unit = [&](const Value& x) { return eta(ss, x); };
    Kleisli phi = [&](const Value& x) {
        return FreeElement{ss, call(ss->ops[1], x, [&](const Value&) { return ret(Value::pair(x, x)); })};
    };
    Kleisli psi = [&](const Value& x) {
        return FreeElement{ss, call(ss->ops[0], Value::unit(), [&](const Value& s) { return ret(Value::pair(x, s)); })};
    };
    for (const auto& t : ts) {
        FreeElement m{ss, t};
        CHECK(lift(unit, m).tree == t);
        CHECK(lift(psi, lift(phi, m)).tree == lift([&](const Value& x) { return lift(psi, phi(x)); }, m).tree);
    }
    CHECK(lift(phi, eta(ss, fin(1, 2))).tree == phi(fin(1, 2)).tree);
}

TEST_CASE("single-state normal forms") {
    auto ss = single_state_theory(Universe::fin(2));
    Tree nf = normalize(*ss, ret(lab("v")));
    CHECK(nf.to_string() == "get((); {put(0; {return \"v\"}), put(1; {return \"v\"})})");

    Tree gg = call(ss->ops[0], Value::unit(), [&](const Value& s) {
        return call(ss->ops[0], Value::unit(), [&](const Value& t) { return ret(Value::pair(s, t)); });
    });
    auto form = state_normal_form(*ss, gg);
    for (const auto& s : fin_values(2)) {
        CHECK(form.f.at(s) == s);
        CHECK(form.g.at(s) == Value::pair(s, s));
    }
    CHECK(normalize(*ss, gg).to_string() == "get((); {put(0; {return (0, 0)}), put(1; {return (1, 1)})})");
}

TEST_CASE("state_normal_form examples") {
    auto ss = single_state_theory(Universe::fin(3));
    const OpDecl& get = ss->ops[0];
    const OpDecl& put = ss->ops[1];
    Tree t = call(put, fin(1, 3), [&](const Value&) { return call(get, Value::unit(), [](const Value& s) { return ret(s); }); });
    auto nf = state_normal_form(*ss, t);
    for (const auto& s : fin_values(3)) {
        CHECK(nf.f.at(s) == fin(1, 3));
        CHECK(nf.g.at(s) == fin(1, 3));
    }

    auto r = state_normal_form(*ss, ret(lab("v")));
    for (const auto& s : fin_values(3)) {
        CHECK(r.f.at(s) == s);
        CHECK(r.g.at(s) == lab("v"));
    }

    Tree gp = call(get, Value::unit(), [&](const Value& s) { return call(put, s, [&](const Value&) { return ret(s); }); });
    auto id = state_normal_form(*ss, gp);
    for (const auto& s : fin_values(3)) {
        CHECK(id.f.at(s) == s);
        CHECK(id.g.at(s) == s);
    }
}

TEST_CASE("state normal form agrees with the denotational reading") {
    auto ss = single_state_theory(Universe::fin(3));
    for (const auto& t : corpus::trees(*ss, fin_values(2), 4, 100)) {
        auto nf = state_normal_form(*ss, t);
        for (const auto& s : fin_values(3)) {
            auto [s1, v] = corpus::run_state(t, s);
            CHECK(nf.f.at(s) == s1);
            CHECK(nf.g.at(s) == v);
        }
        CHECK(normalize(*ss, normalize(*ss, t)) == normalize(*ss, t));
    }
}

TEST_CASE("semilattice normal forms") {
    auto sl = semilattice_theory();
    const OpDecl& bot = sl->ops[0];
    const OpDecl& vee = sl->ops[1];
    Tree t = binary(vee, Value::unit(), binary(vee, Value::unit(), ret(lab("x")), ret(lab("x"))), constant(bot, Value::unit()));
    CHECK(normalize(*sl, t) == ret(lab("x")));
    CHECK(normalize(*sl, constant(bot, Value::unit())).to_string() == "bot((); {})");
    Tree yx = binary(vee, Value::unit(), ret(lab("y")), binary(vee, Value::unit(), ret(lab("x")), ret(lab("y"))));
    CHECK(normalize(*sl, yx).to_string() == "vee((); {return \"x\", return \"y\"})");
}

TEST_CASE("normalize is idempotent") {
    const std::vector<Value> xs{lab("x"), lab("y"), lab("z")};
    for (const auto& theory : {semilattice_theory(), choice_theory(), io_theory(Universe::fin(2)), exception_theory()}) {
        for (const auto& t : corpus::trees(*theory, xs, 3, 50)) {
            CHECK(normalize(*theory, normalize(*theory, t)) == normalize(*theory, t));
        }
    }
}

TEST_CASE("theories without a strategy refuse to normalize") {
    try {
        normalize(*group_theory(), ret(lab("x")));
        FAIL("expected NoNormalizer");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoNormalizer);
    }
    CHECK(has_normalizer(*pointed_set_theory()));
    CHECK(has_normalizer(*empty_theory()));
    CHECK_FALSE(has_normalizer(*state_theory(Universe::fin(2), Universe::fin(2))));
}

TEST_CASE("counting normal forms") {
    const std::vector<Value> four{lab("a"), lab("b"), lab("c"), lab("d")};
    auto ps = pointed_set_theory();
    std::set<Tree> pointed;
    for (const auto& t : corpus::all_trees(*ps, four, 3)) pointed.insert(normalize(*ps, t));
    CHECK(pointed.size() == 5);

    const std::vector<Value> three{lab("x"), lab("y"), lab("z")};
    auto sl = semilattice_theory();
    std::set<Tree> lattice;
    for (const auto& t : corpus::all_trees(*sl, three, 2)) lattice.insert(normalize(*sl, t));
    CHECK(lattice.size() == 8);
}

TEST_CASE("tree_equal_modulo") {
    auto ss = single_state_theory(Universe::fin(3));
    const Equation& gg = *ss->equation("get-get");
    CHECK(tree_equal_modulo(ss, gg.lhs(Value::unit()), gg.rhs(Value::unit())) == Verdict::Equal);
    Tree t = corpus::trees(*ss, fin_values(2), 3, 1).front();
    CHECK(tree_equal_modulo(ss, t, t) == Verdict::Equal);

    auto ch = choice_theory();
    const OpDecl& c = ch->ops[0];
    Tree xy = binary(c, Value::unit(), ret(lab("x")), ret(lab("y")));
    Tree yx = binary(c, Value::unit(), ret(lab("y")), ret(lab("x")));
    CHECK(tree_equal_modulo(ch, xy, yx, 1000) == Verdict::Equal);
    CHECK(congruence_search(*ch, xy, yx, 1000) == Verdict::Equal);
    CHECK(tree_equal_modulo(ch, ret(lab("x")), ret(lab("y"))) == Verdict::Distinct);
    CHECK(refute_with_models(refutation_models(ch), ret(lab("x")), ret(lab("y"))));
}

TEST_CASE("congruence search on a theory without a normalizer") {
    auto g = group_theory();
    const OpDecl& u = g->require("u");
    const OpDecl& m = g->require("m");
    const OpDecl& i = g->require("i");
    auto mul = [&](Tree a, Tree b) { return binary(m, Value::unit(), std::move(a), std::move(b)); };
    auto inv = [&](Tree a) { return call(i, Value::unit(), [&](const Value&) { return a; }); };
    Tree one = constant(u, Value::unit());
    Tree x = ret(lab("x")), y = ret(lab("y"));

    CHECK(tree_equal_modulo(g, mul(one, x), x) == Verdict::Equal);
    CHECK(tree_equal_modulo(g, mul(mul(x, y), inv(y)), x) == Verdict::Equal);
    SearchStats stats;
    CHECK(tree_equal_modulo(g, x, y, kDefaultBudget, &stats) == Verdict::Distinct);
    CHECK(stats.refuted_by_model);
    CHECK(congruence_search(*g, mul(x, y), mul(y, x), 50) == Verdict::Unknown);
}

TEST_CASE("lift respects the congruence") {
    auto ch = choice_theory();
    const std::vector<Value> xs{lab("x"), lab("y")};
    const auto ts = corpus::trees(*ch, xs, 3, 60);
    Kleisli phi = [&](const Value& x) {
        return FreeElement{ch, binary(ch->ops[0], Value::unit(), ret(x), ret(lab("z")))};
    };
    for (std::size_t a = 0; a < ts.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
            if (tree_equal_modulo(ch, ts[a], ts[b]) != Verdict::Equal) continue;
            CHECK(tree_equal_modulo(ch, lift(phi, FreeElement{ch, ts[a]}).tree, lift(phi, FreeElement{ch, ts[b]}).tree) ==
                  Verdict::Equal);
        }
    }
}

}
