#include "algeff/comodel.hpp"

#include "algeff/errors.hpp"

namespace algeff {

namespace {

constexpr std::size_t kWorldLimit = 1u << 20;

void require_enumerable(const Universe& world) {
    if (world.size() > kWorldLimit) {
        throw Error(ErrorKind::NonEnumerableWorld,
                    "world " + world.to_string() + " is too large to enumerate");
    }
}

}  // namespace

Cointerpretation make_cointerpretation(TheoryPtr theory, Universe world,
                                       std::map<std::string, Cooperation, std::less<>> coops) {
    require_enumerable(world);
    const auto worlds = world.enumerate();
    for (const auto& [name, coop] : coops) {
        const OpDecl& d = theory->require(name);
        if (d.arity.size() == 0 && !worlds.empty()) {
            throw Error(ErrorKind::InvalidCooperation,
                        "operation " + name + " has an empty arity; it has no cooperation on a nonempty world");
        }
        for (const auto& p : d.param.enumerate()) {
            for (const auto& w : worlds) {
                auto [a, w2] = coop(p, w);
                if (!d.arity.contains(a)) {
                    throw Error(ErrorKind::InvalidCooperation, "cooperation " + name + " at " + p.to_string() +
                                                                   " @ " + w.to_string() + " answers " +
                                                                   a.to_string() + " outside " + d.arity.to_string());
                }
                if (!world.contains(w2)) {
                    throw Error(ErrorKind::InvalidCooperation, "cooperation " + name + " at " + p.to_string() +
                                                                   " @ " + w.to_string() + " moves to " +
                                                                   w2.to_string() + " outside the world");
                }
            }
        }
    }
    return Cointerpretation{std::move(theory), std::move(world), std::move(coops)};
}

RunOutcome RunOutcome::done(Value v, Value w, std::size_t steps) {
    return RunOutcome{Kind::Done, std::move(v), {}, {}, std::move(w), steps};
}

RunOutcome RunOutcome::stuck(std::string op, Value p, Value w, std::size_t steps) {
    return RunOutcome{Kind::Stuck, {}, std::move(op), std::move(p), std::move(w), steps};
}

std::string RunOutcome::to_string() const {
    if (is_done()) return value.to_string() + " @ " + world.to_string();
    return "unhandled toplevel operation: " + op;
}

bool operator==(const RunOutcome& a, const RunOutcome& b) {
    if (a.kind != b.kind || !(a.world == b.world)) return false;
    if (a.is_done()) return a.value == b.value;
    return a.op == b.op && a.param == b.param;
}

RunOutcome cointerpret_tree(const Value& w0, const Tree& t, const Cointerpretation& c) {
    Value w = w0;
    const Tree* node = &t;
    std::size_t steps = 0;
    while (!node->is_leaf()) {
        auto it = c.coops.find(node->op());
        if (it == c.coops.end()) return RunOutcome::stuck(node->op(), node->param(), w, steps);
        auto [a, w2] = it->second(node->param(), w);
        ++steps;
        w = std::move(w2);
        node = &node->child(a);
    }
    return RunOutcome::done(node->value(), w, steps);
}

RunOutcome tensor_run(const FreeElement& m, const Value& w0, const Cointerpretation& c) {
    return cointerpret_tree(w0, m.tree, c);
}

std::string ComodelCheck::to_string() const {
    if (valid()) return "Valid";
    return "Violated " + *equation + ": param = " + witness->parameter.to_string() +
           ", world = " + witness->world.to_string();
}

namespace {

void require_covered(const Cointerpretation& c, const Tree& t, const std::string& eq) {
    if (t.is_leaf()) return;
    if (!c.covers(t.op())) {
        throw Error(ErrorKind::UncoveredOperation,
                    "equation " + eq + " mentions " + t.op() + ", which the comodel does not cover");
    }
    for (const auto& k : t.kont()) require_covered(c, k, eq);
}

}  // namespace

ComodelCheck validate_comodel_equation(const Cointerpretation& c, const Equation& e) {
    require_enumerable(c.world);
    const auto worlds = c.world.enumerate();
    for (const auto& p : e.parameters()) {
        const Tree lhs = e.lhs(p);
        const Tree rhs = e.rhs(p);
        require_covered(c, lhs, e.name);
        require_covered(c, rhs, e.name);
        for (const auto& w : worlds) {
            if (!(cointerpret_tree(w, lhs, c) == cointerpret_tree(w, rhs, c))) {
                return ComodelCheck{e.name, ComodelWitness{p, w}};
            }
        }
    }
    return {};
}

ComodelCheck validate_comodel(const Cointerpretation& c) {
    for (const auto& e : c.theory->eqs) {
        auto check = validate_comodel_equation(c, e);
        if (!check.valid()) return check;
    }
    return {};
}

namespace {

// By name, so combined theories work; by position when the name was renamed away.
const OpDecl& op_at(const TheoryPtr& t, std::size_t i, const char* name) {
    if (const OpDecl* d = t->find(name)) return *d;
    if (t->ops.size() <= i) throw Error(ErrorKind::TheoryMismatch, std::string("theory lacks ") + name);
    return t->ops[i];
}

}  // namespace

Cointerpretation state_comodel(const TheoryPtr& single_state) {
    const OpDecl& get = op_at(single_state, 0, "get");
    const OpDecl& put = op_at(single_state, 1, "put");
    return make_cointerpretation(
        single_state, get.arity,
        {{get.name, [](const Value&, const Value& w) { return std::pair{w, w}; }},
         {put.name, [](const Value& s, const Value&) { return std::pair{Value::unit(), s}; }}});
}

Cointerpretation broken_state_comodel(const TheoryPtr& single_state) {
    const OpDecl& get = op_at(single_state, 0, "get");
    const OpDecl& put = op_at(single_state, 1, "put");
    const Value first = get.arity.element(0);
    return make_cointerpretation(
        single_state, get.arity,
        {{get.name, [first](const Value&, const Value& w) { return std::pair{first, w}; }},
         {put.name, [](const Value& s, const Value&) { return std::pair{Value::unit(), s}; }}});
}

Cointerpretation alternating_choice_comodel(const TheoryPtr& choice) {
    const OpDecl& choose = op_at(choice, 0, "choose");
    return make_cointerpretation(choice, Universe::fin(2),
                                 {{choose.name, [](const Value&, const Value& w) {
                                       const auto i = w.as_int();
                                       return std::pair{Value::boolean(i == 1), Value::integer(1 - i, 2)};
                                   }}});
}

Cointerpretation transcript_comodel(const TheoryPtr& io, std::size_t bound) {
    const OpDecl& print = io->require("print");
    return make_cointerpretation(io, Universe::sequences(print.param, bound),
                                 {{print.name, [bound](const Value& s, const Value& w) {
                                       auto items = w.items();
                                       if (items.size() < bound) items.push_back(s);
                                       return std::pair{Value::unit(), Value::list(std::move(items))};
                                   }}});
}

Cointerpretation input_comodel(const TheoryPtr& io, const std::vector<Value>& input) {
    const OpDecl& print = io->require("print");
    const OpDecl& read = io->require("read");
    const auto n = static_cast<std::int64_t>(input.size());
    std::map<std::string, Cooperation, std::less<>> coops;
    coops[print.name] = [](const Value&, const Value& w) { return std::pair{Value::unit(), w}; };
    if (!input.empty()) {
        coops[read.name] = [input, n](const Value&, const Value& w) {
            const auto i = w.as_int();
            const auto next = std::min(i + 1, n);
            return std::pair{input[static_cast<std::size_t>(std::min(i, n - 1))], Value::integer(next, n + 1)};
        };
    }
    return make_cointerpretation(io, Universe::fin(n + 1), std::move(coops));
}

}  // namespace algeff
