#include "algeff/lang/eval.hpp"

#include <set>

namespace algeff::lang {

EnvPtr extend(EnvPtr env, std::string name, Value value) {
    return std::make_shared<const Env>(Env{std::move(name), std::move(value), std::move(env)});
}

namespace {

[[noreturn]] void runtime_error(const std::string& message) { throw Error(ErrorKind::RuntimeError, message); }

class Primitive : public Callable {
public:
    Primitive(std::string name, std::function<Value(const Value&)> fn) : name_(std::move(name)), fn_(std::move(fn)) {}
    std::string describe() const override { return "<primitive " + name_ + ">"; }
    Tree apply(const Value& arg) const override { return Tree::leaf(fn_(arg)); }

private:
    std::string name_;
    std::function<Value(const Value&)> fn_;
};

class Closure : public Callable {
public:
    Closure(std::string param, CompPtr body, EnvPtr env, TheoryPtr theory)
        : param_(std::move(param)), body_(std::move(body)), env_(std::move(env)), theory_(std::move(theory)) {}
    std::string describe() const override { return "<fun>"; }
    Tree apply(const Value& arg) const override { return eval_comp(*body_, extend(env_, param_, arg), theory_); }

private:
    std::string param_;
    CompPtr body_;
    EnvPtr env_;
    TheoryPtr theory_;
};

class HandlerClosure : public Opaque {
public:
    HandlerClosure(std::string binder, CompPtr ret, std::vector<OpClause> clauses, EnvPtr env, TheoryPtr theory)
        : binder(std::move(binder)), ret(std::move(ret)), clauses(std::move(clauses)), env(std::move(env)),
          theory(std::move(theory)) {}
    std::string describe() const override { return "<handler>"; }

    const OpClause* clause(const std::string& op) const {
        for (const auto& c : clauses) {
            if (c.op == op) return &c;
        }
        return nullptr;
    }

    std::string binder;
    CompPtr ret;
    std::vector<OpClause> clauses;
    EnvPtr env;
    TheoryPtr theory;
};

Tree handle_with(const std::shared_ptr<const HandlerClosure>& h, const Tree& t);

/// k in an operation clause: a -> handle(h, kont(a)).
class Continuation : public Callable {
public:
    Continuation(std::shared_ptr<const HandlerClosure> h, Tree node) : h_(std::move(h)), node_(std::move(node)) {}
    std::string describe() const override { return "<continuation>"; }
    Tree apply(const Value& arg) const override { return handle_with(h_, node_.child(arg)); }

private:
    std::shared_ptr<const HandlerClosure> h_;
    Tree node_;
};

Tree handle_with(const std::shared_ptr<const HandlerClosure>& h, const Tree& t) {
    if (t.is_leaf()) return eval_comp(*h->ret, extend(h->env, h->binder, t.value()), h->theory);
    if (const OpClause* c = h->clause(t.op())) {
        EnvPtr env = extend(h->env, c->param, t.param());
        env = extend(env, c->kont, Value::opaque(std::make_shared<Continuation>(h, t)));
        return eval_comp(*c->body, env, h->theory);
    }
    std::vector<Tree> kont;
    kont.reserve(t.kont().size());
    for (const auto& k : t.kont()) kont.push_back(handle_with(h, k));
    return Tree::node(t.op(), t.param(), t.arity(), std::move(kont));
}

std::shared_ptr<const HandlerClosure> as_handler(const Value& v) {
    if (v.kind() == Value::Kind::Opaque) {
        if (auto h = std::dynamic_pointer_cast<const HandlerClosure>(v.as_opaque())) return h;
    }
    runtime_error(v.to_string() + " is not a handler");
}

}  // namespace

EnvPtr initial_env() {
    static const EnvPtr env = [] {
        EnvPtr e;
        e = extend(e, "fst", Value::opaque(std::make_shared<Primitive>("fst", [](const Value& v) { return v.first(); })));
        e = extend(e, "snd", Value::opaque(std::make_shared<Primitive>("snd", [](const Value& v) { return v.second(); })));
        e = extend(e, "not", Value::opaque(std::make_shared<Primitive>("not", [](const Value& v) {
                       return Value::boolean(!v.as_bool());
                   })));
        return e;
    }();
    return env;
}

bool is_handler(const Value& v) {
    return v.kind() == Value::Kind::Opaque &&
           std::dynamic_pointer_cast<const HandlerClosure>(v.as_opaque()) != nullptr;
}

Tree handle(const Value& handler, const Tree& t) { return handle_with(as_handler(handler), t); }

Tree apply(const Value& f, const Value& arg) {
    if (f.kind() == Value::Kind::Opaque) {
        if (auto c = std::dynamic_pointer_cast<const Callable>(f.as_opaque())) return c->apply(arg);
    }
    runtime_error(f.to_string() + " is not a function");
}

Value eval_value(const Val& v, const EnvPtr& env, const TheoryPtr& theory) {
    switch (v.kind) {
    case Val::Kind::Var:
        for (const Env* e = env.get(); e; e = e->next.get()) {
            if (e->name == v.name) return e->value;
        }
        runtime_error("unbound variable " + v.name + " at " + v.loc.to_string());
    case Val::Kind::Bool: return Value::boolean(v.flag);
    case Val::Kind::Unit: return Value::unit();
    case Val::Kind::Int: return Value::integer(v.number);
    case Val::Kind::Str: return Value::label(v.name);
    case Val::Kind::Pair: return Value::pair(eval_value(*v.left, env, theory), eval_value(*v.right, env, theory));
    case Val::Kind::Add: {
        const Value l = eval_value(*v.left, env, theory);
        const Value r = eval_value(*v.right, env, theory);
        const std::int64_t m = l.modulus() ? l.modulus() : r.modulus();
        std::int64_t sum = l.as_int() + r.as_int();
        if (m > 0) sum = ((sum % m) + m) % m;
        return Value::integer(sum, m);
    }
    case Val::Kind::Fun: return Value::opaque(std::make_shared<Closure>(v.name, v.body, env, theory));
    case Val::Kind::Handler:
        return Value::opaque(std::make_shared<HandlerClosure>(v.name, v.body, v.clauses, env, theory));
    }
    runtime_error("unknown value form");
}

Tree eval_comp(const Comp& c, const EnvPtr& env, const TheoryPtr& theory) {
    switch (c.kind) {
    case Comp::Kind::Return: return Tree::leaf(eval_value(*c.value, env, theory));
    case Comp::Kind::Op:
        return make_tree_op(*theory, c.name, eval_value(*c.value, env, theory),
                            [](const Value& a) { return Tree::leaf(a); });
    case Comp::Kind::Do: {
        const Tree first = eval_comp(*c.first, env, theory);
        return substitute(first, [&](const Value& x) { return eval_comp(*c.second, extend(env, c.name, x), theory); });
    }
    case Comp::Kind::If:
        return eval_value(*c.value, env, theory).as_bool() ? eval_comp(*c.first, env, theory)
                                                           : eval_comp(*c.second, env, theory);
    case Comp::Kind::App: {
        const Value f = eval_value(*c.value, env, theory);
        return apply(f, eval_value(*c.arg, env, theory));
    }
    case Comp::Kind::Handle: {
        const Value h = eval_value(*c.value, env, theory);
        return handle(h, eval_comp(*c.first, env, theory));
    }
    }
    runtime_error("unknown computation form");
}

FreeElement eval_pure(const Comp& c, const TheoryPtr& theory, const EnvPtr& env) {
    return {theory, eval_comp(c, env, theory)};
}

// ---- handler equations -----------------------------------------------------

std::string HandlerCheck::to_string() const {
    std::string out;
    switch (status) {
    case Status::Respected: out = "Respected (bounded)"; break;
    case Status::Violated: out = "Violated " + *equation + ": param = " + parameter->to_string(); break;
    case Status::Unknown: out = "Unknown " + *equation + ": param = " + parameter->to_string(); break;
    }
    if (!uncovered.empty()) {
        out += "\nnot covered:";
        for (const auto& op : uncovered) out += " " + op;
    }
    return out;
}

namespace {

struct Observer {
    const TheoryPtr& theory;
    bool exact = true;

    Tree observe_tree(const Tree& t, const ValueType& type) {
        Tree mapped = substitute(t, [&](const Value& v) { return Tree::leaf(observe(v, type)); });
        if (has_normalizer(*theory)) return normalize(*theory, mapped);
        if (!mapped.is_leaf()) exact = false;
        return mapped;
    }

    Value observe(const Value& v, const ValueType& type) {
        switch (type.kind) {
        case ValueType::Kind::Arrow: {
            auto domain = type.left->universe();
            if (!domain) break;
            std::vector<Value> results;
            for (const auto& a : domain->enumerate()) {
                results.push_back(Value::label(observe_tree(apply(v, a), type.to->value).to_string()));
            }
            return Value::list(std::move(results));
        }
        case ValueType::Kind::Prod:
            if (v.kind() != Value::Kind::Pair) break;
            return Value::pair(observe(v.first(), *type.left), observe(v.second(), *type.right));
        default: break;
        }
        if (v.kind() == Value::Kind::Opaque) exact = false;
        return v;
    }
};

bool mentions(const Tree& t, const std::set<std::string>& ops) {
    if (t.is_leaf()) return false;
    if (ops.count(t.op())) return true;
    for (const auto& k : t.kont()) {
        if (mentions(k, ops)) return true;
    }
    return false;
}

}  // namespace

HandlerCheck check_handler_equations(const Value& handler, const ValueType& output, const TheoryPtr& theory,
                                     std::size_t budget) {
    auto h = as_handler(handler);
    HandlerCheck result;
    std::set<std::string> uncovered;
    for (const auto& d : theory->ops) {
        if (!h->clause(d.name)) {
            uncovered.insert(d.name);
            result.uncovered.push_back(d.name);
        }
    }
    std::optional<HandlerCheck> unknown;
    for (const auto& e : theory->eqs) {
        for (const auto& p : e.parameters()) {
            const Tree lhs = e.lhs(p);
            const Tree rhs = e.rhs(p);
            if (mentions(lhs, uncovered) || mentions(rhs, uncovered)) continue;
            Observer obs{theory};
            const Tree l = obs.observe_tree(handle_with(h, lhs), output);
            const Tree r = obs.observe_tree(handle_with(h, rhs), output);
            const Verdict v = tree_equal_modulo(theory, l, r, budget);
            if (v == Verdict::Equal) continue;
            if (v == Verdict::Distinct && obs.exact) {
                result.status = HandlerCheck::Status::Violated;
                result.equation = e.name;
                result.parameter = p;
                return result;
            }
            if (!unknown) {
                unknown = result;
                unknown->status = HandlerCheck::Status::Unknown;
                unknown->equation = e.name;
                unknown->parameter = p;
            }
        }
    }
    return unknown ? *unknown : result;
}

HandlerCheck check_handler_equations(const Val& expr, const TheoryPtr& theory, std::size_t budget) {
    const ValueType t = typecheck(expr, *theory);
    if (t.kind != ValueType::Kind::Handler) {
        throw TypeError(expr.loc, "a handler", t.to_string());
    }
    const Value h = eval_value(expr, initial_env(), theory);
    return check_handler_equations(h, t.to->value, theory, budget);
}

}  // namespace algeff::lang
