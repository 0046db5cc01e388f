#include "algeff/theory.hpp"

#include <set>

#include "algeff/errors.hpp"

namespace algeff {

std::vector<Value> Equation::parameters() const {
    std::vector<Value> out;
    for (auto& p : param_universe.enumerate()) {
        if (!applies || applies(p)) out.push_back(std::move(p));
    }
    return out;
}

const OpDecl* Theory::find(std::string_view op) const {
    for (const auto& d : ops) {
        if (d.name == op) return &d;
    }
    return nullptr;
}

const OpDecl& Theory::require(std::string_view op) const {
    if (auto* d = find(op)) return *d;
    throw Error(ErrorKind::UnknownOperation,
                "operation " + std::string(op) + " is not declared in theory " + name);
}

const Equation* Theory::equation(std::string_view eq) const {
    for (const auto& e : eqs) {
        if (e.name == eq) return &e;
    }
    return nullptr;
}

namespace {

void require_param(const OpDecl& d, const Value& p) {
    if (!d.param.contains(p)) {
        throw Error(ErrorKind::ParameterOutOfUniverse,
                    "parameter " + p.to_string() + " of " + d.name + " is not in " + d.param.to_string());
    }
}

}  // namespace

Tree make_tree_op(const Theory& sig, const std::string& op, const Value& p,
                  const std::map<Value, Tree>& kont) {
    const OpDecl& d = sig.require(op);
    require_param(d, p);
    std::vector<Tree> branches;
    for (const auto& a : d.arity.enumerate()) {
        auto it = kont.find(a);
        if (it == kont.end()) {
            throw Error(ErrorKind::IncompleteContinuation,
                        "continuation of " + op + " misses the arity element " + a.to_string());
        }
        branches.push_back(it->second);
    }
    return Tree::node(op, d.param.element(*d.param.index_of(p)), d.arity, std::move(branches));
}

Tree make_tree_op(const Theory& sig, const std::string& op, const Value& p,
                  const std::function<Tree(const Value&)>& kont) {
    const OpDecl& d = sig.require(op);
    require_param(d, p);
    return call(d, d.param.element(*d.param.index_of(p)), kont);
}

void check_tree(const Theory& sig, const Tree& t, const Universe* context) {
    if (t.is_leaf()) {
        if (context && !context->contains(t.value())) {
            throw Error(ErrorKind::UnboundGenerator,
                        "generator " + t.value().to_string() + " is not in the context " + context->to_string());
        }
        return;
    }
    const OpDecl& d = sig.require(t.op());
    require_param(d, t.param());
    if (!(t.arity() == d.arity)) {
        throw Error(ErrorKind::IncompleteContinuation,
                    "node " + t.op() + " has arity " + t.arity().to_string() + ", declared " + d.arity.to_string());
    }
    for (const auto& k : t.kont()) check_tree(sig, k, context);
}

void check_well_formed(const Theory& theory) {
    std::set<std::string> names;
    for (const auto& d : theory.ops) {
        if (!names.insert(d.name).second) {
            throw Error(ErrorKind::UnknownOperation, "operation " + d.name + " declared twice");
        }
    }
    for (const auto& e : theory.eqs) {
        for (const auto& p : e.parameters()) {
            check_tree(theory, e.lhs(p), &e.context);
            check_tree(theory, e.rhs(p), &e.context);
        }
    }
}

Tree call(const OpDecl& op, const Value& p, const std::function<Tree(const Value&)>& k) {
    std::vector<Tree> kont;
    kont.reserve(op.arity.size());
    for (const auto& a : op.arity.enumerate()) kont.push_back(k(a));
    return Tree::node(op.name, p, op.arity, std::move(kont));
}

Tree binary(const OpDecl& op, const Value& p, Tree left, Tree right) {
    return Tree::node(op.name, p, op.arity, {std::move(left), std::move(right)});
}

Tree constant(const OpDecl& op, const Value& p) { return Tree::node(op.name, p, op.arity, {}); }

namespace {

using Fn = std::function<Tree(const Value&)>;

Tree ret(Value v) { return Tree::leaf(std::move(v)); }
Value unit() { return Value::unit(); }
Value gen(const char* name) { return Value::label(name); }

Equation law(std::string name, Universe params, Universe context, Fn lhs, Fn rhs,
             std::function<bool(const Value&)> applies = {}) {
    return Equation{std::move(name), std::move(params), std::move(context),
                    std::move(lhs), std::move(rhs), std::move(applies)};
}

void require_states(const Universe& states) {
    if (states.size() == 0) {
        throw Error(ErrorKind::EmptyStateUniverse, "state theories need a nonempty set of states");
    }
}

}  // namespace

TheoryPtr single_state_theory(const Universe& S) {
    require_states(S);
    auto t = std::make_shared<Theory>();
    t->name = "single_state";
    t->normalizer = NormalizerKind::SingleState;
    const OpDecl get{"get", Universe::unit(), S};
    const OpDecl put{"put", S, Universe::unit()};
    t->ops = {get, put};

    t->eqs.push_back(law(
        "get-get", Universe::unit(), Universe::product(S, S),
        [=](const Value&) {
            return call(get, unit(), [&](const Value& s) {
                return call(get, unit(), [&](const Value& u) { return ret(Value::pair(s, u)); });
            });
        },
        [=](const Value&) {
            return call(get, unit(), [](const Value& s) { return ret(Value::pair(s, s)); });
        }));
    t->eqs.push_back(law(
        "get-put", Universe::unit(), Universe::unit(),
        [=](const Value&) {
            return call(get, unit(), [&](const Value& s) {
                return call(put, s, [](const Value&) { return ret(unit()); });
            });
        },
        [](const Value&) { return ret(unit()); }));
    t->eqs.push_back(law(
        "put-get", S, S,
        [=](const Value& s) {
            return call(put, s, [&](const Value&) {
                return call(get, unit(), [](const Value& u) { return ret(u); });
            });
        },
        [=](const Value& s) { return call(put, s, [&](const Value&) { return ret(s); }); }));
    t->eqs.push_back(law(
        "put-put", Universe::product(S, S), Universe::unit(),
        [=](const Value& st) {
            return call(put, st.first(), [&](const Value&) {
                return call(put, st.second(), [](const Value&) { return ret(unit()); });
            });
        },
        [=](const Value& st) {
            return call(put, st.second(), [](const Value&) { return ret(unit()); });
        }));
    return t;
}

TheoryPtr state_theory(const Universe& L, const Universe& S) {
    require_states(S);
    auto t = std::make_shared<Theory>();
    t->name = "state";
    const OpDecl lookup{"lookup", L, S};
    const OpDecl update{"update", Universe::product(L, S), Universe::unit()};
    t->ops = {lookup, update};
    auto done = [](const Value&) { return ret(unit()); };

    t->eqs.push_back(law(
        "lookup-lookup", L, Universe::product(S, S),
        [=](const Value& l) {
            return call(lookup, l, [&](const Value& s) {
                return call(lookup, l, [&](const Value& u) { return ret(Value::pair(s, u)); });
            });
        },
        [=](const Value& l) {
            return call(lookup, l, [](const Value& s) { return ret(Value::pair(s, s)); });
        }));
    t->eqs.push_back(law(
        "lookup-update", L, Universe::unit(),
        [=](const Value& l) {
            return call(lookup, l, [&](const Value& s) { return call(update, Value::pair(l, s), done); });
        },
        done));
    t->eqs.push_back(law(
        "update-lookup", Universe::product(L, S), S,
        [=](const Value& ls) {
            return call(update, ls, [&](const Value&) {
                return call(lookup, ls.first(), [](const Value& u) { return ret(u); });
            });
        },
        [=](const Value& ls) { return call(update, ls, [&](const Value&) { return ret(ls.second()); }); }));
    t->eqs.push_back(law(
        "update-update", Universe::product(L, Universe::product(S, S)), Universe::unit(),
        [=](const Value& p) {
            const Value& l = p.first();
            return call(update, Value::pair(l, p.second().first()), [&](const Value&) {
                return call(update, Value::pair(l, p.second().second()), done);
            });
        },
        [=](const Value& p) { return call(update, Value::pair(p.first(), p.second().second()), done); }));

    // Distinct locations. Symmetric laws are generated for l < l' only; the
    // mirrored instance is the same equation read right to left.
    const Universe LL = Universe::product(L, L);
    auto ordered = [L](const Value& ll) { return *L.index_of(ll.first()) < *L.index_of(ll.second()); };
    auto distinct = [](const Value& ll) { return !(ll.first() == ll.second()); };

    t->eqs.push_back(law(
        "lookup-lookup-distinct", LL, Universe::product(S, S),
        [=](const Value& ll) {
            return call(lookup, ll.first(), [&](const Value& s) {
                return call(lookup, ll.second(), [&](const Value& u) { return ret(Value::pair(s, u)); });
            });
        },
        [=](const Value& ll) {
            return call(lookup, ll.second(), [&](const Value& u) {
                return call(lookup, ll.first(), [&](const Value& s) { return ret(Value::pair(s, u)); });
            });
        },
        ordered));
    t->eqs.push_back(law(
        "update-lookup-distinct", Universe::product(LL, S), S,
        [=](const Value& p) {
            const Value cell = Value::pair(p.first().first(), p.second());
            return call(update, cell, [&](const Value&) {
                return call(lookup, p.first().second(), [](const Value& u) { return ret(u); });
            });
        },
        [=](const Value& p) {
            const Value cell = Value::pair(p.first().first(), p.second());
            return call(lookup, p.first().second(), [&](const Value& u) {
                return call(update, cell, [&](const Value&) { return ret(u); });
            });
        },
        [=](const Value& p) { return distinct(p.first()); }));
    t->eqs.push_back(law(
        "update-update-distinct", Universe::product(LL, Universe::product(S, S)), Universe::unit(),
        [=](const Value& p) {
            const Value a = Value::pair(p.first().first(), p.second().first());
            const Value b = Value::pair(p.first().second(), p.second().second());
            return call(update, a, [&](const Value&) { return call(update, b, done); });
        },
        [=](const Value& p) {
            const Value a = Value::pair(p.first().first(), p.second().first());
            const Value b = Value::pair(p.first().second(), p.second().second());
            return call(update, b, [&](const Value&) { return call(update, a, done); });
        },
        [=](const Value& p) { return ordered(p.first()); }));
    return t;
}

TheoryPtr io_theory(const Universe& S) {
    auto t = std::make_shared<Theory>();
    t->name = "io";
    t->ops = {{"print", S, Universe::unit()}, {"read", Universe::unit(), S}};
    return t;
}

TheoryPtr exception_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "exception";
    t->ops = {{"abort", Universe::unit(), Universe::empty()}};
    return t;
}

TheoryPtr choice_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "choice";
    t->normalizer = NormalizerKind::Choice;
    const OpDecl choose{"choose", Universe::unit(), Universe::boolean()};
    t->ops = {choose};
    const Value x = gen("x"), y = gen("y"), z = gen("z");
    auto c = [=](Tree l, Tree r) { return binary(choose, unit(), std::move(l), std::move(r)); };

    t->eqs.push_back(law(
        "idempotence", Universe::unit(), Universe::enumeration({"x"}),
        [=](const Value&) { return c(ret(x), ret(x)); }, [=](const Value&) { return ret(x); }));
    t->eqs.push_back(law(
        "commutativity", Universe::unit(), Universe::enumeration({"x", "y"}),
        [=](const Value&) { return c(ret(x), ret(y)); }, [=](const Value&) { return c(ret(y), ret(x)); }));
    t->eqs.push_back(law(
        "associativity", Universe::unit(), Universe::enumeration({"x", "y", "z"}),
        [=](const Value&) { return c(c(ret(x), ret(y)), ret(z)); },
        [=](const Value&) { return c(ret(x), c(ret(y), ret(z))); }));
    return t;
}

TheoryPtr semilattice_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "semilattice";
    t->normalizer = NormalizerKind::Semilattice;
    const OpDecl bot{"bot", Universe::unit(), Universe::empty()};
    const OpDecl vee{"vee", Universe::unit(), Universe::boolean()};
    t->ops = {bot, vee};
    const Value x = gen("x"), y = gen("y"), z = gen("z");
    auto j = [=](Tree l, Tree r) { return binary(vee, unit(), std::move(l), std::move(r)); };

    t->eqs.push_back(law(
        "associativity", Universe::unit(), Universe::enumeration({"x", "y", "z"}),
        [=](const Value&) { return j(ret(x), j(ret(y), ret(z))); },
        [=](const Value&) { return j(j(ret(x), ret(y)), ret(z)); }));
    t->eqs.push_back(law(
        "commutativity", Universe::unit(), Universe::enumeration({"x", "y"}),
        [=](const Value&) { return j(ret(x), ret(y)); }, [=](const Value&) { return j(ret(y), ret(x)); }));
    t->eqs.push_back(law(
        "idempotence", Universe::unit(), Universe::enumeration({"x"}),
        [=](const Value&) { return j(ret(x), ret(x)); }, [=](const Value&) { return ret(x); }));
    t->eqs.push_back(law(
        "unit", Universe::unit(), Universe::enumeration({"x"}),
        [=](const Value&) { return j(ret(x), constant(bot, unit())); }, [=](const Value&) { return ret(x); }));
    return t;
}

TheoryPtr pointed_set_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "pointed_set";
    t->ops = {{"point", Universe::unit(), Universe::empty()}};
    return t;
}

TheoryPtr empty_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "empty";
    return t;
}

TheoryPtr singleton_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "singleton";
    t->normalizer = NormalizerKind::Singleton;
    t->ops = {{"star", Universe::unit(), Universe::empty()}};
    const Value x = gen("x"), y = gen("y");
    t->eqs.push_back(law(
        "collapse", Universe::unit(), Universe::enumeration({"x", "y"}),
        [=](const Value&) { return ret(x); }, [=](const Value&) { return ret(y); }));
    return t;
}

TheoryPtr group_theory() {
    auto t = std::make_shared<Theory>();
    t->name = "group";
    const OpDecl u{"u", Universe::unit(), Universe::empty()};
    const OpDecl m{"m", Universe::unit(), Universe::boolean()};
    const OpDecl i{"i", Universe::unit(), Universe::unit()};
    t->ops = {u, m, i};
    const Value x = gen("x"), y = gen("y"), z = gen("z");
    auto mul = [=](Tree l, Tree r) { return binary(m, unit(), std::move(l), std::move(r)); };
    auto inv = [=](Tree a) { return call(i, unit(), [&](const Value&) { return a; }); };
    auto one = [=] { return constant(u, unit()); };
    const Universe xs = Universe::enumeration({"x"});

    t->eqs.push_back(law(
        "associativity", Universe::unit(), Universe::enumeration({"x", "y", "z"}),
        [=](const Value&) { return mul(mul(ret(x), ret(y)), ret(z)); },
        [=](const Value&) { return mul(ret(x), mul(ret(y), ret(z))); }));
    t->eqs.push_back(law(
        "left-unit", Universe::unit(), xs, [=](const Value&) { return mul(one(), ret(x)); },
        [=](const Value&) { return ret(x); }));
    t->eqs.push_back(law(
        "right-unit", Universe::unit(), xs, [=](const Value&) { return mul(ret(x), one()); },
        [=](const Value&) { return ret(x); }));
    t->eqs.push_back(law(
        "right-inverse", Universe::unit(), xs, [=](const Value&) { return mul(ret(x), inv(ret(x))); },
        [=](const Value&) { return one(); }));
    t->eqs.push_back(law(
        "left-inverse", Universe::unit(), xs, [=](const Value&) { return mul(inv(ret(x)), ret(x)); },
        [=](const Value&) { return one(); }));
    return t;
}

TheoryPtr builtin_theory(const BuiltinKey& key) {
    switch (key.kind) {
    case Builtin::State: return state_theory(key.locations, key.states);
    case Builtin::SingleState: return single_state_theory(key.states);
    case Builtin::IO: return io_theory(key.states);
    case Builtin::Exception: return exception_theory();
    case Builtin::Choice: return choice_theory();
    case Builtin::Semilattice: return semilattice_theory();
    case Builtin::PointedSet: return pointed_set_theory();
    case Builtin::EmptyTheory: return empty_theory();
    case Builtin::SingletonTheory: return singleton_theory();
    case Builtin::Group: return group_theory();
    }
    throw std::invalid_argument("unknown builtin theory");
}

namespace {

Equation renamed(const Equation& e, const std::map<std::string, std::string>& renaming) {
    if (renaming.empty()) return e;
    Equation out = e;
    auto lhs = e.lhs;
    auto rhs = e.rhs;
    out.lhs = [lhs, renaming](const Value& p) { return rename_ops(lhs(p), renaming); };
    out.rhs = [rhs, renaming](const Value& p) { return rename_ops(rhs(p), renaming); };
    return out;
}

}  // namespace

TheoryPtr combine(const Theory& t1, const Theory& t2, bool distribute) {
    std::set<std::string> n1, n2;
    for (const auto& d : t1.ops) n1.insert(d.name);
    for (const auto& d : t2.ops) n2.insert(d.name);

    const bool same_name = t1.name == t2.name;
    const std::string suffix1 = same_name ? "1" : t1.name;
    const std::string suffix2 = same_name ? "2" : t2.name;

    auto out = std::make_shared<Theory>();
    out->name = t1.name + "+" + t2.name;
    out->renames = t1.renames;
    out->renames.insert(out->renames.end(), t2.renames.begin(), t2.renames.end());

    std::map<std::string, std::string> r1, r2;
    for (const auto& name : n1) {
        if (n2.count(name)) {
            r1[name] = name + "_" + suffix1;
            r2[name] = name + "_" + suffix2;
            out->renames.push_back({t1.name, name, r1[name]});
            out->renames.push_back({t2.name, name, r2[name]});
        }
    }

    std::vector<OpDecl> ops1, ops2;
    for (auto d : t1.ops) {
        if (auto it = r1.find(d.name); it != r1.end()) d.name = it->second;
        ops1.push_back(d);
    }
    for (auto d : t2.ops) {
        if (auto it = r2.find(d.name); it != r2.end()) d.name = it->second;
        ops2.push_back(d);
    }
    out->ops = ops1;
    out->ops.insert(out->ops.end(), ops2.begin(), ops2.end());

    auto eq_name = [&](const std::string& theory, const std::string& eq) {
        return same_name ? eq : theory + "." + eq;
    };
    for (const auto& e : t1.eqs) {
        out->eqs.push_back(renamed(e, r1));
        if (same_name) out->eqs.back().name = e.name + "_1";
        else out->eqs.back().name = eq_name(t1.name, e.name);
    }
    for (const auto& e : t2.eqs) {
        out->eqs.push_back(renamed(e, r2));
        if (same_name) out->eqs.back().name = e.name + "_2";
        else out->eqs.back().name = eq_name(t2.name, e.name);
    }

    if (distribute) {
        for (const auto& o1 : ops1) {
            for (const auto& o2 : ops2) {
                Equation e;
                e.name = o1.name + "-" + o2.name + "-commute";
                e.param_universe = Universe::product(o1.param, o2.param);
                e.context = Universe::product(o1.arity, o2.arity);
                e.lhs = [o1, o2](const Value& p) {
                    return call(o1, p.first(), [&](const Value& a1) {
                        return call(o2, p.second(), [&](const Value& a2) { return ret(Value::pair(a1, a2)); });
                    });
                };
                e.rhs = [o1, o2](const Value& p) {
                    return call(o2, p.second(), [&](const Value& a2) {
                        return call(o1, p.first(), [&](const Value& a1) { return ret(Value::pair(a1, a2)); });
                    });
                };
                out->eqs.push_back(std::move(e));
            }
        }
    }

    // A side without operations contributes nothing, so the other side's
    // canonical forms stay valid.
    if (t1.ops.empty() && !distribute) out->normalizer = t2.normalizer;
    else if (t2.ops.empty() && !distribute) out->normalizer = t1.normalizer;
    if (t1.ops.empty() && t2.ops.empty()) out->normalizer = NormalizerKind::None;
    return out;
}

}  // namespace algeff
