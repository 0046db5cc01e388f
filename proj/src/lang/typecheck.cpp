#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>

#include "algeff/lang/types.hpp"

namespace algeff::lang {

// ---- resolved types --------------------------------------------------------

namespace {

void collect_vars(const ValueType& t, std::vector<std::int64_t>& order);

void collect_vars(const CompType& c, std::vector<std::int64_t>& order) { collect_vars(c.value, order); }

void collect_vars(const ValueType& t, std::vector<std::int64_t>& order) {
    switch (t.kind) {
    case ValueType::Kind::Var:
        if (std::find(order.begin(), order.end(), t.size) == order.end()) order.push_back(t.size);
        break;
    case ValueType::Kind::Prod:
        collect_vars(*t.left, order);
        collect_vars(*t.right, order);
        break;
    case ValueType::Kind::Arrow:
        collect_vars(*t.left, order);
        collect_vars(*t.to, order);
        break;
    case ValueType::Kind::Handler:
        collect_vars(*t.from, order);
        collect_vars(*t.to, order);
        break;
    default: break;
    }
}

using Names = std::vector<std::int64_t>;

std::string show(const ValueType& t, const Names& names);
std::string show(const CompType& c, const Names& names);

bool is_functional(const ValueType& t) {
    return t.kind == ValueType::Kind::Arrow || t.kind == ValueType::Kind::Handler;
}

std::string paren_if(bool p, const std::string& s) { return p ? "(" + s + ")" : s; }

std::string show_label(const std::string& l) {
    const bool plain = !l.empty() && (std::isalpha(static_cast<unsigned char>(l[0])) || l[0] == '_') &&
                       std::all_of(l.begin(), l.end(), [](char c) {
                           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    return plain ? l : quote_label(l);
}

std::string show(const ValueType& t, const Names& names) {
    switch (t.kind) {
    case ValueType::Kind::Var: {
        const auto i = std::find(names.begin(), names.end(), t.size) - names.begin();
        std::string name = "'";
        name += static_cast<char>('a' + i % 26);
        if (i >= 26) name += std::to_string(i / 26);
        return name;
    }
    case ValueType::Kind::Empty: return "empty";
    case ValueType::Kind::Unit: return "unit";
    case ValueType::Kind::Bool: return "bool";
    case ValueType::Kind::Fin: return "fin " + std::to_string(t.size);
    case ValueType::Kind::Enum:
    case ValueType::Kind::Str: {
        // A string literal type lists the labels it must contain.
        if (t.kind == ValueType::Kind::Str && t.labels.empty()) return "str";
        std::string out = t.kind == ValueType::Kind::Enum ? "enum {" : "str {";
        for (std::size_t i = 0; i < t.labels.size(); ++i) out += (i ? ", " : "") + show_label(t.labels[i]);
        return out + "}";
    }
    case ValueType::Kind::Int: return "int";
    case ValueType::Kind::Prod:
        return paren_if(t.left->kind == ValueType::Kind::Prod || is_functional(*t.left), show(*t.left, names)) + " * " +
               paren_if(is_functional(*t.right), show(*t.right, names));
    case ValueType::Kind::Arrow:
        return paren_if(is_functional(*t.left), show(*t.left, names)) + " -> " + show(*t.to, names);
    case ValueType::Kind::Handler: return show(*t.from, names) + " => " + show(*t.to, names);
    }
    return "?";
}

std::string show(const CompType& c, const Names& names) {
    std::string out = paren_if(is_functional(c.value), show(c.value, names)) + " ! {";
    bool first = true;
    for (const auto& op : c.dirt) {
        if (!first) out += ", ";
        first = false;
        out += op;
    }
    return out + "}";
}

}  // namespace

std::string ValueType::to_string() const {
    Names names;
    collect_vars(*this, names);
    return show(*this, names);
}

std::string CompType::to_string() const {
    Names names;
    collect_vars(*this, names);
    return show(*this, names);
}

std::optional<Universe> ValueType::universe() const {
    switch (kind) {
    case Kind::Empty: return Universe::empty();
    case Kind::Unit: return Universe::unit();
    case Kind::Bool: return Universe::boolean();
    case Kind::Fin: return Universe::fin(size);
    case Kind::Enum: return Universe::enumeration(labels);
    case Kind::Prod: {
        auto l = left->universe();
        auto r = right->universe();
        if (!l || !r) return std::nullopt;
        return Universe::product(*l, *r);
    }
    default: return std::nullopt;
    }
}

ValueType type_of_universe(const Universe& u) {
    ValueType t;
    switch (u.shape()) {
    case Universe::Shape::Empty: t.kind = ValueType::Kind::Empty; break;
    case Universe::Shape::Unit: t.kind = ValueType::Kind::Unit; break;
    case Universe::Shape::Bool: t.kind = ValueType::Kind::Bool; break;
    case Universe::Shape::Fin:
        t.kind = ValueType::Kind::Fin;
        t.size = u.fin_size();
        break;
    case Universe::Shape::Enum:
        t.kind = ValueType::Kind::Enum;
        t.labels = u.labels();
        break;
    case Universe::Shape::Product:
        t.kind = ValueType::Kind::Prod;
        t.left = std::make_shared<const ValueType>(type_of_universe(u.left()));
        t.right = std::make_shared<const ValueType>(type_of_universe(u.right()));
        break;
    case Universe::Shape::Seq:
        throw Error(ErrorKind::TypeError, "sequence universes have no value type");
    }
    return t;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{"fst", "snd", "not"};
    return names;
}

// ---- inference -------------------------------------------------------------

namespace {

using K = ValueType::Kind;

struct Node {
    K tag;
    std::int64_t n = 0;  // Fin size, Int lower bound
    std::vector<std::string> labels;   // Enum
    std::set<std::string> required;    // Str
    Node* a = nullptr;  // Prod left, Arrow argument, Handler input
    Node* b = nullptr;  // Prod right, Arrow result, Handler output
    int d1 = -1;        // Arrow result dirt, Handler input dirt
    int d2 = -1;        // Handler output dirt
    Node* link = nullptr;
    std::int64_t id = 0;
};

struct Dirt {
    int parent;
    std::map<std::string, Location> ops;
};

struct Edge {
    int from;
    int to;
    std::set<std::string> removed;
};

struct Typed {
    Node* type;
    int dirt;
};

bool before(const Location& a, const Location& b) {
    return a.line != b.line ? a.line < b.line : a.column < b.column;
}

class Checker {
public:
    explicit Checker(const Theory& theory) : theory_(theory) {}

    Node* var() { return make(K::Var); }

    Node* make(K tag, Node* a = nullptr, Node* b = nullptr) {
        nodes_.push_back(Node{tag});
        Node* n = &nodes_.back();
        n->a = a;
        n->b = b;
        n->id = static_cast<std::int64_t>(nodes_.size());
        return n;
    }

    int dirt() {
        dirts_.push_back(Dirt{static_cast<int>(dirts_.size()), {}});
        return static_cast<int>(dirts_.size()) - 1;
    }

    int dirt_with(const std::string& op, Location loc) {
        int d = dirt();
        dirts_[d].ops.emplace(op, loc);
        return d;
    }

    Node* from_universe(const Universe& u) { return from_type(type_of_universe(u), nullptr); }

    Node* from_type(const ValueType& t, std::map<std::int64_t, Node*>* vars) {
        std::map<std::int64_t, Node*> local;
        if (!vars) vars = &local;
        switch (t.kind) {
        case K::Var: {
            auto [it, fresh] = vars->emplace(t.size, nullptr);
            if (fresh) it->second = var();
            return it->second;
        }
        case K::Empty:
        case K::Unit:
        case K::Bool: return make(t.kind);
        case K::Fin:
        case K::Int: {
            Node* n = make(t.kind);
            n->n = t.size;
            return n;
        }
        case K::Enum: {
            Node* n = make(K::Enum);
            n->labels = t.labels;
            return n;
        }
        case K::Str: {
            Node* n = make(K::Str);
            n->required.insert(t.labels.begin(), t.labels.end());
            return n;
        }
        case K::Prod: return make(K::Prod, from_type(*t.left, vars), from_type(*t.right, vars));
        case K::Arrow: {
            Node* n = make(K::Arrow, from_type(*t.left, vars), from_type(t.to->value, vars));
            n->d1 = fixed_dirt(t.to->dirt);
            return n;
        }
        case K::Handler: {
            Node* n = make(K::Handler, from_type(t.from->value, vars), from_type(t.to->value, vars));
            n->d1 = fixed_dirt(t.from->dirt);
            n->d2 = fixed_dirt(t.to->dirt);
            return n;
        }
        }
        return var();
    }

    int fixed_dirt(const std::set<std::string>& ops) {
        int d = dirt();
        for (const auto& op : ops) dirts_[d].ops.emplace(op, Location{});
        return d;
    }

    Node* find(Node* n) {
        while (n->link) n = n->link;
        return n;
    }

    int find_dirt(int d) {
        while (dirts_[d].parent != d) d = dirts_[d].parent;
        return d;
    }

    void equate(int x, int y) {
        x = find_dirt(x);
        y = find_dirt(y);
        if (x == y) return;
        for (auto& [op, loc] : dirts_[y].ops) {
            auto [it, inserted] = dirts_[x].ops.emplace(op, loc);
            if (!inserted && before(loc, it->second)) it->second = loc;
        }
        dirts_[y].parent = x;
    }

    void flow(int from, int to, std::set<std::string> removed = {}) {
        edges_.push_back(Edge{from, to, std::move(removed)});
    }

    void solve() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : edges_) {
                const int from = find_dirt(e.from);
                const int to = find_dirt(e.to);
                if (from == to) continue;
                for (const auto& [op, loc] : dirts_[from].ops) {
                    if (e.removed.count(op)) continue;
                    auto [it, inserted] = dirts_[to].ops.emplace(op, loc);
                    if (inserted) changed = true;
                }
            }
        }
    }

    const std::map<std::string, Location>& dirt_ops(int d) { return dirts_[find_dirt(d)].ops; }

    ValueType resolve(Node* n) {
        n = find(n);
        ValueType t;
        t.kind = n->tag;
        switch (n->tag) {
        case K::Var: t.size = n->id; break;
        case K::Fin:
        case K::Int: t.size = n->n; break;
        case K::Enum: t.labels = n->labels; break;
        case K::Str: t.labels.assign(n->required.begin(), n->required.end()); break;
        case K::Prod:
            t.left = std::make_shared<const ValueType>(resolve(n->a));
            t.right = std::make_shared<const ValueType>(resolve(n->b));
            break;
        case K::Arrow:
            t.left = std::make_shared<const ValueType>(resolve(n->a));
            t.to = std::make_shared<const CompType>(resolve(n->b, n->d1));
            break;
        case K::Handler:
            t.from = std::make_shared<const CompType>(resolve(n->a, n->d1));
            t.to = std::make_shared<const CompType>(resolve(n->b, n->d2));
            break;
        default: break;
        }
        return t;
    }

    CompType resolve(Node* n, int d) {
        CompType c{resolve(n), {}};
        for (const auto& [op, loc] : dirt_ops(d)) c.dirt.insert(op);
        return c;
    }

    std::string show(Node* n) {
        solve();
        return resolve(n).to_string();
    }

    [[noreturn]] void mismatch(Location loc, Node* expected, Node* found) {
        // Render both sides with one variable naming so shared variables line up.
        solve();
        ValueType pair;
        pair.kind = K::Prod;
        pair.left = std::make_shared<const ValueType>(resolve(expected));
        pair.right = std::make_shared<const ValueType>(resolve(found));
        Names names;
        collect_vars(pair, names);
        throw TypeError(loc, algeff::lang::show(*pair.left, names), algeff::lang::show(*pair.right, names));
    }

    void unify(Node* expected, Node* found, Location loc) {
        if (!unify_inner(expected, found)) mismatch(loc, expected, found);
    }

    bool occurs(Node* v, Node* t) {
        t = find(t);
        if (t == v) return true;
        return (t->a && occurs(v, t->a)) || (t->b && occurs(v, t->b));
    }

    bool unify_inner(Node* x, Node* y) {
        x = find(x);
        y = find(y);
        if (x == y) return true;
        if (y->tag == K::Var) std::swap(x, y);
        if (x->tag == K::Var) {
            if (occurs(x, y)) return false;
            x->link = y;
            return true;
        }
        if (y->tag == K::Int || y->tag == K::Str) std::swap(x, y);
        if (x->tag == K::Int) {
            if (y->tag == K::Int) {
                y->n = std::max(x->n, y->n);
                x->link = y;
                return true;
            }
            if (y->tag == K::Fin && y->n >= x->n) {
                x->link = y;
                return true;
            }
            return false;
        }
        if (x->tag == K::Str) {
            if (y->tag == K::Str) {
                y->required.insert(x->required.begin(), x->required.end());
                x->link = y;
                return true;
            }
            if (y->tag == K::Enum &&
                std::all_of(x->required.begin(), x->required.end(), [&](const std::string& l) {
                    return std::find(y->labels.begin(), y->labels.end(), l) != y->labels.end();
                })) {
                x->link = y;
                return true;
            }
            return false;
        }
        if (x->tag != y->tag) return false;
        switch (x->tag) {
        case K::Fin: return x->n == y->n;
        case K::Enum: return x->labels == y->labels;
        case K::Prod: return unify_inner(x->a, y->a) && unify_inner(x->b, y->b);
        case K::Arrow:
            if (!unify_inner(x->a, y->a) || !unify_inner(x->b, y->b)) return false;
            equate(x->d1, y->d1);
            return true;
        case K::Handler:
            if (!unify_inner(x->a, y->a) || !unify_inner(x->b, y->b)) return false;
            equate(x->d1, y->d1);
            equate(x->d2, y->d2);
            return true;
        default: return true;
        }
    }

    // -- environments --

    struct Scope {
        Checker& self;
        Scope(Checker& c, const std::string& name, Node* t) : self(c) { c.env_.emplace_back(name, t); }
        ~Scope() { self.env_.pop_back(); }
    };

    void bind_context(const TypeContext& ctx) {
        std::map<std::int64_t, Node*> vars;
        for (const auto& [name, t] : ctx) env_.emplace_back(name, from_type(t, &vars));
    }

    Node* lookup(const std::string& name, Location loc) {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
            if (it->first == name) return it->second;
        }
        if (name == "fst" || name == "snd") {
            Node* l = var();
            Node* r = var();
            Node* f = make(K::Arrow, make(K::Prod, l, r), name == "fst" ? l : r);
            f->d1 = dirt();
            return f;
        }
        if (name == "not") {
            Node* f = make(K::Arrow, make(K::Bool), make(K::Bool));
            f->d1 = dirt();
            return f;
        }
        throw TypeError(loc, TypeError::Reason::UnboundVariable, name);
    }

    // -- rules --

    Node* value(const Val& v) {
        switch (v.kind) {
        case Val::Kind::Var: return lookup(v.name, v.loc);
        case Val::Kind::Bool: return make(K::Bool);
        case Val::Kind::Unit: return make(K::Unit);
        case Val::Kind::Int: {
            Node* n = make(K::Int);
            n->n = v.number + 1;
            return n;
        }
        case Val::Kind::Str: {
            Node* n = make(K::Str);
            n->required.insert(v.name);
            return n;
        }
        case Val::Kind::Pair: return make(K::Prod, value(*v.left), value(*v.right));
        case Val::Kind::Add: {
            Node* l = value(*v.left);
            Node* number = make(K::Int);
            number->n = 1;
            unify(number, l, v.left->loc);
            Node* r = value(*v.right);
            unify(l, r, v.right->loc);
            return l;
        }
        case Val::Kind::Fun: {
            Node* a = var();
            Scope scope(*this, v.name, a);
            Typed body = comp(*v.body);
            Node* f = make(K::Arrow, a, body.type);
            f->d1 = body.dirt;
            return f;
        }
        case Val::Kind::Handler: return handler(v);
        }
        return var();
    }

    Node* handler(const Val& v) {
        Node* in = var();
        Node* out = var();
        const int din = dirt();
        const int dout = dirt();
        {
            Scope scope(*this, v.name, in);
            Typed r = comp(*v.body);
            unify(out, r.type, v.body->loc);
            flow(r.dirt, dout);
        }
        std::set<std::string> handled;
        for (const auto& clause : v.clauses) {
            const OpDecl* decl = theory_.find(clause.op);
            if (!decl) throw TypeError(clause.loc, TypeError::Reason::UnknownOperation, clause.op);
            handled.insert(clause.op);
            dirts_[din].ops.emplace(clause.op, clause.loc);
            Node* k = make(K::Arrow, from_universe(decl->arity), out);
            k->d1 = dout;
            Scope p(*this, clause.param, from_universe(decl->param));
            Scope kk(*this, clause.kont, k);
            Typed body = comp(*clause.body);
            unify(out, body.type, clause.body->loc);
            flow(body.dirt, dout);
        }
        flow(din, dout, handled);
        Node* h = make(K::Handler, in, out);
        h->d1 = din;
        h->d2 = dout;
        return h;
    }

    Typed comp(const Comp& c) {
        switch (c.kind) {
        case Comp::Kind::Return: return {value(*c.value), dirt()};
        case Comp::Kind::Op: {
            const OpDecl* decl = theory_.find(c.name);
            if (!decl) throw TypeError(c.loc, TypeError::Reason::UnknownOperation, c.name);
            unify(from_universe(decl->param), value(*c.value), c.value->loc);
            return {from_universe(decl->arity), dirt_with(c.name, c.loc)};
        }
        case Comp::Kind::Do: {
            Typed first = comp(*c.first);
            Scope scope(*this, c.name, first.type);
            Typed second = comp(*c.second);
            const int d = dirt();
            flow(first.dirt, d);
            flow(second.dirt, d);
            return {second.type, d};
        }
        case Comp::Kind::If: {
            unify(make(K::Bool), value(*c.value), c.value->loc);
            Typed yes = comp(*c.first);
            Typed no = comp(*c.second);
            unify(yes.type, no.type, c.second->loc);
            const int d = dirt();
            flow(yes.dirt, d);
            flow(no.dirt, d);
            return {yes.type, d};
        }
        case Comp::Kind::App: {
            Node* f = find(value(*c.value));
            Node* a = value(*c.arg);
            if (f->tag == K::Var) {
                Node* arrow = make(K::Arrow, var(), var());
                arrow->d1 = dirt();
                unify_inner(f, arrow);
                f = arrow;
            } else if (f->tag != K::Arrow) {
                solve();
                throw TypeError(c.value->loc, "a function", resolve(f).to_string());
            }
            unify(f->a, a, c.arg->loc);
            const int d = dirt();
            flow(f->d1, d);
            return {f->b, d};
        }
        case Comp::Kind::Handle: {
            Node* h = find(value(*c.value));
            if (h->tag == K::Var) {
                Node* fresh = make(K::Handler, var(), var());
                fresh->d1 = dirt();
                fresh->d2 = dirt();
                unify_inner(h, fresh);
                h = fresh;
            } else if (h->tag != K::Handler) {
                solve();
                throw TypeError(c.value->loc, "a handler", resolve(h).to_string());
            }
            Typed body = comp(*c.first);
            unify(h->a, body.type, c.first->loc);
            flow(body.dirt, h->d1);
            const int d = dirt();
            flow(h->d2, d);
            return {h->b, d};
        }
        }
        return {var(), dirt()};
    }

    void check_allowed(const Typed& t, const std::set<std::string>& allowed) {
        solve();
        const auto& ops = dirt_ops(t.dirt);
        std::optional<std::pair<std::string, Location>> worst;
        for (const auto& [op, loc] : ops) {
            if (allowed.count(op)) continue;
            if (!worst || before(loc, worst->second)) worst = {op, loc};
        }
        if (!worst) return;
        CompType found = resolve(t.type, t.dirt);
        CompType expected{found.value, allowed};
        throw TypeError(worst->second, expected.to_string(), found.to_string());
    }

private:
    const Theory& theory_;
    std::deque<Node> nodes_;
    std::vector<Dirt> dirts_;
    std::vector<Edge> edges_;
    std::vector<std::pair<std::string, Node*>> env_;
};

}  // namespace

CompType typecheck(const Comp& c, const Theory& theory, const TypeContext& ctx, const TypecheckOptions& options) {
    Checker checker(theory);
    checker.bind_context(ctx);
    Typed t = checker.comp(c);
    std::set<std::string> allowed;
    if (options.allowed_dirt) {
        allowed = *options.allowed_dirt;
    } else {
        for (const auto& d : theory.ops) allowed.insert(d.name);
    }
    checker.check_allowed(t, allowed);
    return checker.resolve(t.type, t.dirt);
}

ValueType typecheck(const Val& v, const Theory& theory, const TypeContext& ctx) {
    Checker checker(theory);
    checker.bind_context(ctx);
    Node* t = checker.value(v);
    checker.solve();
    return checker.resolve(t);
}

}  // namespace algeff::lang
