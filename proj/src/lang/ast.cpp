#include "algeff/lang/ast.hpp"

#include "algeff/value.hpp"

namespace algeff::lang {

ValPtr Val::var(std::string name, Location loc) {
    return std::make_shared<const Val>(Val{Kind::Var, loc, std::move(name)});
}
ValPtr Val::boolean(bool b, Location loc) {
    Val v{Kind::Bool, loc};
    v.flag = b;
    return std::make_shared<const Val>(std::move(v));
}
ValPtr Val::unit(Location loc) { return std::make_shared<const Val>(Val{Kind::Unit, loc}); }
ValPtr Val::integer(std::int64_t n, Location loc) {
    Val v{Kind::Int, loc};
    v.number = n;
    return std::make_shared<const Val>(std::move(v));
}
ValPtr Val::str(std::string text, Location loc) {
    return std::make_shared<const Val>(Val{Kind::Str, loc, std::move(text)});
}
ValPtr Val::pair(ValPtr l, ValPtr r, Location loc) {
    Val v{Kind::Pair, loc};
    v.left = std::move(l);
    v.right = std::move(r);
    return std::make_shared<const Val>(std::move(v));
}
ValPtr Val::fun(std::string param, CompPtr body, Location loc) {
    Val v{Kind::Fun, loc, std::move(param)};
    v.body = std::move(body);
    return std::make_shared<const Val>(std::move(v));
}
ValPtr Val::handler(std::string binder, CompPtr ret, std::vector<OpClause> clauses, Location loc) {
    Val v{Kind::Handler, loc, std::move(binder)};
    v.body = std::move(ret);
    v.clauses = std::move(clauses);
    return std::make_shared<const Val>(std::move(v));
}
ValPtr Val::add(ValPtr l, ValPtr r, Location loc) {
    Val v{Kind::Add, loc};
    v.left = std::move(l);
    v.right = std::move(r);
    return std::make_shared<const Val>(std::move(v));
}

CompPtr Comp::ret(ValPtr v, Location loc) {
    Comp c{Kind::Return, loc};
    c.value = std::move(v);
    return std::make_shared<const Comp>(std::move(c));
}
CompPtr Comp::op(std::string name, ValPtr v, Location loc) {
    Comp c{Kind::Op, loc, std::move(name)};
    c.value = std::move(v);
    return std::make_shared<const Comp>(std::move(c));
}
CompPtr Comp::bind(std::string x, CompPtr c1, CompPtr c2, Location loc) {
    Comp c{Kind::Do, loc, std::move(x)};
    c.first = std::move(c1);
    c.second = std::move(c2);
    return std::make_shared<const Comp>(std::move(c));
}
CompPtr Comp::cond(ValPtr v, CompPtr c1, CompPtr c2, Location loc) {
    Comp c{Kind::If, loc};
    c.value = std::move(v);
    c.first = std::move(c1);
    c.second = std::move(c2);
    return std::make_shared<const Comp>(std::move(c));
}
CompPtr Comp::app(ValPtr f, ValPtr a, Location loc) {
    Comp c{Kind::App, loc};
    c.value = std::move(f);
    c.arg = std::move(a);
    return std::make_shared<const Comp>(std::move(c));
}
CompPtr Comp::handle(ValPtr h, CompPtr body, Location loc) {
    Comp c{Kind::Handle, loc};
    c.value = std::move(h);
    c.first = std::move(body);
    return std::make_shared<const Comp>(std::move(c));
}

namespace {

// Values that extend to the right (fun, handler bodies) or are sums need
// parentheses when they sit in an argument or operand position.
std::string atom(const Val& v) {
    switch (v.kind) {
    case Val::Kind::Fun:
    case Val::Kind::Add:
        return "(" + print(v) + ")";
    default:
        return print(v);
    }
}

}  // namespace

std::string print(const Val& v) {
    switch (v.kind) {
    case Val::Kind::Var: return v.name;
    case Val::Kind::Bool: return v.flag ? "true" : "false";
    case Val::Kind::Unit: return "()";
    case Val::Kind::Int: return std::to_string(v.number);
    case Val::Kind::Str: return quote_label(v.name);
    case Val::Kind::Pair: return "(" + print(*v.left) + ", " + print(*v.right) + ")";
    case Val::Kind::Fun: return "fun " + v.name + " -> " + print(*v.body);
    case Val::Kind::Handler: {
        std::string out = "handler { return " + v.name + " -> " + print(*v.body);
        for (const auto& c : v.clauses) {
            out += " | " + c.op + "(" + c.param + "; " + c.kont + ") -> " + print(*c.body);
        }
        return out + " }";
    }
    case Val::Kind::Add: {
        const std::string r = v.right->kind == Val::Kind::Add ? "(" + print(*v.right) + ")" : atom(*v.right);
        return atom(*v.left) + " + " + r;
    }
    }
    return "?";
}

std::string print(const Comp& c) {
    switch (c.kind) {
    case Comp::Kind::Return: return "return " + atom(*c.value);
    case Comp::Kind::Op: return c.name + "!(" + print(*c.value) + ")";
    case Comp::Kind::Do: return "do " + c.name + " <- " + print(*c.first) + " in " + print(*c.second);
    case Comp::Kind::If:
        return "if " + atom(*c.value) + " then " + print(*c.first) + " else " + print(*c.second);
    case Comp::Kind::App: return atom(*c.value) + " " + atom(*c.arg);
    case Comp::Kind::Handle: {
        // A sequence-free body keeps `with` from swallowing what follows.
        return "with " + atom(*c.value) + " handle (" + print(*c.first) + ")";
    }
    }
    return "?";
}

bool same(const Val& a, const Val& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Val::Kind::Var:
    case Val::Kind::Str: return a.name == b.name;
    case Val::Kind::Bool: return a.flag == b.flag;
    case Val::Kind::Unit: return true;
    case Val::Kind::Int: return a.number == b.number;
    case Val::Kind::Pair:
    case Val::Kind::Add: return same(*a.left, *b.left) && same(*a.right, *b.right);
    case Val::Kind::Fun: return a.name == b.name && same(*a.body, *b.body);
    case Val::Kind::Handler: {
        if (a.name != b.name || !same(*a.body, *b.body) || a.clauses.size() != b.clauses.size()) return false;
        for (std::size_t i = 0; i < a.clauses.size(); ++i) {
            const auto& x = a.clauses[i];
            const auto& y = b.clauses[i];
            if (x.op != y.op || x.param != y.param || x.kont != y.kont || !same(*x.body, *y.body)) return false;
        }
        return true;
    }
    }
    return false;
}

bool same(const Comp& a, const Comp& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Comp::Kind::Return: return same(*a.value, *b.value);
    case Comp::Kind::Op: return a.name == b.name && same(*a.value, *b.value);
    case Comp::Kind::Do: return a.name == b.name && same(*a.first, *b.first) && same(*a.second, *b.second);
    case Comp::Kind::If: return same(*a.value, *b.value) && same(*a.first, *b.first) && same(*a.second, *b.second);
    case Comp::Kind::App: return same(*a.value, *b.value) && same(*a.arg, *b.arg);
    case Comp::Kind::Handle: return same(*a.value, *b.value) && same(*a.first, *b.first);
    }
    return false;
}

}  // namespace algeff::lang
