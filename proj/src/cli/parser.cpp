#include "algeff/cli/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace algeff::cli {

using lang::Comp;
using lang::CompPtr;
using lang::OpClause;
using lang::Val;
using lang::ValPtr;

namespace {

// ---- lexer -----------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Int, Str, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    std::int64_t number = 0;
    Location loc;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    Location here{1, 1};
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++here.line;
                here.column = 1;
            } else {
                ++here.column;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.loc = here;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = Token::Kind::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::Int;
            t.text = std::string(src.substr(i, j - i));
            if (t.text.size() > 18) throw SyntaxError(t.loc, "integer literal too large");
            t.number = std::stoll(t.text);
            advance(j - i);
        } else if (c == '"') {
            t.kind = Token::Kind::Str;
            advance(1);
            while (true) {
                if (i >= src.size() || src[i] == '\n') throw SyntaxError(t.loc, "unterminated string");
                if (src[i] == '"') {
                    advance(1);
                    break;
                }
                if (src[i] == '\\') {
                    if (i + 1 >= src.size()) throw SyntaxError(here, "unterminated string");
                    const char e = src[i + 1];
                    if (e == 'n') t.text += '\n';
                    else if (e == 't') t.text += '\t';
                    else if (e == '"' || e == '\\') t.text += e;
                    else throw SyntaxError(here, std::string("unknown escape \\") + e);
                    advance(2);
                    continue;
                }
                t.text += src[i];
                advance(1);
            }
        } else {
            static const char* const two[] = {"->", "<-", "~>"};
            t.kind = Token::Kind::Sym;
            for (const char* s : two) {
                if (src.substr(i, 2) == s) t.text = s;
            }
            if (t.text.empty()) {
                static const std::string singles = "(){}[],;:!|\\.+*=@-";
                if (singles.find(c) == std::string::npos) {
                    throw SyntaxError(t.loc, std::string("unexpected character '") + c + "'");
                }
                t.text = std::string(1, c);
            }
            advance(t.text.size());
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.loc = here;
    out.push_back(end);
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Str: return quote_label(t.text);
    default: return "'" + t.text + "'";
    }
}

const std::set<std::string>& keywords() {
    static const std::set<std::string> k{"return", "do",  "in",   "if",      "then",  "else",
                                         "with",   "handle", "fun", "handler", "true", "false"};
    return k;
}

Value canonical(const Value& v, const Universe& u, Location loc) {
    if (auto i = u.index_of(v)) return u.element(*i);
    throw Error(ErrorKind::ParameterOutOfUniverse,
                "value " + v.to_string() + " at " + loc.to_string() + " is not an element of " + u.to_string());
}

Value add_values(const Value& l, const Value& r) {
    const std::int64_t m = l.modulus() ? l.modulus() : r.modulus();
    std::int64_t sum = l.as_int() + r.as_int();
    if (m > 0) sum = ((sum % m) + m) % m;
    return Value::integer(sum, m);
}

bool same_theory_name(std::string a, std::string b) {
    auto squash = [](std::string s) {
        std::string out;
        for (char c : s) {
            if (c != '_' && c != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        return out;
    };
    return squash(std::move(a)) == squash(std::move(b));
}

// ---- parser ----------------------------------------------------------------

using Bindings = std::map<std::string, Value>;
using ValueFn = std::function<Value(const Bindings&)>;
using TreeFn = std::function<Tree(const Bindings&)>;

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    const Token& next() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool is_sym(std::string_view s, std::size_t k = 0) const {
        return peek(k).kind == Token::Kind::Sym && peek(k).text == s;
    }
    bool is_word(std::string_view s, std::size_t k = 0) const {
        return peek(k).kind == Token::Kind::Ident && peek(k).text == s;
    }
    bool accept_sym(std::string_view s) {
        if (!is_sym(s)) return false;
        next();
        return true;
    }
    bool accept_word(std::string_view s) {
        if (!is_word(s)) return false;
        next();
        return true;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(peek().loc, "expected " + expected + ", found " + describe(peek()));
    }
    const Token& expect_sym(std::string_view s) {
        if (!is_sym(s)) fail("'" + std::string(s) + "'");
        return next();
    }
    const Token& expect_word(std::string_view s) {
        if (!is_word(s)) fail("'" + std::string(s) + "'");
        return next();
    }
    std::string ident(const std::string& what = "an identifier") {
        if (peek().kind != Token::Kind::Ident || keywords().count(peek().text)) fail(what);
        return next().text;
    }
    /// Identifiers that may contain hyphens, such as `put-get`.
    std::string dashed_ident(const std::string& what) {
        std::string out = ident(what);
        while (is_sym("-") && peek(1).kind == Token::Kind::Ident) {
            next();
            out += "-" + next().text;
        }
        return out;
    }
    std::int64_t integer() {
        if (peek().kind != Token::Kind::Int) fail("an integer");
        return next().number;
    }
    void finish() {
        if (!at_end()) fail("end of input");
    }

    // -- programs -------------------------------------------------------------

    CompPtr seq() {
        CompPtr c = comp();
        if (is_sym(";")) {
            const Location loc = next().loc;
            return Comp::bind("_", c, seq(), loc);
        }
        return c;
    }

    CompPtr comp() {
        const Token& t = peek();
        const Location loc = t.loc;
        if (accept_word("return")) return Comp::ret(value(), loc);
        if (accept_word("do")) {
            std::string x = ident("a variable");
            expect_sym("<-");
            CompPtr c1 = seq();
            expect_word("in");
            return Comp::bind(std::move(x), c1, seq(), loc);
        }
        if (accept_word("if")) {
            ValPtr v = value();
            expect_word("then");
            CompPtr c1 = seq();
            expect_word("else");
            return Comp::cond(v, c1, comp(), loc);
        }
        if (accept_word("with")) {
            ValPtr h = value();
            expect_word("handle");
            return Comp::handle(h, comp(), loc);
        }
        if (t.kind == Token::Kind::Ident && !keywords().count(t.text) && is_sym("!", 1)) {
            std::string op = next().text;
            next();
            const Location arg = expect_sym("(").loc;
            if (accept_sym(")")) return Comp::op(std::move(op), Val::unit(arg), loc);
            ValPtr v = value();
            expect_sym(")");
            return Comp::op(std::move(op), v, loc);
        }
        if (is_sym("(")) {
            // Either an application whose function is parenthesized or a
            // parenthesized computation.
            const std::size_t save = pos_;
            try {
                ValPtr f = sum();
                if (starts_value()) return Comp::app(f, sum(), loc);
            } catch (const SyntaxError&) {
            }
            pos_ = save;
            next();
            CompPtr c = seq();
            expect_sym(")");
            return c;
        }
        if (!starts_value()) fail("a computation");
        ValPtr f = sum();
        if (!starts_value()) fail("an argument");
        return Comp::app(f, sum(), loc);
    }

    bool starts_value() const {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Int:
        case Token::Kind::Str: return true;
        case Token::Kind::Ident:
            return !keywords().count(t.text) || t.text == "true" || t.text == "false" || t.text == "fun" ||
                   t.text == "handler";
        case Token::Kind::Sym: return t.text == "(";
        case Token::Kind::End: return false;
        }
        return false;
    }

    ValPtr value() { return sum(); }

    ValPtr sum() {
        ValPtr v = atom();
        while (is_sym("+")) {
            const Location loc = next().loc;
            v = Val::add(v, atom(), loc);
        }
        return v;
    }

    ValPtr atom() {
        const Token& t = peek();
        const Location loc = t.loc;
        switch (t.kind) {
        case Token::Kind::Int: return Val::integer(next().number, loc);
        case Token::Kind::Str: return Val::str(next().text, loc);
        case Token::Kind::End: fail("a value");
        case Token::Kind::Sym:
            if (!accept_sym("(")) fail("a value");
            if (accept_sym(")")) return Val::unit(loc);
            {
                ValPtr first = value();
                if (accept_sym(",")) {
                    ValPtr second = value();
                    expect_sym(")");
                    return Val::pair(first, second, loc);
                }
                expect_sym(")");
                return first;
            }
        case Token::Kind::Ident: break;
        }
        if (accept_word("true")) return Val::boolean(true, loc);
        if (accept_word("false")) return Val::boolean(false, loc);
        if (accept_word("fun")) {
            std::string x = ident("a parameter name");
            expect_sym("->");
            return Val::fun(std::move(x), seq(), loc);
        }
        if (accept_word("handler")) return handler(loc);
        return Val::var(ident("a value"), loc);
    }

    ValPtr handler(Location loc) {
        expect_sym("{");
        expect_word("return");
        std::string x = ident("a variable");
        expect_sym("->");
        CompPtr ret = seq();
        std::vector<OpClause> clauses;
        std::set<std::string> seen;
        while (accept_sym("|")) {
            OpClause c;
            c.loc = peek().loc;
            c.op = ident("an operation name");
            if (!seen.insert(c.op).second) throw SyntaxError(c.loc, "duplicate clause for " + c.op);
            expect_sym("(");
            c.param = ident("a parameter name");
            expect_sym(";");
            c.kont = ident("a continuation name");
            expect_sym(")");
            expect_sym("->");
            c.body = seq();
            clauses.push_back(std::move(c));
        }
        expect_sym("}");
        return Val::handler(std::move(x), ret, std::move(clauses), loc);
    }

    // -- universes and data ----------------------------------------------------

    Universe universe() {
        Universe left = universe_atom();
        if (accept_sym("*")) return Universe::product(left, universe());
        return left;
    }

    Universe universe_atom() {
        if (accept_sym("(")) {
            Universe u = universe();
            expect_sym(")");
            return u;
        }
        if (accept_word("empty")) return Universe::empty();
        if (accept_word("unit")) return Universe::unit();
        if (accept_word("bool")) return Universe::boolean();
        if (is_word("fin")) {
            next();
            const Location loc = peek().loc;
            const std::int64_t n = integer();
            if (n < 0) throw SyntaxError(loc, "negative size");
            return Universe::fin(n);
        }
        if (accept_word("enum")) {
            expect_sym("{");
            std::vector<std::string> labels;
            std::set<std::string> seen;
            if (!is_sym("}")) {
                do {
                    const Token& t = peek();
                    if (t.kind != Token::Kind::Ident && t.kind != Token::Kind::Str) fail("a label");
                    if (!seen.insert(t.text).second) throw SyntaxError(t.loc, "duplicate label " + t.text);
                    labels.push_back(next().text);
                } while (accept_sym(","));
            }
            expect_sym("}");
            return Universe::enumeration(std::move(labels));
        }
        if (accept_word("seq")) {
            expect_sym("(");
            Universe element = universe();
            expect_sym(",");
            const std::int64_t k = integer();
            expect_sym(")");
            return Universe::sequences(element, static_cast<std::size_t>(k));
        }
        fail("a universe");
    }

    Value datum() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Int: return Value::integer(next().number);
        case Token::Kind::Str: return Value::label(next().text);
        case Token::Kind::Ident:
            if (accept_word("true")) return Value::boolean(true);
            if (accept_word("false")) return Value::boolean(false);
            return Value::label(next().text);
        case Token::Kind::Sym:
            if (accept_sym("(")) {
                if (accept_sym(")")) return Value::unit();
                Value first = datum();
                if (accept_sym(",")) {
                    Value second = datum();
                    expect_sym(")");
                    return Value::pair(first, second);
                }
                expect_sym(")");
                return first;
            }
            if (accept_sym("[")) {
                std::vector<Value> items;
                if (!is_sym("]")) {
                    do items.push_back(datum());
                    while (accept_sym(","));
                }
                expect_sym("]");
                return Value::list(std::move(items));
            }
            break;
        case Token::Kind::End: break;
        }
        fail("a value");
    }

    Value element_of(const Universe& u) {
        const Location loc = peek().loc;
        return canonical(datum(), u, loc);
    }

    // -- theory expressions ----------------------------------------------------

    TheoryPtr theory_spec() {
        const Location loc = peek().loc;
        const std::string name = ident("a theory");
        const bool bang = accept_sym("!");
        auto no_args = [&](TheoryPtr t) {
            if (bang) throw SyntaxError(loc, "unexpected '!'");
            return t;
        };
        if (name == "combine") {
            expect_sym("(");
            TheoryPtr a = theory_spec();
            expect_sym(",");
            TheoryPtr b = theory_spec();
            expect_sym(")");
            return combine(*a, *b, bang);
        }
        if (name == "singlestate" || name == "single_state") {
            expect_sym("(");
            Universe s = universe();
            expect_sym(")");
            return no_args(single_state_theory(s));
        }
        if (name == "state") {
            expect_sym("(");
            Universe l = universe();
            expect_sym(",");
            Universe s = universe();
            expect_sym(")");
            return no_args(state_theory(l, s));
        }
        if (name == "io") {
            expect_sym("(");
            Universe m = universe();
            expect_sym(")");
            return no_args(io_theory(m));
        }
        if (name == "exception") return no_args(exception_theory());
        if (name == "choice") return no_args(choice_theory());
        if (name == "semilattice") return no_args(semilattice_theory());
        if (name == "pointedset" || name == "pointed_set") return no_args(pointed_set_theory());
        if (name == "empty") return no_args(empty_theory());
        if (name == "singleton") return no_args(singleton_theory());
        if (name == "group") return no_args(group_theory());
        throw SyntaxError(loc, "unknown theory " + name);
    }

    // -- theory files ----------------------------------------------------------

    TheoryPtr theory_file() {
        auto theory = std::make_shared<Theory>();
        expect_word("theory");
        theory->name = ident("a theory name");
        expect_sym("{");
        while (!accept_sym("}")) {
            if (accept_word("op")) {
                const Location loc = peek().loc;
                OpDecl d;
                d.name = ident("an operation name");
                if (theory->find(d.name)) throw SyntaxError(loc, "duplicate operation " + d.name);
                expect_sym(":");
                d.param = universe();
                expect_sym("~>");
                d.arity = universe();
                expect_sym(";");
                theory->ops.push_back(std::move(d));
            } else if (accept_word("equation")) {
                const Location loc = peek().loc;
                Equation e;
                e.name = dashed_ident("an equation name");
                if (theory->equation(e.name)) throw SyntaxError(loc, "duplicate equation " + e.name);
                std::string binder = "p";
                e.param_universe = Universe::unit();
                if (accept_word("forall")) {
                    if (peek().kind == Token::Kind::Ident && is_sym(":", 1)) {
                        binder = next().text;
                        next();
                    }
                    e.param_universe = universe();
                }
                expect_sym("(");
                e.context = universe();
                expect_sym(")");
                expect_sym(":");
                TreeFn lhs = tree(*theory, e.context);
                expect_sym("=");
                TreeFn rhs = tree(*theory, e.context);
                expect_sym(";");
                e.lhs = [lhs, binder](const Value& p) { return lhs(Bindings{{binder, p}}); };
                e.rhs = [rhs, binder](const Value& p) { return rhs(Bindings{{binder, p}}); };
                theory->eqs.push_back(std::move(e));
            } else {
                fail("'op', 'equation' or '}'");
            }
        }
        finish();
        check_well_formed(*theory);
        return theory;
    }

    TreeFn tree(const Theory& theory, const Universe& context) {
        const Location loc = peek().loc;
        if (accept_sym("(")) {
            TreeFn t = tree(theory, context);
            expect_sym(")");
            return t;
        }
        if (accept_word("return")) {
            ValueFn v = tvalue();
            return [v, context, loc](const Bindings& b) { return Tree::leaf(canonical(v(b), context, loc)); };
        }
        if (accept_word("if")) {
            ValueFn c = tvalue();
            expect_word("then");
            TreeFn t1 = tree(theory, context);
            expect_word("else");
            TreeFn t2 = tree(theory, context);
            return [c, t1, t2](const Bindings& b) { return c(b).as_bool() ? t1(b) : t2(b); };
        }
        const std::string name = ident("a tree");
        const OpDecl* decl = theory.find(name);
        if (!decl) throw SyntaxError(loc, "unknown operation " + name);
        const OpDecl op = *decl;
        expect_sym("(");
        ValueFn param = [](const Bindings&) { return Value::unit(); };
        if (!is_sym(";") && !is_sym(")")) param = tvalue();
        const Location kloc = peek().loc;
        std::function<Tree(const Bindings&, const Value&)> child;
        if (accept_sym(";")) {
            if (accept_sym("\\")) {
                const std::string a = ident("a binder");
                expect_sym(".");
                TreeFn body = tree(theory, context);
                child = [body, a](const Bindings& b, const Value& x) {
                    Bindings inner = b;
                    inner[a] = x;
                    return body(inner);
                };
            } else {
                expect_sym("{");
                std::vector<TreeFn> branches;
                if (!is_sym("}")) {
                    do branches.push_back(tree(theory, context));
                    while (accept_sym(","));
                }
                expect_sym("}");
                if (branches.size() != op.arity.size()) {
                    throw SyntaxError(kloc, name + " expects " + std::to_string(op.arity.size()) + " branches, found " +
                                                std::to_string(branches.size()));
                }
                const Universe arity = op.arity;
                child = [branches, arity](const Bindings& b, const Value& x) {
                    return branches[*arity.index_of(x)](b);
                };
            }
        } else {
            child = [](const Bindings&, const Value& x) { return Tree::leaf(x); };
        }
        expect_sym(")");
        return [op, param, child, loc](const Bindings& b) {
            const Value p = canonical(param(b), op.param, loc);
            std::vector<Tree> kont;
            for (const auto& a : op.arity.enumerate()) kont.push_back(child(b, a));
            return Tree::node(op.name, p, op.arity, std::move(kont));
        };
    }

    ValueFn tvalue() {
        ValueFn v = tatom();
        while (accept_sym("+")) {
            ValueFn r = tatom();
            v = [v, r](const Bindings& b) { return add_values(v(b), r(b)); };
        }
        return v;
    }

    ValueFn tatom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            const Value v = Value::integer(next().number);
            return [v](const Bindings&) { return v; };
        }
        if (t.kind == Token::Kind::Str) {
            const Value v = Value::label(next().text);
            return [v](const Bindings&) { return v; };
        }
        if (accept_sym("(")) {
            if (accept_sym(")")) return [](const Bindings&) { return Value::unit(); };
            ValueFn first = tvalue();
            if (accept_sym(",")) {
                ValueFn second = tvalue();
                expect_sym(")");
                return [first, second](const Bindings& b) { return Value::pair(first(b), second(b)); };
            }
            expect_sym(")");
            return first;
        }
        if (accept_word("true")) return [](const Bindings&) { return Value::boolean(true); };
        if (accept_word("false")) return [](const Bindings&) { return Value::boolean(false); };
        const std::string name = ident("a value");
        if (name == "fst" || name == "snd" || name == "not") {
            ValueFn arg = tatom();
            if (name == "fst") return [arg](const Bindings& b) { return arg(b).first(); };
            if (name == "snd") return [arg](const Bindings& b) { return arg(b).second(); };
            return [arg](const Bindings& b) { return Value::boolean(!arg(b).as_bool()); };
        }
        // Bound names are parameters or binders; anything else is a label.
        return [name](const Bindings& b) {
            auto it = b.find(name);
            return it != b.end() ? it->second : Value::label(name);
        };
    }

    // -- model and comodel files ----------------------------------------------

    void theory_header(const TheoryPtr& theory) {
        if (!accept_sym(":")) return;
        const Location loc = peek().loc;
        const std::string name = dashed_ident("a theory name");
        if (!same_theory_name(name, theory->name)) {
            throw Error(ErrorKind::TheoryMismatch, "declared theory " + name + " at " + loc.to_string() +
                                                      " does not match " + theory->name);
        }
    }

    const OpDecl& op_ref(const TheoryPtr& theory) {
        const Location loc = peek().loc;
        const std::string name = ident("an operation name");
        if (const OpDecl* d = theory->find(name)) return *d;
        throw Error(ErrorKind::UnknownOperation, "unknown operation " + name + " at " + loc.to_string());
    }

    FiniteModel model_file(const TheoryPtr& theory) {
        expect_word("model");
        ident("a model name");
        theory_header(theory);
        expect_word("carrier");
        const Universe carrier = universe();
        std::map<std::string, OperationTable> tables;
        expect_sym("{");
        while (!accept_sym("}")) {
            const Location loc = peek().loc;
            const OpDecl& op = op_ref(theory);
            TableKey key;
            key.param = element_of(op.param);
            if (accept_sym("[")) {
                if (!is_sym("]")) {
                    do key.args.push_back(element_of(carrier));
                    while (accept_sym(","));
                }
                expect_sym("]");
            }
            if (key.args.size() != op.arity.size()) {
                throw SyntaxError(loc, op.name + " takes " + std::to_string(op.arity.size()) + " arguments, found " +
                                           std::to_string(key.args.size()));
            }
            expect_sym("->");
            const Value result = element_of(carrier);
            expect_sym(";");
            if (!tables[op.name].emplace(std::move(key), result).second) {
                throw SyntaxError(loc, "duplicate entry for " + op.name);
            }
        }
        finish();
        return model_from_tables(theory, carrier, tables);
    }

    Cointerpretation comodel_file(const TheoryPtr& theory) {
        expect_word("comodel");
        ident("a comodel name");
        theory_header(theory);
        expect_word("world");
        const Universe world = universe();
        using Table = std::map<std::pair<Value, Value>, std::pair<Value, Value>>;
        std::map<std::string, Table> tables;
        expect_sym("{");
        while (!accept_sym("}")) {
            const Location loc = peek().loc;
            const OpDecl& op = op_ref(theory);
            Value p = element_of(op.param);
            expect_sym("@");
            Value w = element_of(world);
            expect_sym("->");
            Value a = element_of(op.arity);
            expect_sym("@");
            Value w2 = element_of(world);
            expect_sym(";");
            if (!tables[op.name].emplace(std::pair{p, w}, std::pair{a, w2}).second) {
                throw SyntaxError(loc, "duplicate entry for " + op.name);
            }
        }
        finish();
        std::map<std::string, Cooperation, std::less<>> coops;
        for (auto& [name, table] : tables) {
            auto shared = std::make_shared<const Table>(std::move(table));
            coops[name] = [shared, name = name](const Value& p, const Value& w) {
                auto it = shared->find({p, w});
                if (it == shared->end()) {
                    throw Error(ErrorKind::InvalidCooperation,
                                "no entry for " + name + " " + p.to_string() + " @ " + w.to_string());
                }
                return it->second;
            };
        }
        return make_cointerpretation(theory, world, std::move(coops));
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

CompPtr parse_program(std::string_view text) {
    Parser p(text);
    CompPtr c = p.seq();
    p.finish();
    return c;
}

ValPtr parse_value(std::string_view text) {
    Parser p(text);
    ValPtr v = p.value();
    p.finish();
    return v;
}

Universe parse_universe(std::string_view text) {
    Parser p(text);
    Universe u = p.universe();
    p.finish();
    return u;
}

Value parse_element(std::string_view text, const Universe& u) {
    Parser p(text);
    Value v = p.element_of(u);
    p.finish();
    return v;
}

std::vector<Value> parse_elements(std::string_view text, const Universe& u) {
    Parser p(text);
    std::vector<Value> out;
    if (!p.at_end()) {
        do out.push_back(p.element_of(u));
        while (p.accept_sym(","));
    }
    p.finish();
    return out;
}

TheoryPtr parse_theory_spec(std::string_view text) {
    Parser p(text);
    TheoryPtr t = p.theory_spec();
    p.finish();
    return t;
}

TheoryPtr parse_theory_file(std::string_view text) { return Parser(text).theory_file(); }

FiniteModel parse_model_file(std::string_view text, const TheoryPtr& theory) {
    return Parser(text).model_file(theory);
}

Cointerpretation parse_comodel_file(std::string_view text, const TheoryPtr& theory) {
    return Parser(text).comodel_file(theory);
}

}  // namespace algeff::cli
