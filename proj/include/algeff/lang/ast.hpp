#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "algeff/errors.hpp"

namespace algeff::lang {

struct Val;
struct Comp;
using ValPtr = std::shared_ptr<const Val>;
using CompPtr = std::shared_ptr<const Comp>;

/// op(x; k) -> body
struct OpClause {
    std::string op;
    std::string param;
    std::string kont;
    CompPtr body;
    Location loc;
};

struct Val {
    enum class Kind { Var, Bool, Unit, Int, Str, Pair, Fun, Handler, Add };

    Kind kind;
    Location loc;
    std::string name;  // Var, Str text, Fun parameter, Handler return binder
    bool flag = false;
    std::int64_t number = 0;
    ValPtr left;  // Pair, Add
    ValPtr right;
    CompPtr body;  // Fun body, Handler return clause
    std::vector<OpClause> clauses;

    static ValPtr var(std::string name, Location loc = {});
    static ValPtr boolean(bool b, Location loc = {});
    static ValPtr unit(Location loc = {});
    static ValPtr integer(std::int64_t n, Location loc = {});
    static ValPtr str(std::string text, Location loc = {});
    static ValPtr pair(ValPtr l, ValPtr r, Location loc = {});
    static ValPtr fun(std::string param, CompPtr body, Location loc = {});
    static ValPtr handler(std::string binder, CompPtr ret, std::vector<OpClause> clauses, Location loc = {});
    static ValPtr add(ValPtr l, ValPtr r, Location loc = {});
};

struct Comp {
    enum class Kind { Return, Op, Do, If, App, Handle };

    Kind kind;
    Location loc;
    std::string name;  // Op name, Do binder
    ValPtr value;      // Return, Op argument, If condition, App function, Handle handler
    ValPtr arg;        // App argument
    CompPtr first;     // Do bound computation, If then-branch, Handle body
    CompPtr second;    // Do body, If else-branch

    static CompPtr ret(ValPtr v, Location loc = {});
    static CompPtr op(std::string name, ValPtr v, Location loc = {});
    static CompPtr bind(std::string x, CompPtr c1, CompPtr c2, Location loc = {});
    static CompPtr cond(ValPtr v, CompPtr c1, CompPtr c2, Location loc = {});
    static CompPtr app(ValPtr f, ValPtr a, Location loc = {});
    static CompPtr handle(ValPtr h, CompPtr c, Location loc = {});
};

/// Concrete syntax that parses back to the same tree.
std::string print(const Comp& c);
std::string print(const Val& v);

/// Structural equality, ignoring locations.
bool same(const Comp& a, const Comp& b);
bool same(const Val& a, const Val& b);

}  // namespace algeff::lang
