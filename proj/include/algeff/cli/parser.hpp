#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algeff/comodel.hpp"
#include "algeff/lang/ast.hpp"
#include "algeff/model.hpp"
#include "algeff/theory.hpp"

namespace algeff::cli {

// Every parser throws SyntaxError with a line:column location. Parsers of
// files that refer to a theory also throw the library errors raised while
// checking them against it.

/// comp, with `c1; c2` as sugar for `do _ <- c1 in c2`.
lang::CompPtr parse_program(std::string_view text);
lang::ValPtr parse_value(std::string_view text);

/// `empty | unit | bool | fin n | enum {a, "b c"} | seq(U, k) | U * U`
Universe parse_universe(std::string_view text);

/// A data literal (`()`, booleans, integers, strings or bare labels, pairs,
/// `[...]` sequences) read as an element of `u`. Throws
/// ParameterOutOfUniverse when it is not one.
Value parse_element(std::string_view text, const Universe& u);

/// A comma-separated, possibly empty list of elements of `u`.
std::vector<Value> parse_elements(std::string_view text, const Universe& u);

/// Built-in theory expressions: `singlestate(U)`, `state(L, S)`, `io(U)`,
/// `exception`, `choice`, `semilattice`, `pointedset`, `empty`,
/// `singleton`, `group`, `combine(t1, t2)`, `combine!(t1, t2)`.
TheoryPtr parse_theory_spec(std::string_view text);

/// `theory <name> { op ...; equation ...; }`
TheoryPtr parse_theory_file(std::string_view text);

/// `model <name> [: <theory>] carrier <U> { <op> <param> [<args>] -> <result>; }`
FiniteModel parse_model_file(std::string_view text, const TheoryPtr& theory);

/// `comodel <name> [: <theory>] world <U> { <op> <param> @ <w> -> <answer> @ <w'>; }`
Cointerpretation parse_comodel_file(std::string_view text, const TheoryPtr& theory);

}  // namespace algeff::cli
