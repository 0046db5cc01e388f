#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algeff/lang/ast.hpp"
#include "algeff/theory.hpp"

namespace algeff::lang {

struct CompType;

/// Resolved value types. `Var` is a type left open by inference; `Int` and
/// `Str` are literal types whose Fin size or enumeration is still open.
struct ValueType {
    enum class Kind { Var, Empty, Unit, Bool, Fin, Enum, Int, Str, Prod, Arrow, Handler };

    Kind kind = Kind::Unit;
    std::int64_t size = 0;            // Fin; Var id
    std::vector<std::string> labels;  // Enum
    std::shared_ptr<const ValueType> left, right;       // Prod; Arrow argument in left
    std::shared_ptr<const CompType> from, to;           // Arrow result in `to`; Handler

    std::string to_string() const;
    /// The finite universe of a first-order type, if any.
    std::optional<Universe> universe() const;
};

struct CompType {
    ValueType value;
    std::set<std::string> dirt;

    std::string to_string() const;
};

ValueType type_of_universe(const Universe& u);

/// Typing environment for free variables of a program.
using TypeContext = std::map<std::string, ValueType>;

struct TypecheckOptions {
    /// Operations the whole computation may perform; defaults to every
    /// operation of the theory.
    std::optional<std::set<std::string>> allowed_dirt;
};

/// Throws TypeError.
CompType typecheck(const Comp& c, const Theory& theory, const TypeContext& ctx = {},
                   const TypecheckOptions& options = {});
ValueType typecheck(const Val& v, const Theory& theory, const TypeContext& ctx = {});

/// Names bound in every initial environment (`fst`, `snd`, `not`).
const std::vector<std::string>& builtin_names();

}  // namespace algeff::lang
