#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algeff/free.hpp"
#include "algeff/lang/ast.hpp"
#include "algeff/lang/types.hpp"

namespace algeff::lang {

/// Runtime objects that can be applied: closures, primitives and handler
/// continuations. Application produces a computation tree.
class Callable : public Opaque {
public:
    virtual Tree apply(const Value& arg) const = 0;
};

struct Env;
using EnvPtr = std::shared_ptr<const Env>;

/// Persistent environment: a linked list of bindings, innermost first.
struct Env {
    std::string name;
    Value value;
    EnvPtr next;
};

EnvPtr extend(EnvPtr env, std::string name, Value value);
/// The primitives `fst`, `snd` and `not`.
EnvPtr initial_env();

Value eval_value(const Val& v, const EnvPtr& env, const TheoryPtr& theory);
Tree eval_comp(const Comp& c, const EnvPtr& env, const TheoryPtr& theory);
FreeElement eval_pure(const Comp& c, const TheoryPtr& theory, const EnvPtr& env = initial_env());

bool is_handler(const Value& v);
/// Deep handling of `t`. Throws RuntimeError when `handler` is not a handler.
Tree handle(const Value& handler, const Tree& t);
/// Throws RuntimeError when `f` cannot be applied.
Tree apply(const Value& f, const Value& arg);

struct HandlerCheck {
    enum class Status { Respected, Violated, Unknown };
    Status status = Status::Respected;
    std::optional<std::string> equation;
    std::optional<Value> parameter;
    /// Operations of the theory without a clause; their equations are skipped.
    std::vector<std::string> uncovered;

    std::string to_string() const;
};

/// Pushes both sides of every equation instance through the handler, with
/// the equation's generators as probe leaves, and compares the outcomes
/// modulo the theory. Results that are functions over a finite domain are
/// compared through their applications. `output` is the handler's result
/// value type.
HandlerCheck check_handler_equations(const Value& handler, const ValueType& output, const TheoryPtr& theory,
                                     std::size_t budget = kDefaultBudget);
/// Typechecks and evaluates `expr` first. Throws TypeError.
HandlerCheck check_handler_equations(const Val& expr, const TheoryPtr& theory,
                                     std::size_t budget = kDefaultBudget);

}  // namespace algeff::lang
