#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algeff/free.hpp"
#include "algeff/theory.hpp"
#include "algeff/tree.hpp"

namespace algeff {

/// (p, w) -> (a, w')
using Cooperation = std::function<std::pair<Value, Value>(const Value& param, const Value& world)>;

/// A world universe with cooperations for some of the theory's operations.
/// Construct through make_cointerpretation, which checks the invariants.
struct Cointerpretation {
    TheoryPtr theory;
    Universe world;
    std::map<std::string, Cooperation, std::less<>> coops;

    bool covers(std::string_view op) const { return coops.find(op) != coops.end(); }
};

/// Throws UnknownOperation for undeclared operations and InvalidCooperation
/// when a cooperation leaves A x W, or is given for an empty arity over a
/// nonempty world.
Cointerpretation make_cointerpretation(TheoryPtr theory, Universe world,
                                       std::map<std::string, Cooperation, std::less<>> coops);

struct RunOutcome {
    enum class Kind { Done, Stuck };
    Kind kind;
    Value value;  // Done: returned generator
    std::string op;  // Stuck: the uncovered operation
    Value param;
    Value world;
    /// Cooperation steps taken.
    std::size_t steps = 0;

    static RunOutcome done(Value v, Value w, std::size_t steps = 0);
    static RunOutcome stuck(std::string op, Value p, Value w, std::size_t steps = 0);

    bool is_done() const { return kind == Kind::Done; }
    std::string to_string() const;
    /// Steps are bookkeeping and do not take part in comparisons.
    friend bool operator==(const RunOutcome& a, const RunOutcome& b);
};

RunOutcome cointerpret_tree(const Value& w0, const Tree& t, const Cointerpretation& c);
RunOutcome tensor_run(const FreeElement& m, const Value& w0, const Cointerpretation& c);

struct ComodelWitness {
    Value parameter;
    Value world;
};

struct ComodelCheck {
    std::optional<std::string> equation;
    std::optional<ComodelWitness> witness;

    bool valid() const { return !equation.has_value(); }
    std::string to_string() const;
};

/// Compares the runs of both sides of every instance from every world.
/// Throws UncoveredOperation when an equation mentions an operation the
/// comodel does not cover.
ComodelCheck validate_comodel(const Cointerpretation& c);
/// The same check restricted to one equation family.
ComodelCheck validate_comodel_equation(const Cointerpretation& c, const Equation& e);

// Built-in comodels.

/// World S, get(w) = (w, w), put(s, w) = ((), s).
Cointerpretation state_comodel(const TheoryPtr& single_state);
/// Like the state comodel but get always answers the first state.
Cointerpretation broken_state_comodel(const TheoryPtr& single_state);
/// World fin 2 read as an alternating stream: choose(w) = (w == 1, 1 - w).
Cointerpretation alternating_choice_comodel(const TheoryPtr& choice);
/// World: transcripts of at most `bound` messages. print appends while
/// there is room and drops the message afterwards; read is not covered.
Cointerpretation transcript_comodel(const TheoryPtr& io, std::size_t bound);
/// World: positions 0..n in a fixed input sequence. read yields the next
/// message and advances; at the end it repeats the last message. print is
/// accepted and ignored.
Cointerpretation input_comodel(const TheoryPtr& io, const std::vector<Value>& input);

}  // namespace algeff
