#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "algeff/errors.hpp"
#include "algeff/theory.hpp"
#include "algeff/tree.hpp"

namespace algeff {

/// An interpretation of a signature over an arbitrary carrier type.
/// Arguments arrive in the arity's enumeration order.
template <class Carrier>
struct Interpretation {
    using Operation = std::function<Carrier(const Value& param, std::span<const Carrier> args)>;

    TheoryPtr theory;
    std::map<std::string, Operation, std::less<>> ops;
    /// Present when the carrier is a finite universe; validation needs it.
    std::optional<Universe> carrier;
};

/// Finite set-theoretic model: carrier elements are universe values.
using FiniteModel = Interpretation<Value>;

template <class Carrier>
using Valuation = std::map<Value, Carrier>;

template <class Carrier>
Carrier interpret_term(const Interpretation<Carrier>& m, const Tree& t, const Valuation<Carrier>& v) {
    if (t.is_leaf()) {
        auto it = v.find(t.value());
        if (it == v.end()) {
            throw Error(ErrorKind::UnboundGenerator, "valuation misses generator " + t.value().to_string());
        }
        return it->second;
    }
    auto op = m.ops.find(t.op());
    if (op == m.ops.end()) {
        throw Error(ErrorKind::UnknownOperation, "interpretation has no operation " + t.op());
    }
    std::vector<Carrier> args;
    args.reserve(t.kont().size());
    for (const auto& k : t.kont()) args.push_back(interpret_term(m, k, v));
    return op->second(t.param(), std::span<const Carrier>(args));
}

/// Interpret `t` with the generators of `context` bound positionally to `values`.
template <class Carrier>
Carrier interpret_term(const Interpretation<Carrier>& m, const Universe& context, const Tree& t,
                       const std::vector<Carrier>& values) {
    Valuation<Carrier> v;
    const auto gens = context.enumerate();
    for (std::size_t i = 0; i < gens.size() && i < values.size(); ++i) v.emplace(gens[i], values[i]);
    return interpret_term(m, t, v);
}

struct EquationWitness {
    Value parameter;
    Valuation<Value> valuation;

    std::string to_string() const;
};

struct EquationCheck {
    std::optional<EquationWitness> violation;
    /// Number of (parameter, valuation) pairs examined.
    std::size_t inspected = 0;

    bool valid() const { return !violation.has_value(); }
};

struct ModelCheck {
    std::optional<std::string> equation;
    std::optional<EquationWitness> witness;

    bool valid() const { return !equation.has_value(); }
    std::string to_string() const;
};

EquationCheck validate_equation(const FiniteModel& m, const Equation& e);
ModelCheck validate_model(const FiniteModel& m);

/// Validation needs an enumerable carrier; raw interpretations over other
/// carrier types are rejected with NonEnumerableCarrier.
template <class Carrier>
EquationCheck validate_equation(const Interpretation<Carrier>&, const Equation&)
    requires(!std::is_same_v<Carrier, Value>)
{
    throw Error(ErrorKind::NonEnumerableCarrier, "cannot validate equations over a non-enumerable carrier");
}

template <class Carrier>
ModelCheck validate_model(const Interpretation<Carrier>&)
    requires(!std::is_same_v<Carrier, Value>)
{
    throw Error(ErrorKind::NonEnumerableCarrier, "cannot validate equations over a non-enumerable carrier");
}

/// Builds a finite model and checks that every operation is present and
/// total (lands in the carrier) by enumeration. Throws InvalidModel.
FiniteModel make_model(TheoryPtr theory, Universe carrier,
                       std::map<std::string, FiniteModel::Operation, std::less<>> ops);

/// Key of a table entry: parameter and arguments in arity order.
struct TableKey {
    Value param;
    std::vector<Value> args;

    friend auto operator<=>(const TableKey&, const TableKey&) = default;
    friend bool operator==(const TableKey&, const TableKey&) = default;
};
using OperationTable = std::map<TableKey, Value>;

/// Model given by explicit tables, one per operation. Missing entries are
/// reported as InvalidModel.
FiniteModel model_from_tables(TheoryPtr theory, Universe carrier,
                              const std::map<std::string, OperationTable>& tables);

/// The one-element model; it validates every theory.
FiniteModel trivial_model(TheoryPtr theory);

/// Carrier `|L| * |M|` with coordinatewise operations. Throws TheoryMismatch.
FiniteModel product_model(const FiniteModel& l, const FiniteModel& m);

struct HomWitness {
    std::string op;
    Value param;
    std::vector<Value> args;
};

struct HomCheck {
    std::optional<HomWitness> violation;
    bool holds() const { return !violation.has_value(); }
};

using CarrierMap = std::map<Value, Value>;

HomCheck is_homomorphism(const CarrierMap& phi, const FiniteModel& l, const FiniteModel& m);

/// Every model of `theory` on `carrier`, found by enumerating all operation
/// tables. Returns nothing when the number of candidate interpretations
/// exceeds `candidate_limit`.
std::vector<FiniteModel> enumerate_models(TheoryPtr theory, const Universe& carrier,
                                          std::size_t candidate_limit);

bool same_signature(const Theory& a, const Theory& b);

}  // namespace algeff
