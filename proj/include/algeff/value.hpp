#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace algeff {

/// Runtime objects that may sit inside a value without being data:
/// closures, handler closures, continuations, primitive functions.
/// They compare by identity; the serial number gives a deterministic order.
class Opaque {
public:
    Opaque();
    virtual ~Opaque() = default;

    virtual std::string describe() const = 0;
    std::uint64_t serial() const { return serial_; }

private:
    std::uint64_t serial_;
};

/// An immutable value: elements of finite universes (unit, booleans,
/// bounded integers, enumeration labels, pairs, bounded sequences) plus
/// opaque runtime objects produced by the evaluator.
class Value {
public:
    enum class Kind { Unit, Bool, Int, Label, Pair, List, Opaque };

    Value();

    static Value unit();
    static Value boolean(bool b);
    /// `modulus` is the size of the Fin universe the integer came from,
    /// or 0 for an integer literal of unknown range. It only drives
    /// wrap-around arithmetic and never takes part in comparisons.
    static Value integer(std::int64_t v, std::int64_t modulus = 0);
    static Value label(std::string name);
    static Value pair(Value first, Value second);
    static Value list(std::vector<Value> items);
    static Value opaque(std::shared_ptr<const Opaque> object);

    Kind kind() const;

    bool as_bool() const;
    std::int64_t as_int() const;
    std::int64_t modulus() const;
    const std::string& as_label() const;
    const Value& first() const;
    const Value& second() const;
    const std::vector<Value>& items() const;
    const std::shared_ptr<const Opaque>& as_opaque() const;

    std::string to_string() const;

    friend bool operator==(const Value& a, const Value& b);
    friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
    struct UnitRep {};
    struct IntRep {
        std::int64_t value;
        std::int64_t modulus;
    };
    using PairRep = std::shared_ptr<const std::pair<Value, Value>>;
    using ListRep = std::shared_ptr<const std::vector<Value>>;
    using OpaqueRep = std::shared_ptr<const Opaque>;

    using Rep = std::variant<UnitRep, bool, IntRep, std::string, PairRep, ListRep, OpaqueRep>;

    explicit Value(Rep rep) : rep_(std::move(rep)) {}

    Rep rep_;
};

/// Quote a label the way values are rendered: `"text"` with `\"` and `\\` escaped.
std::string quote_label(const std::string& text);

}  // namespace algeff
