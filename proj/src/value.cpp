#include "algeff/value.hpp"

#include <atomic>
#include <stdexcept>

#include "algeff/errors.hpp"

namespace algeff {

namespace {
std::atomic<std::uint64_t> next_serial{1};

[[noreturn]] void wrong_kind(const char* wanted, const Value& v) {
    throw Error(ErrorKind::RuntimeError,
                std::string("expected a ") + wanted + " value, got " + v.to_string());
}
}  // namespace

Opaque::Opaque() : serial_(next_serial.fetch_add(1)) {}

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownOperation: return "UnknownOperation";
    case ErrorKind::ParameterOutOfUniverse: return "ParameterOutOfUniverse";
    case ErrorKind::IncompleteContinuation: return "IncompleteContinuation";
    case ErrorKind::UnboundGenerator: return "UnboundGenerator";
    case ErrorKind::EmptyStateUniverse: return "EmptyStateUniverse";
    case ErrorKind::NonEnumerableCarrier: return "NonEnumerableCarrier";
    case ErrorKind::TheoryMismatch: return "TheoryMismatch";
    case ErrorKind::NoNormalizer: return "NoNormalizer";
    case ErrorKind::UncoveredOperation: return "UncoveredOperation";
    case ErrorKind::NonEnumerableWorld: return "NonEnumerableWorld";
    case ErrorKind::InvalidCooperation: return "InvalidCooperation";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::RuntimeError: return "RuntimeError";
    }
    return "Error";
}

Value::Value() : rep_(UnitRep{}) {}

Value Value::unit() { return Value(UnitRep{}); }
Value Value::boolean(bool b) { return Value(Rep(std::in_place_type<bool>, b)); }
Value Value::integer(std::int64_t v, std::int64_t modulus) { return Value(IntRep{v, modulus}); }
Value Value::label(std::string name) { return Value(Rep(std::in_place_type<std::string>, std::move(name))); }

Value Value::pair(Value first, Value second) {
    return Value(std::make_shared<const std::pair<Value, Value>>(std::move(first), std::move(second)));
}

Value Value::list(std::vector<Value> items) {
    return Value(std::make_shared<const std::vector<Value>>(std::move(items)));
}

Value Value::opaque(std::shared_ptr<const Opaque> object) { return Value(std::move(object)); }

Value::Kind Value::kind() const { return static_cast<Kind>(rep_.index()); }

bool Value::as_bool() const {
    if (auto* b = std::get_if<bool>(&rep_)) return *b;
    wrong_kind("boolean", *this);
}

std::int64_t Value::as_int() const {
    if (auto* i = std::get_if<IntRep>(&rep_)) return i->value;
    wrong_kind("integer", *this);
}

std::int64_t Value::modulus() const {
    if (auto* i = std::get_if<IntRep>(&rep_)) return i->modulus;
    wrong_kind("integer", *this);
}

const std::string& Value::as_label() const {
    if (auto* s = std::get_if<std::string>(&rep_)) return *s;
    wrong_kind("label", *this);
}

const Value& Value::first() const {
    if (auto* p = std::get_if<PairRep>(&rep_)) return (*p)->first;
    wrong_kind("pair", *this);
}

const Value& Value::second() const {
    if (auto* p = std::get_if<PairRep>(&rep_)) return (*p)->second;
    wrong_kind("pair", *this);
}

const std::vector<Value>& Value::items() const {
    if (auto* l = std::get_if<ListRep>(&rep_)) return **l;
    wrong_kind("list", *this);
}

const std::shared_ptr<const Opaque>& Value::as_opaque() const {
    if (auto* o = std::get_if<OpaqueRep>(&rep_)) return *o;
    wrong_kind("function or handler", *this);
}

std::string quote_label(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string Value::to_string() const {
    switch (kind()) {
    case Kind::Unit: return "()";
    case Kind::Bool: return as_bool() ? "true" : "false";
    case Kind::Int: return std::to_string(as_int());
    case Kind::Label: return quote_label(as_label());
    case Kind::Pair: return "(" + first().to_string() + ", " + second().to_string() + ")";
    case Kind::List: {
        std::string out = "[";
        const auto& xs = items();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ", ";
            out += xs[i].to_string();
        }
        return out + "]";
    }
    case Kind::Opaque: return as_opaque()->describe();
    }
    return "?";
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.rep_.index() != b.rep_.index()) return a.rep_.index() <=> b.rep_.index();
    switch (a.kind()) {
    case Value::Kind::Unit: return std::strong_ordering::equal;
    case Value::Kind::Bool: return a.as_bool() <=> b.as_bool();
    case Value::Kind::Int: return a.as_int() <=> b.as_int();
    case Value::Kind::Label: return a.as_label().compare(b.as_label()) <=> 0;
    case Value::Kind::Pair: {
        if (auto c = a.first() <=> b.first(); c != 0) return c;
        return a.second() <=> b.second();
    }
    case Value::Kind::List: {
        const auto& xs = a.items();
        const auto& ys = b.items();
        for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
            if (auto c = xs[i] <=> ys[i]; c != 0) return c;
        }
        return xs.size() <=> ys.size();
    }
    case Value::Kind::Opaque: return a.as_opaque()->serial() <=> b.as_opaque()->serial();
    }
    return std::strong_ordering::equal;
}

bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

}  // namespace algeff
