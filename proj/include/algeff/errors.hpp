#pragma once

#include <stdexcept>
#include <string>

namespace algeff {

enum class ErrorKind {
    UnknownOperation,
    ParameterOutOfUniverse,
    IncompleteContinuation,
    UnboundGenerator,
    EmptyStateUniverse,
    NonEnumerableCarrier,
    TheoryMismatch,
    NoNormalizer,
    UncoveredOperation,
    NonEnumerableWorld,
    InvalidCooperation,
    InvalidModel,
    TypeError,
    SyntaxError,
    RuntimeError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (tests, the command line) can dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Location {
    int line = 0;
    int column = 0;

    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(column);
    }
    friend bool operator==(const Location&, const Location&) = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(Location where, const std::string& reason)
        : Error(ErrorKind::SyntaxError,
                "syntax error at " + where.to_string() + ": " + reason),
          where_(where), reason_(reason) {}

    Location where() const { return where_; }
    const std::string& reason() const { return reason_; }

private:
    Location where_;
    std::string reason_;
};

class TypeError : public Error {
public:
    enum class Reason { Mismatch, UnknownOperation, UnboundVariable };

    TypeError(Location where, const std::string& expected, const std::string& found)
        : Error(ErrorKind::TypeError, "type error at " + where.to_string() +
                                          ": expected " + expected + ", found " + found),
          where_(where), reason_(Reason::Mismatch), expected_(expected), found_(found) {}

    TypeError(Location where, Reason reason, const std::string& name)
        : Error(ErrorKind::TypeError,
                "type error at " + where.to_string() + ": " +
                    (reason == Reason::UnboundVariable ? "unbound variable " : "unknown operation ") +
                    name),
          where_(where), reason_(reason), found_(name) {}

    Location where() const { return where_; }
    Reason reason() const { return reason_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    Location where_;
    Reason reason_;
    std::string expected_;
    std::string found_;
};

}  // namespace algeff
