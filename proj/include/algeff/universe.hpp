#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algeff/value.hpp"

namespace algeff {

/// A finite, enumerable set of values used as an arity, a parameter set,
/// a model carrier or a comodel world. Enumeration order is canonical and
/// doubles as the indexing scheme for continuations.
class Universe {
public:
    enum class Shape { Empty, Unit, Bool, Fin, Enum, Product, Seq };

    Universe();  // unit

    static Universe empty();
    static Universe unit();
    static Universe boolean();
    static Universe fin(std::int64_t n);
    static Universe enumeration(std::vector<std::string> labels);
    static Universe product(Universe left, Universe right);
    /// All sequences over `element` of length at most `max_length`,
    /// ordered by length and then lexicographically.
    static Universe sequences(Universe element, std::size_t max_length);

    Shape shape() const;
    std::size_t size() const;

    std::vector<Value> enumerate() const;
    Value element(std::size_t index) const;
    std::optional<std::size_t> index_of(const Value& v) const;
    bool contains(const Value& v) const { return index_of(v).has_value(); }

    std::int64_t fin_size() const;
    const std::vector<std::string>& labels() const;
    const Universe& left() const;
    const Universe& right() const;
    const Universe& element_universe() const;
    std::size_t max_length() const;

    std::string to_string() const;

    friend bool operator==(const Universe& a, const Universe& b);

private:
    struct Node;
    explicit Universe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace algeff
