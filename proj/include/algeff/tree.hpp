#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "algeff/universe.hpp"
#include "algeff/value.hpp"

namespace algeff {

/// A well-founded effect tree: either `return x` over a generator value,
/// or an operation node `op(p; k)` whose continuation is stored as one
/// subtree per arity element, in the arity's enumeration order.
class Tree {
public:
    static Tree leaf(Value generator);
    /// Unchecked against any signature; only the continuation length is
    /// validated against the arity. Use make_tree_op for the checked form.
    static Tree node(std::string op, Value param, Universe arity, std::vector<Tree> kont);

    bool is_leaf() const;
    const Value& value() const;

    const std::string& op() const;
    const Value& param() const;
    const Universe& arity() const;
    const std::vector<Tree>& kont() const;
    /// Continuation applied to an arity element.
    const Tree& child(const Value& a) const;

    std::size_t depth() const;
    std::size_t size() const;

    /// Canonical rendering: `return v` or `op(p; {t0, t1, ...})` with the
    /// continuation listed in arity enumeration order.
    std::string to_string() const;

    friend bool operator==(const Tree& a, const Tree& b);
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

using Assignment = std::map<Value, Tree>;

/// Replace every `return x` with sigma(x). Throws UnboundGenerator when a
/// generator occurring in `t` is missing from sigma.
Tree substitute(const Tree& t, const Assignment& sigma);
Tree substitute(const Tree& t, const std::function<Tree(const Value&)>& sigma);

/// Generators occurring in leaves, sorted and deduplicated.
std::vector<Value> generators(const Tree& t);

/// Rename operation symbols; names missing from the map are kept.
Tree rename_ops(const Tree& t, const std::map<std::string, std::string>& renaming);

}  // namespace algeff
