#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "algeff/tree.hpp"
#include "algeff/universe.hpp"

namespace algeff {

/// `name : param ~> arity`
struct OpDecl {
    std::string name;
    Universe param;
    Universe arity;

    friend bool operator==(const OpDecl&, const OpDecl&) = default;
};

/// A family of equations `context | lhs(p) = rhs(p)` indexed by the
/// parameter universe. Generic continuations are encoded by choosing the
/// context as the product of the continuation's argument universes.
struct Equation {
    std::string name;
    Universe param_universe;
    Universe context;
    std::function<Tree(const Value&)> lhs;
    std::function<Tree(const Value&)> rhs;
    /// Optional restriction of the family to some parameters (for instance
    /// pairs of distinct locations). Empty means every parameter.
    std::function<bool(const Value&)> applies;

    std::vector<Value> parameters() const;
};

/// Which canonical-representative strategy the free module can use.
enum class NormalizerKind { None, SingleState, Semilattice, Choice, Singleton };

struct Rename {
    std::string theory;
    std::string from;
    std::string to;
};

struct Theory {
    std::string name;
    std::vector<OpDecl> ops;
    std::vector<Equation> eqs;
    NormalizerKind normalizer = NormalizerKind::None;
    std::vector<Rename> renames;

    const OpDecl* find(std::string_view op) const;
    /// Throws UnknownOperation.
    const OpDecl& require(std::string_view op) const;
    const Equation* equation(std::string_view name) const;
};

using TheoryPtr = std::shared_ptr<const Theory>;

/// Checked tree formation. Throws UnknownOperation, ParameterOutOfUniverse
/// or IncompleteContinuation.
Tree make_tree_op(const Theory& sig, const std::string& op, const Value& p,
                  const std::map<Value, Tree>& kont);
Tree make_tree_op(const Theory& sig, const std::string& op, const Value& p,
                  const std::function<Tree(const Value&)>& kont);

/// Throws if `t` mentions undeclared operations or out-of-range parameters,
/// or if `context` is given and a leaf lies outside it.
void check_tree(const Theory& sig, const Tree& t, const Universe* context = nullptr);

/// Exhaustive well-formedness check of every equation instance.
void check_well_formed(const Theory& theory);

enum class Builtin {
    State,
    SingleState,
    IO,
    Exception,
    Choice,
    Semilattice,
    PointedSet,
    EmptyTheory,
    SingletonTheory,
    Group,
};

struct BuiltinKey {
    Builtin kind;
    Universe locations = Universe::unit();  // State
    Universe states = Universe::unit();     // State, SingleState, IO
};

TheoryPtr builtin_theory(const BuiltinKey& key);

TheoryPtr single_state_theory(const Universe& states);
TheoryPtr state_theory(const Universe& locations, const Universe& states);
TheoryPtr io_theory(const Universe& messages);
TheoryPtr exception_theory();
TheoryPtr choice_theory();
TheoryPtr semilattice_theory();
TheoryPtr pointed_set_theory();
TheoryPtr empty_theory();
TheoryPtr singleton_theory();
TheoryPtr group_theory();

/// Adjoin signatures and equations. Colliding operation names are suffixed
/// with the theory name (or `_1`/`_2` when the theory names coincide too).
/// With `distribute`, every operation of `t1` is made to commute with every
/// operation of `t2`.
TheoryPtr combine(const Theory& t1, const Theory& t2, bool distribute);

/// Builder used by the built-in theories and tests:
/// op(p; a -> k(a)) for a declared operation.
Tree call(const OpDecl& op, const Value& p, const std::function<Tree(const Value&)>& k);
/// The binary-operation form op(p; {left, right}) over a bool arity.
Tree binary(const OpDecl& op, const Value& p, Tree left, Tree right);
/// The nullary-operation form over an empty arity.
Tree constant(const OpDecl& op, const Value& p);

}  // namespace algeff
