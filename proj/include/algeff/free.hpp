#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algeff/model.hpp"
#include "algeff/theory.hpp"
#include "algeff/tree.hpp"

namespace algeff {

/// A representative of an element of the free model over the theory.
struct FreeElement {
    TheoryPtr theory;
    Tree tree;
};

FreeElement eta(TheoryPtr theory, const Value& x);

using Kleisli = std::function<FreeElement(const Value&)>;

/// Structural extension of `phi` to trees: leaves are replaced by phi(x),
/// operation nodes are kept.
FreeElement lift(const Kleisli& phi, const FreeElement& t);
Tree lift(const std::function<Tree(const Value&)>& phi, const Tree& t);

/// do x <- t in h(x)
FreeElement sequence(const FreeElement& t, const Kleisli& h);

/// op(p; a -> return a)
FreeElement generic_op(TheoryPtr theory, const std::string& op, const Value& p);

/// Equation-free theories count as normalizable (identity).
bool has_normalizer(const Theory& theory);

/// Canonical representative of the class of `t`. Throws NoNormalizer.
Tree normalize(const Theory& theory, const Tree& t);

/// t ~ get((); s -> put(f(s); _ -> return g(s)))
struct StateNormalForm {
    Universe states;
    std::map<Value, Value> f;
    std::map<Value, Value> g;

    Tree to_tree(const std::string& get = "get", const std::string& put = "put") const;
    friend bool operator==(const StateNormalForm&, const StateNormalForm&) = default;
};

/// `theory` must have the single-state signature (get first, put second).
StateNormalForm state_normal_form(const Theory& theory, const Tree& t);

enum class Verdict { Equal, Distinct, Unknown };
const char* to_string(Verdict v);

constexpr std::size_t kDefaultBudget = 10000;

struct SearchStats {
    /// Candidate trees generated by the congruence search.
    std::size_t generated = 0;
    bool refuted_by_model = false;
};

Verdict tree_equal_modulo(const TheoryPtr& theory, const Tree& t1, const Tree& t2,
                          std::size_t budget = kDefaultBudget, SearchStats* stats = nullptr);

/// Bidirectional breadth-first search over one-step equation rewrites.
/// Returns Equal when the two frontiers meet, Unknown otherwise.
Verdict congruence_search(const Theory& theory, const Tree& t1, const Tree& t2, std::size_t budget,
                          SearchStats* stats = nullptr);

/// Small validating models used to refute equalities (carriers of size 2
/// and, when affordable, 3). Cached per theory.
const std::vector<FiniteModel>& refutation_models(const TheoryPtr& theory);

/// True when some model in `models` tells the two trees apart.
bool refute_with_models(const std::vector<FiniteModel>& models, const Tree& t1, const Tree& t2);

/// All one-step rewrites of `t` by instances of the theory's equations.
std::vector<Tree> rewrite_neighbours(const Theory& theory, const Tree& t);

}  // namespace algeff
