#include "algeff/free.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "algeff/errors.hpp"

namespace algeff {

FreeElement eta(TheoryPtr theory, const Value& x) { return {std::move(theory), Tree::leaf(x)}; }

Tree lift(const std::function<Tree(const Value&)>& phi, const Tree& t) { return substitute(t, phi); }

FreeElement lift(const Kleisli& phi, const FreeElement& t) {
    return {t.theory, substitute(t.tree, [&](const Value& x) { return phi(x).tree; })};
}

FreeElement sequence(const FreeElement& t, const Kleisli& h) { return lift(h, t); }

FreeElement generic_op(TheoryPtr theory, const std::string& op, const Value& p) {
    Tree t = make_tree_op(*theory, op, p, [](const Value& a) { return Tree::leaf(a); });
    return {std::move(theory), std::move(t)};
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

// ---- normalizers -----------------------------------------------------------

namespace {

void collect_leaves(const Tree& t, std::set<Value>& out) {
    if (t.is_leaf()) {
        out.insert(t.value());
        return;
    }
    for (const auto& k : t.kont()) collect_leaves(k, out);
}

void require_ops(const Theory& theory, const Tree& t) {
    if (t.is_leaf()) return;
    theory.require(t.op());
    for (const auto& k : t.kont()) require_ops(theory, k);
}

Tree join_set(const OpDecl& join, const std::set<Value>& leaves) {
    auto it = leaves.rbegin();
    Tree out = Tree::leaf(*it);
    for (++it; it != leaves.rend(); ++it) out = binary(join, Value::unit(), Tree::leaf(*it), out);
    return out;
}

}  // namespace

bool has_normalizer(const Theory& theory) {
    return theory.normalizer != NormalizerKind::None || theory.eqs.empty();
}

Tree normalize(const Theory& theory, const Tree& t) {
    require_ops(theory, t);
    switch (theory.normalizer) {
    case NormalizerKind::SingleState:
        return state_normal_form(theory, t).to_tree(theory.ops[0].name, theory.ops[1].name);
    case NormalizerKind::Semilattice: {
        std::set<Value> leaves;
        collect_leaves(t, leaves);
        if (leaves.empty()) return constant(theory.ops[0], Value::unit());
        return join_set(theory.ops[1], leaves);
    }
    case NormalizerKind::Choice: {
        std::set<Value> leaves;
        collect_leaves(t, leaves);
        return join_set(theory.ops[0], leaves);
    }
    case NormalizerKind::Singleton:
        return constant(theory.ops[0], Value::unit());
    case NormalizerKind::None:
        if (theory.eqs.empty()) return t;
        break;
    }
    throw Error(ErrorKind::NoNormalizer, "no normalizer is known for theory " + theory.name);
}

Tree StateNormalForm::to_tree(const std::string& get, const std::string& put) const {
    std::vector<Tree> kont;
    for (const auto& s : states.enumerate()) {
        kont.push_back(Tree::node(put, f.at(s), Universe::unit(), {Tree::leaf(g.at(s))}));
    }
    return Tree::node(get, Value::unit(), states, std::move(kont));
}

StateNormalForm state_normal_form(const Theory& theory, const Tree& t) {
    if (theory.ops.size() < 2) {
        throw Error(ErrorKind::TheoryMismatch, "state normal form needs the single-state signature");
    }
    const OpDecl& get = theory.ops[0];
    const OpDecl& put = theory.ops[1];
    const Universe& S = get.arity;
    if (S.size() == 0) throw Error(ErrorKind::EmptyStateUniverse, "state universe is empty");

    StateNormalForm nf{S, {}, {}};
    for (const auto& s0 : S.enumerate()) {
        Value s = s0;
        const Tree* node = &t;
        while (!node->is_leaf()) {
            if (node->op() == get.name) {
                node = &node->child(s);
            } else if (node->op() == put.name) {
                auto index = S.index_of(node->param());
                if (!index) {
                    throw Error(ErrorKind::ParameterOutOfUniverse,
                                node->param().to_string() + " is not a state in " + S.to_string());
                }
                s = S.element(*index);
                node = &node->child(Value::unit());
            } else {
                throw Error(ErrorKind::UnknownOperation,
                            "operation " + node->op() + " is not part of the single-state signature");
            }
        }
        nf.f.emplace(s0, s);
        nf.g.emplace(s0, node->value());
    }
    return nf;
}

// ---- refutation by finite models -------------------------------------------

namespace {

constexpr std::size_t kModelCandidateLimit = 1u << 14;
constexpr std::size_t kValuationLimit = 1u << 12;

}  // namespace

const std::vector<FiniteModel>& refutation_models(const TheoryPtr& theory) {
    static std::mutex mutex;
    static std::map<TheoryPtr, std::vector<FiniteModel>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(theory);
    if (it != cache.end()) return it->second;
    std::vector<FiniteModel> models;
    for (std::int64_t n : {2, 3}) {
        auto found = enumerate_models(theory, Universe::fin(n), kModelCandidateLimit);
        models.insert(models.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return cache.emplace(theory, std::move(models)).first->second;
}

bool refute_with_models(const std::vector<FiniteModel>& models, const Tree& t1, const Tree& t2) {
    std::set<Value> gens;
    collect_leaves(t1, gens);
    collect_leaves(t2, gens);
    const std::vector<Value> xs(gens.begin(), gens.end());
    for (const auto& m : models) {
        const auto elements = m.carrier->enumerate();
        const std::size_t n = elements.size();
        std::size_t total = 1;
        bool capped = false;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            total *= n;
            if (total > kValuationLimit) {
                capped = true;
                break;
            }
        }
        if (capped) continue;
        std::vector<std::size_t> digits(xs.size(), 0);
        for (std::size_t count = 0; count < total; ++count) {
            Valuation<Value> v;
            for (std::size_t i = 0; i < xs.size(); ++i) v.emplace(xs[i], elements[digits[i]]);
            if (!(interpret_term(m, t1, v) == interpret_term(m, t2, v))) return true;
            for (std::size_t i = xs.size(); i-- > 0;) {
                if (++digits[i] < n) break;
                digits[i] = 0;
            }
        }
    }
    return false;
}

// ---- congruence search -----------------------------------------------------

namespace {

struct Rule {
    Tree pattern;
    Tree replacement;
    std::set<Value> variables;
};

std::vector<Rule> instantiate_rules(const Theory& theory) {
    std::vector<Rule> rules;
    for (const auto& e : theory.eqs) {
        const auto ctx = e.context.enumerate();
        const std::set<Value> context(ctx.begin(), ctx.end());
        for (const auto& p : e.parameters()) {
            Tree l = e.lhs(p);
            Tree r = e.rhs(p);
            std::set<Value> lv, rv;
            collect_leaves(l, lv);
            collect_leaves(r, rv);
            auto covers = [](const std::set<Value>& a, const std::set<Value>& b) {
                return std::includes(a.begin(), a.end(), b.begin(), b.end());
            };
            if (covers(lv, rv)) rules.push_back({l, r, lv});
            if (covers(rv, lv)) rules.push_back({r, l, rv});
        }
    }
    return rules;
}

bool match(const Tree& pattern, const Tree& t, Assignment& binding) {
    if (pattern.is_leaf()) {
        auto [it, inserted] = binding.emplace(pattern.value(), t);
        return inserted || it->second == t;
    }
    if (t.is_leaf() || pattern.op() != t.op() || !(pattern.param() == t.param())) return false;
    if (pattern.kont().size() != t.kont().size()) return false;
    for (std::size_t i = 0; i < t.kont().size(); ++i) {
        if (!match(pattern.kont()[i], t.kont()[i], binding)) return false;
    }
    return true;
}

void neighbours(const std::vector<Rule>& rules, const Tree& t, const std::function<void(Tree)>& emit) {
    for (const auto& rule : rules) {
        Assignment binding;
        if (match(rule.pattern, t, binding)) emit(substitute(rule.replacement, binding));
    }
    if (t.is_leaf()) return;
    for (std::size_t i = 0; i < t.kont().size(); ++i) {
        neighbours(rules, t.kont()[i], [&](Tree sub) {
            std::vector<Tree> kont = t.kont();
            kont[i] = std::move(sub);
            emit(Tree::node(t.op(), t.param(), t.arity(), std::move(kont)));
        });
    }
}

}  // namespace

std::vector<Tree> rewrite_neighbours(const Theory& theory, const Tree& t) {
    const auto rules = instantiate_rules(theory);
    std::vector<Tree> out;
    neighbours(rules, t, [&](Tree n) { out.push_back(std::move(n)); });
    return out;
}

Verdict congruence_search(const Theory& theory, const Tree& t1, const Tree& t2, std::size_t budget,
                          SearchStats* stats) {
    if (t1 == t2) return Verdict::Equal;
    const auto rules = instantiate_rules(theory);

    struct Side {
        std::set<Tree> seen;
        std::deque<Tree> frontier;
    };
    Side sides[2];
    sides[0].seen.insert(t1);
    sides[0].frontier.push_back(t1);
    sides[1].seen.insert(t2);
    sides[1].frontier.push_back(t2);

    std::size_t generated = 0;
    auto finish = [&](Verdict v) {
        if (stats) stats->generated += generated;
        return v;
    };

    while (!sides[0].frontier.empty() || !sides[1].frontier.empty()) {
        // Expand one full level of the smaller nonempty frontier.
        int s = 0;
        if (sides[0].frontier.empty() ||
            (!sides[1].frontier.empty() && sides[1].frontier.size() < sides[0].frontier.size())) {
            s = 1;
        }
        Side& mine = sides[s];
        const Side& other = sides[1 - s];
        std::deque<Tree> next;
        bool met = false;
        bool exhausted = false;
        while (!mine.frontier.empty() && !met && !exhausted) {
            Tree current = std::move(mine.frontier.front());
            mine.frontier.pop_front();
            neighbours(rules, current, [&](Tree n) {
                if (met || exhausted) return;
                if (generated >= budget) {
                    exhausted = true;
                    return;
                }
                ++generated;
                if (other.seen.count(n)) {
                    met = true;
                    return;
                }
                if (mine.seen.insert(n).second) next.push_back(std::move(n));
            });
        }
        if (met) return finish(Verdict::Equal);
        if (exhausted) return finish(Verdict::Unknown);
        mine.frontier = std::move(next);
    }
    return finish(Verdict::Unknown);
}

Verdict tree_equal_modulo(const TheoryPtr& theory, const Tree& t1, const Tree& t2, std::size_t budget,
                          SearchStats* stats) {
    if (t1 == t2) return Verdict::Equal;
    if (has_normalizer(*theory)) {
        return normalize(*theory, t1) == normalize(*theory, t2) ? Verdict::Equal : Verdict::Distinct;
    }
    if (refute_with_models(refutation_models(theory), t1, t2)) {
        if (stats) stats->refuted_by_model = true;
        return Verdict::Distinct;
    }
    return congruence_search(*theory, t1, t2, budget, stats);
}

}  // namespace algeff
