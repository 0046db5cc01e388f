#include "algeff/model.hpp"

#include <cmath>
#include <limits>

namespace algeff {

namespace {

/// All tuples over `carrier` of length `k`, first position most significant.
class TupleCounter {
public:
    TupleCounter(std::size_t base, std::size_t length) : base_(base), digits_(length, 0) {}

    bool empty_space() const { return base_ == 0 && !digits_.empty(); }
    const std::vector<std::size_t>& digits() const { return digits_; }

    bool next() {
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (++digits_[i] < base_) return true;
            digits_[i] = 0;
        }
        return false;
    }

private:
    std::size_t base_;
    std::vector<std::size_t> digits_;
};

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
            return std::numeric_limits<std::size_t>::max();
        }
        out *= base;
    }
    return out;
}

std::string render_valuation(const Valuation<Value>& v) {
    std::string out = "{";
    bool first = true;
    for (const auto& [g, c] : v) {
        if (!first) out += ", ";
        first = false;
        out += (g.kind() == Value::Kind::Label ? g.as_label() : g.to_string()) + " = " + c.to_string();
    }
    return out + "}";
}

}  // namespace

std::string EquationWitness::to_string() const {
    return "param = " + parameter.to_string() + ", valuation = " + render_valuation(valuation);
}

std::string ModelCheck::to_string() const {
    if (valid()) return "Valid";
    return "Violated " + *equation + ": " + witness->to_string();
}

bool same_signature(const Theory& a, const Theory& b) { return &a == &b || (a.name == b.name && a.ops == b.ops); }

EquationCheck validate_equation(const FiniteModel& m, const Equation& e) {
    if (!m.carrier) {
        throw Error(ErrorKind::NonEnumerableCarrier, "model carrier is not enumerable");
    }
    const auto elements = m.carrier->enumerate();
    const auto gens = e.context.enumerate();
    EquationCheck result;
    for (const auto& p : e.parameters()) {
        const Tree lhs = e.lhs(p);
        const Tree rhs = e.rhs(p);
        TupleCounter tuple(elements.size(), gens.size());
        if (tuple.empty_space()) continue;
        do {
            Valuation<Value> v;
            for (std::size_t i = 0; i < gens.size(); ++i) v.emplace(gens[i], elements[tuple.digits()[i]]);
            ++result.inspected;
            if (!(interpret_term(m, lhs, v) == interpret_term(m, rhs, v))) {
                result.violation = EquationWitness{p, std::move(v)};
                return result;
            }
        } while (tuple.next());
    }
    return result;
}

ModelCheck validate_model(const FiniteModel& m) {
    for (const auto& e : m.theory->eqs) {
        auto check = validate_equation(m, e);
        if (!check.valid()) return ModelCheck{e.name, check.violation};
    }
    return {};
}

FiniteModel make_model(TheoryPtr theory, Universe carrier,
                       std::map<std::string, FiniteModel::Operation, std::less<>> ops) {
    for (const auto& d : theory->ops) {
        auto it = ops.find(d.name);
        if (it == ops.end()) {
            throw Error(ErrorKind::InvalidModel, "model does not interpret operation " + d.name);
        }
        const auto elements = carrier.enumerate();
        const std::size_t k = d.arity.size();
        for (const auto& p : d.param.enumerate()) {
            TupleCounter tuple(elements.size(), k);
            if (tuple.empty_space()) continue;
            do {
                std::vector<Value> args;
                for (auto i : tuple.digits()) args.push_back(elements[i]);
                Value r = it->second(p, std::span<const Value>(args));
                if (!carrier.contains(r)) {
                    throw Error(ErrorKind::InvalidModel, "operation " + d.name + " leaves the carrier at " +
                                                             p.to_string() + ": " + r.to_string());
                }
            } while (tuple.next());
        }
    }
    for (const auto& [name, fn] : ops) {
        if (!theory->find(name)) {
            throw Error(ErrorKind::UnknownOperation, "model interprets undeclared operation " + name);
        }
    }
    return FiniteModel{std::move(theory), std::move(ops), std::move(carrier)};
}

FiniteModel model_from_tables(TheoryPtr theory, Universe carrier,
                              const std::map<std::string, OperationTable>& tables) {
    std::map<std::string, FiniteModel::Operation, std::less<>> ops;
    for (const auto& [name, table] : tables) {
        ops[name] = [name = name, table = table](const Value& p, std::span<const Value> args) {
            auto it = table.find(TableKey{p, {args.begin(), args.end()}});
            if (it == table.end()) {
                std::string rendered;
                for (const auto& a : args) rendered += " " + a.to_string();
                throw Error(ErrorKind::InvalidModel,
                            "table for " + name + " has no entry for " + p.to_string() + " [" + rendered + " ]");
            }
            return it->second;
        };
    }
    return make_model(std::move(theory), std::move(carrier), std::move(ops));
}

FiniteModel trivial_model(TheoryPtr theory) {
    std::map<std::string, FiniteModel::Operation, std::less<>> ops;
    for (const auto& d : theory->ops) {
        ops[d.name] = [](const Value&, std::span<const Value>) { return Value::unit(); };
    }
    return make_model(std::move(theory), Universe::unit(), std::move(ops));
}

FiniteModel product_model(const FiniteModel& l, const FiniteModel& m) {
    if (!same_signature(*l.theory, *m.theory)) {
        throw Error(ErrorKind::TheoryMismatch,
                    "cannot multiply models of " + l.theory->name + " and " + m.theory->name);
    }
    if (!l.carrier || !m.carrier) {
        throw Error(ErrorKind::NonEnumerableCarrier, "product of models needs enumerable carriers");
    }
    std::map<std::string, FiniteModel::Operation, std::less<>> ops;
    for (const auto& d : l.theory->ops) {
        auto lf = l.ops.at(d.name);
        auto mf = m.ops.at(d.name);
        ops[d.name] = [lf, mf](const Value& p, std::span<const Value> args) {
            std::vector<Value> left, right;
            for (const auto& a : args) {
                left.push_back(a.first());
                right.push_back(a.second());
            }
            return Value::pair(lf(p, std::span<const Value>(left)), mf(p, std::span<const Value>(right)));
        };
    }
    return FiniteModel{l.theory, std::move(ops), Universe::product(*l.carrier, *m.carrier)};
}

HomCheck is_homomorphism(const CarrierMap& phi, const FiniteModel& l, const FiniteModel& m) {
    if (!same_signature(*l.theory, *m.theory)) {
        throw Error(ErrorKind::TheoryMismatch,
                    "homomorphism between models of " + l.theory->name + " and " + m.theory->name);
    }
    if (!l.carrier) throw Error(ErrorKind::NonEnumerableCarrier, "domain carrier is not enumerable");
    const auto elements = l.carrier->enumerate();
    auto apply = [&](const Value& x) -> const Value& {
        auto it = phi.find(x);
        if (it == phi.end()) {
            throw Error(ErrorKind::InvalidModel, "carrier map is undefined at " + x.to_string());
        }
        return it->second;
    };
    for (const auto& d : l.theory->ops) {
        const auto& lf = l.ops.at(d.name);
        const auto& mf = m.ops.at(d.name);
        for (const auto& p : d.param.enumerate()) {
            TupleCounter tuple(elements.size(), d.arity.size());
            if (tuple.empty_space()) continue;
            do {
                std::vector<Value> args, mapped;
                for (auto i : tuple.digits()) {
                    args.push_back(elements[i]);
                    mapped.push_back(apply(elements[i]));
                }
                const Value lhs = apply(lf(p, std::span<const Value>(args)));
                const Value rhs = mf(p, std::span<const Value>(mapped));
                if (!(lhs == rhs)) return HomCheck{HomWitness{d.name, p, args}};
            } while (tuple.next());
        }
    }
    return {};
}

std::vector<FiniteModel> enumerate_models(TheoryPtr theory, const Universe& carrier,
                                          std::size_t candidate_limit) {
    const std::size_t n = carrier.size();
    const auto elements = carrier.enumerate();

    // One slot per (operation, parameter, argument tuple).
    struct Slot {
        std::size_t op;
        TableKey key;
    };
    std::vector<Slot> slots;
    for (std::size_t o = 0; o < theory->ops.size(); ++o) {
        const auto& d = theory->ops[o];
        const std::size_t tuples = saturating_pow(n, d.arity.size());
        if (tuples > candidate_limit) return {};
        for (const auto& p : d.param.enumerate()) {
            TupleCounter tuple(n, d.arity.size());
            if (tuple.empty_space()) continue;
            do {
                std::vector<Value> args;
                for (auto i : tuple.digits()) args.push_back(elements[i]);
                slots.push_back({o, TableKey{p, std::move(args)}});
                if (slots.size() > 64) return {};
            } while (tuple.next());
        }
    }
    if (n == 0 && !slots.empty()) return {};
    if (saturating_pow(n, slots.size()) > candidate_limit) return {};

    std::vector<FiniteModel> out;
    TupleCounter choice(n, slots.size());
    do {
        std::map<std::string, OperationTable> tables;
        for (const auto& d : theory->ops) tables[d.name];
        for (std::size_t s = 0; s < slots.size(); ++s) {
            tables[theory->ops[slots[s].op].name][slots[s].key] = elements[choice.digits()[s]];
        }
        FiniteModel candidate = model_from_tables(theory, carrier, tables);
        if (validate_model(candidate).valid()) out.push_back(std::move(candidate));
    } while (!slots.empty() && choice.next());
    return out;
}

}  // namespace algeff
