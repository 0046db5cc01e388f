#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "algeff/theory.hpp"
#include "algeff/tree.hpp"

namespace corpus {

inline constexpr std::uint32_t kSeed = 20240521;

inline std::size_t pick(std::mt19937& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// A random tree of depth at most `depth` whose leaves are drawn from `leaves`.
inline algeff::Tree random_tree(const algeff::Theory& theory, const std::vector<algeff::Value>& leaves,
                                int depth, std::mt19937& rng) {
    if (depth == 0 || theory.ops.empty() || pick(rng, 3) == 0) {
        return algeff::Tree::leaf(leaves[pick(rng, leaves.size())]);
    }
    const auto& op = theory.ops[pick(rng, theory.ops.size())];
    const auto params = op.param.enumerate();
    const auto p = params[pick(rng, params.size())];
    return algeff::call(op, p, [&](const algeff::Value&) { return random_tree(theory, leaves, depth - 1, rng); });
}

/// `count` trees from a fixed seed.
inline std::vector<algeff::Tree> trees(const algeff::Theory& theory, const std::vector<algeff::Value>& leaves,
                                       int depth, std::size_t count, std::uint32_t seed = kSeed) {
    std::mt19937 rng(seed);
    std::vector<algeff::Tree> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_tree(theory, leaves, depth, rng));
    return out;
}

/// Every tree of depth at most `depth`.
inline std::vector<algeff::Tree> all_trees(const algeff::Theory& theory, const std::vector<algeff::Value>& leaves,
                                           int depth) {
    std::vector<algeff::Tree> out;
    for (const auto& x : leaves) out.push_back(algeff::Tree::leaf(x));
    if (depth == 0) return out;
    const auto smaller = all_trees(theory, leaves, depth - 1);
    for (const auto& op : theory.ops) {
        const std::size_t k = op.arity.size();
        for (const auto& p : op.param.enumerate()) {
            std::vector<std::size_t> digits(k, 0);
            while (true) {
                std::vector<algeff::Tree> kont;
                for (auto i : digits) kont.push_back(smaller[i]);
                out.push_back(algeff::Tree::node(op.name, p, op.arity, std::move(kont)));
                std::size_t i = k;
                while (i > 0 && ++digits[i - 1] == smaller.size()) digits[--i] = 0;
                if (i == 0) break;
            }
        }
    }
    return out;
}

/// Denotational reading of a single-state tree: s -> (s', v).
inline std::pair<algeff::Value, algeff::Value> run_state(const algeff::Tree& t, algeff::Value s) {
    if (t.is_leaf()) return {s, t.value()};
    if (t.op() == "get") return run_state(t.kont()[*t.arity().index_of(s)], s);
    return run_state(t.kont()[0], t.param());
}

}  // namespace corpus
