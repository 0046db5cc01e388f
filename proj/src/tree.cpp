#include "algeff/tree.hpp"

#include <algorithm>
#include <set>

#include "algeff/errors.hpp"

namespace algeff {

struct Tree::Node {
    bool leaf;
    Value value;  // generator for leaves, parameter for operation nodes
    std::string op;
    Universe arity;
    std::vector<Tree> kont;
    std::size_t depth;
    std::size_t size;
};

Tree Tree::leaf(Value generator) {
    return Tree(std::make_shared<const Node>(
        Node{true, std::move(generator), {}, Universe::unit(), {}, 0, 1}));
}

Tree Tree::node(std::string op, Value param, Universe arity, std::vector<Tree> kont) {
    if (kont.size() != arity.size()) {
        throw Error(ErrorKind::IncompleteContinuation,
                    "operation " + op + " expects " + std::to_string(arity.size()) +
                        " continuation branches, got " + std::to_string(kont.size()));
    }
    std::size_t depth = 0;
    std::size_t size = 1;
    for (const auto& k : kont) {
        depth = std::max(depth, k.depth());
        size += k.size();
    }
    return Tree(std::make_shared<const Node>(
        Node{false, std::move(param), std::move(op), std::move(arity), std::move(kont), depth + 1, size}));
}

bool Tree::is_leaf() const { return node_->leaf; }
const Value& Tree::value() const { return node_->value; }
const std::string& Tree::op() const { return node_->op; }
const Value& Tree::param() const { return node_->value; }
const Universe& Tree::arity() const { return node_->arity; }
const std::vector<Tree>& Tree::kont() const { return node_->kont; }
std::size_t Tree::depth() const { return node_->depth; }
std::size_t Tree::size() const { return node_->size; }

const Tree& Tree::child(const Value& a) const {
    auto index = node_->arity.index_of(a);
    if (!index) {
        throw Error(ErrorKind::ParameterOutOfUniverse,
                    a.to_string() + " is not in the arity " + node_->arity.to_string() +
                        " of " + node_->op);
    }
    return node_->kont[*index];
}

std::string Tree::to_string() const {
    if (is_leaf()) return "return " + value().to_string();
    std::string out = op() + "(" + param().to_string() + "; {";
    for (std::size_t i = 0; i < kont().size(); ++i) {
        if (i) out += ", ";
        out += kont()[i].to_string();
    }
    return out + "})";
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) return a.value() <=> b.value();
    if (auto c = a.op().compare(b.op()) <=> 0; c != 0) return c;
    if (auto c = a.param() <=> b.param(); c != 0) return c;
    const auto& ka = a.kont();
    const auto& kb = b.kont();
    for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
        if (auto c = ka[i] <=> kb[i]; c != 0) return c;
    }
    return ka.size() <=> kb.size();
}

bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.size() != b.size()) return false;
    return (a <=> b) == 0;
}

Tree substitute(const Tree& t, const std::function<Tree(const Value&)>& sigma) {
    if (t.is_leaf()) return sigma(t.value());
    std::vector<Tree> kont;
    kont.reserve(t.kont().size());
    for (const auto& k : t.kont()) kont.push_back(substitute(k, sigma));
    return Tree::node(t.op(), t.param(), t.arity(), std::move(kont));
}

Tree substitute(const Tree& t, const Assignment& sigma) {
    return substitute(t, [&](const Value& x) -> Tree {
        auto it = sigma.find(x);
        if (it == sigma.end()) {
            throw Error(ErrorKind::UnboundGenerator, "generator " + x.to_string() + " has no assignment");
        }
        return it->second;
    });
}

namespace {
void collect(const Tree& t, std::set<Value>& out) {
    if (t.is_leaf()) {
        out.insert(t.value());
        return;
    }
    for (const auto& k : t.kont()) collect(k, out);
}
}  // namespace

std::vector<Value> generators(const Tree& t) {
    std::set<Value> out;
    collect(t, out);
    return {out.begin(), out.end()};
}

Tree rename_ops(const Tree& t, const std::map<std::string, std::string>& renaming) {
    if (t.is_leaf()) return t;
    std::vector<Tree> kont;
    kont.reserve(t.kont().size());
    for (const auto& k : t.kont()) kont.push_back(rename_ops(k, renaming));
    auto it = renaming.find(t.op());
    return Tree::node(it == renaming.end() ? t.op() : it->second, t.param(), t.arity(), std::move(kont));
}

}  // namespace algeff
