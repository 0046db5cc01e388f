#include "algeff/universe.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace algeff {

struct Universe::Node {
    Shape shape;
    std::int64_t n = 0;
    std::vector<std::string> labels;
    std::optional<Universe> left;
    std::optional<Universe> right;
    std::size_t max_length = 0;
    std::size_t size = 0;
};

namespace {

std::size_t seq_size(std::size_t base, std::size_t max_length) {
    std::size_t total = 0;
    std::size_t power = 1;
    for (std::size_t k = 0; k <= max_length; ++k) {
        total += power;
        power *= base;
    }
    return total;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Universe::Universe() : Universe(unit()) {}

Universe Universe::empty() {
    static const auto node = std::make_shared<const Node>(Node{Shape::Empty, 0, {}, {}, {}, 0, 0});
    return Universe(node);
}

Universe Universe::unit() {
    static const auto node = std::make_shared<const Node>(Node{Shape::Unit, 0, {}, {}, {}, 0, 1});
    return Universe(node);
}

Universe Universe::boolean() {
    static const auto node = std::make_shared<const Node>(Node{Shape::Bool, 0, {}, {}, {}, 0, 2});
    return Universe(node);
}

Universe Universe::fin(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("fin universe needs a positive size");
    return Universe(std::make_shared<const Node>(
        Node{Shape::Fin, n, {}, {}, {}, 0, static_cast<std::size_t>(n)}));
}

Universe Universe::enumeration(std::vector<std::string> labels) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("enum labels must be distinct");
    const std::size_t size = labels.size();
    return Universe(std::make_shared<const Node>(
        Node{Shape::Enum, 0, std::move(labels), {}, {}, 0, size}));
}

Universe Universe::product(Universe left, Universe right) {
    const std::size_t size = left.size() * right.size();
    return Universe(std::make_shared<const Node>(
        Node{Shape::Product, 0, {}, left, right, 0, size}));
}

Universe Universe::sequences(Universe element, std::size_t max_length) {
    const std::size_t size = seq_size(element.size(), max_length);
    return Universe(std::make_shared<const Node>(
        Node{Shape::Seq, 0, {}, element, {}, max_length, size}));
}

Universe::Shape Universe::shape() const { return node_->shape; }
std::size_t Universe::size() const { return node_->size; }

std::int64_t Universe::fin_size() const { return node_->n; }
const std::vector<std::string>& Universe::labels() const { return node_->labels; }

const Universe& Universe::left() const { return *node_->left; }
const Universe& Universe::right() const { return *node_->right; }

const Universe& Universe::element_universe() const { return left(); }
std::size_t Universe::max_length() const { return node_->max_length; }

Value Universe::element(std::size_t index) const {
    if (index >= size()) throw std::out_of_range("universe index out of range");
    switch (shape()) {
    case Shape::Empty: break;
    case Shape::Unit: return Value::unit();
    case Shape::Bool: return Value::boolean(index == 1);
    case Shape::Fin: return Value::integer(static_cast<std::int64_t>(index), node_->n);
    case Shape::Enum: return Value::label(node_->labels[index]);
    case Shape::Product: {
        const Universe &l = *node_->left, &r = *node_->right;
        return Value::pair(l.element(index / r.size()), r.element(index % r.size()));
    }
    case Shape::Seq: {
        const Universe& e = *node_->left;
        const std::size_t base = e.size();
        std::size_t length = 0;
        std::size_t block = 1;
        while (index >= block) {
            index -= block;
            ++length;
            block *= base;
        }
        std::vector<Value> items(length);
        for (std::size_t k = length; k-- > 0;) {
            items[k] = e.element(index % base);
            index /= base;
        }
        return Value::list(std::move(items));
    }
    }
    throw std::out_of_range("empty universe has no elements");
}

std::vector<Value> Universe::enumerate() const {
    std::vector<Value> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
    return out;
}

std::optional<std::size_t> Universe::index_of(const Value& v) const {
    switch (shape()) {
    case Shape::Empty: return std::nullopt;
    case Shape::Unit:
        if (v.kind() == Value::Kind::Unit) return 0;
        return std::nullopt;
    case Shape::Bool:
        if (v.kind() == Value::Kind::Bool) return v.as_bool() ? 1 : 0;
        return std::nullopt;
    case Shape::Fin:
        if (v.kind() == Value::Kind::Int && v.as_int() >= 0 && v.as_int() < node_->n)
            return static_cast<std::size_t>(v.as_int());
        return std::nullopt;
    case Shape::Enum: {
        if (v.kind() != Value::Kind::Label) return std::nullopt;
        auto it = std::find(node_->labels.begin(), node_->labels.end(), v.as_label());
        if (it == node_->labels.end()) return std::nullopt;
        return static_cast<std::size_t>(it - node_->labels.begin());
    }
    case Shape::Product: {
        if (v.kind() != Value::Kind::Pair) return std::nullopt;
        const Universe &l = *node_->left, &r = *node_->right;
        auto i = l.index_of(v.first());
        auto j = r.index_of(v.second());
        if (!i || !j) return std::nullopt;
        return *i * r.size() + *j;
    }
    case Shape::Seq: {
        if (v.kind() != Value::Kind::List) return std::nullopt;
        const auto& xs = v.items();
        if (xs.size() > node_->max_length) return std::nullopt;
        const Universe& e = *node_->left;
        const std::size_t base = e.size();
        std::size_t offset = 0;
        std::size_t block = 1;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            offset += block;
            block *= base;
        }
        std::size_t within = 0;
        for (const auto& x : xs) {
            auto i = e.index_of(x);
            if (!i) return std::nullopt;
            within = within * base + *i;
        }
        return offset + within;
    }
    }
    return std::nullopt;
}

std::string Universe::to_string() const {
    switch (shape()) {
    case Shape::Empty: return "empty";
    case Shape::Unit: return "unit";
    case Shape::Bool: return "bool";
    case Shape::Fin: return "fin " + std::to_string(node_->n);
    case Shape::Enum: {
        std::string out = "enum {";
        for (std::size_t i = 0; i < node_->labels.size(); ++i) {
            if (i) out += ", ";
            const auto& l = node_->labels[i];
            out += is_identifier(l) ? l : quote_label(l);
        }
        return out + "}";
    }
    case Shape::Product: {
        const Universe &l = *node_->left, &r = *node_->right;
        // `*` associates to the right, so only a product on the left needs parentheses.
        std::string ls = l.to_string();
        if (l.shape() == Shape::Product) ls = "(" + ls + ")";
        return ls + " * " + r.to_string();
    }
    case Shape::Seq: {
        const Universe& e = *node_->left;
        return "seq(" + e.to_string() + ", " + std::to_string(node_->max_length) + ")";
    }
    }
    return "?";
}

bool operator==(const Universe& a, const Universe& b) {
    if (a.node_ == b.node_) return true;
    if (a.shape() != b.shape()) return false;
    switch (a.shape()) {
    case Universe::Shape::Empty:
    case Universe::Shape::Unit:
    case Universe::Shape::Bool: return true;
    case Universe::Shape::Fin: return a.node_->n == b.node_->n;
    case Universe::Shape::Enum: return a.node_->labels == b.node_->labels;
    case Universe::Shape::Product:
        return *a.node_->left == *b.node_->left &&
               *a.node_->right == *b.node_->right;
    case Universe::Shape::Seq:
        return a.node_->max_length == b.node_->max_length &&
               *a.node_->left == *b.node_->left;
    }
    return false;
}

}  // namespace algeff
