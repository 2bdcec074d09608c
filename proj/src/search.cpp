#include "sdfkit/search.hpp"

#include <cctype>
#include <optional>

#include "sdfkit/error.hpp"

namespace sdfkit {

struct Expression::Node {
    enum class Kind { Leaf, Not, And, Or } kind = Kind::Leaf;
    Property leaf = Property::Prime;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

std::optional<Property> property_by_name(std::string_view name) {
    for (Property p : kProperties) {
        if (property_name(p) == name) return p;
    }
    return std::nullopt;
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    NodePtr parse() {
        auto n = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected \"" + std::string(s_.substr(i_)) + "\"");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ExpressionParseError,
                    "\"" + std::string(s_) + "\" at " + std::to_string(i_) + ": " + why);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool word_at(std::string_view w) const {
        if (s_.substr(i_, w.size()) != w) return false;
        const std::size_t e = i_ + w.size();
        return e == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_');
    }

    bool take(std::initializer_list<std::string_view> ops) {
        skip();
        for (auto op : ops) {
            const bool alpha = std::isalpha(static_cast<unsigned char>(op[0]));
            if (alpha ? word_at(op) : s_.substr(i_, op.size()) == op) {
                i_ += op.size();
                return true;
            }
        }
        return false;
    }

    static NodePtr make(Kind k, NodePtr a, NodePtr b = nullptr) {
        auto n = std::make_shared<Expression::Node>();
        n->kind = k;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expr() {
        auto n = term();
        while (take({"||", "|", "or"})) n = make(Kind::Or, n, term());
        return n;
    }

    NodePtr term() {
        auto n = unary();
        while (take({"&&", "&", "and"})) n = make(Kind::And, n, unary());
        return n;
    }

    NodePtr unary() {
        if (take({"!", "~", "not"})) return make(Kind::Not, unary());
        if (take({"("})) {
            auto n = expr();
            if (!take({")"})) fail("missing )");
            return n;
        }
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a predicate name");
        const auto name = s_.substr(start, i_ - start);
        auto p = property_by_name(name);
        if (!p) {
            i_ = start;
            fail("unknown predicate \"" + std::string(name) + "\"");
        }
        auto n = std::make_shared<Expression::Node>();
        n->leaf = *p;
        return n;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

bool eval_node(const Expression::Node& n, const IdealFacts& f) {
    switch (n.kind) {
        case Kind::Leaf: return f[n.leaf];
        case Kind::Not: return !eval_node(*n.lhs, f);
        case Kind::And: return eval_node(*n.lhs, f) && eval_node(*n.rhs, f);
        case Kind::Or: return eval_node(*n.lhs, f) || eval_node(*n.rhs, f);
    }
    return false;
}

}  // namespace

std::string_view property_name(Property p) {
    switch (p) {
        case Property::Prime: return "prime";
        case Property::Maximal: return "maximal";
        case Property::Primary: return "primary";
        case Property::QuasiPrimary: return "quasi_primary";
        case Property::Sdf: return "sdf";
        case Property::SdfPrimary: return "sdf_primary";
        case Property::QuasiSdf: return "quasi_sdf";
    }
    return "?";
}

IdealFacts ideal_facts(const Ideal& i) {
    IdealFacts f;
    if (!i.is_proper()) return f;
    auto set = [&](Property p, bool v) { f.flags[static_cast<std::size_t>(p)] = v; };
    set(Property::Prime, is_prime(i).holds);
    set(Property::Maximal, is_maximal(i));
    set(Property::Primary, is_primary(i).holds);
    set(Property::QuasiPrimary, is_quasi_primary(i).holds);
    set(Property::Sdf, is_sdf_absorbing(i).holds);
    set(Property::SdfPrimary, is_sdf_absorbing_primary(i).holds);
    set(Property::QuasiSdf, is_quasi_sdf_absorbing(i).holds);
    return f;
}

Expression Expression::parse(std::string_view text) {
    Expression e;
    e.root_ = ExprParser(text).parse();
    e.text_ = std::string(text);
    return e;
}

bool Expression::eval(const IdealFacts& f) const { return eval_node(*root_, f); }

std::vector<SearchHit> search(const std::vector<RingPtr>& rings, const Expression& expr, unsigned jobs) {
    auto per_ring = parallel_map<std::vector<SearchHit>>(rings.size(), jobs, [&](std::size_t k) {
        std::vector<SearchHit> hits;
        for (const auto& i : proper_ideals(rings[k])) {
            auto f = ideal_facts(i);
            if (expr.eval(f)) hits.push_back({rings[k]->spec(), i.describe(), radical(i).describe(), f});
        }
        return hits;
    });
    std::vector<SearchHit> out;
    for (auto& h : per_ring) out.insert(out.end(), h.begin(), h.end());
    return out;
}

}  // namespace sdfkit
