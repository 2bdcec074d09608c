#include "sdfkit/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sdfkit/error.hpp"

namespace sdfkit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
        case ErrorCode::NotProper: return "NotProper";
        case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
        case ErrorCode::NotAnIdeal: return "NotAnIdeal";
        case ErrorCode::NotAMultiplicativeSet: return "NotAMultiplicativeSet";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::ZeroRingResult: return "ZeroRingResult";
        case ErrorCode::ImproperExtension: return "ImproperExtension";
        case ErrorCode::TwoNotUnit: return "TwoNotUnit";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::UnitIdealResult: return "UnitIdealResult";
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
        case ErrorCode::ExpressionParseError: return "ExpressionParseError";
    }
    return "Unknown";
}

Limits& limits() {
    static Limits lim;
    return lim;
}

RingPtr Ring::tabulate(std::string spec, std::size_t order, Elem zero, Elem one,
                       const BinaryFn& add, const BinaryFn& mul, const LabelFn& label,
                       const Limits& lim) {
    if (order < 2) {
        throw Error(ErrorCode::InvalidOrder, spec + " would have order " + std::to_string(order));
    }
    if (zero != 0) throw Error(ErrorCode::InvalidOrder, spec + ": zero must have index 0");
    if (order > lim.max_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    spec + " has order " + std::to_string(order) + " > " +
                        std::to_string(lim.max_order));
    }
    auto r = std::shared_ptr<Ring>(new Ring());
    r->spec_ = std::move(spec);
    r->order_ = order;
    r->zero_ = zero;
    r->one_ = one;
    r->add_.resize(order * order);
    r->mul_.resize(order * order);
    r->neg_.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
        for (Elem b = 0; b < order; ++b) {
            r->add_[a * order + b] = static_cast<std::uint16_t>(add(a, b));
            r->mul_[a * order + b] = static_cast<std::uint16_t>(mul(a, b));
            if (r->add_[a * order + b] == zero) r->neg_[a] = static_cast<std::uint16_t>(b);
        }
    }
    r->labels_.reserve(order);
    for (Elem a = 0; a < order; ++a) {
        r->labels_.push_back(label(a));
        if (!r->by_label_.emplace(r->labels_.back(), a).second) {
            throw Error(ErrorCode::InvalidOrder,
                        r->spec_ + ": duplicate element label " + r->labels_.back());
        }
    }
    if (order <= lim.validate_order) {
        if (auto msg = check_ring_axioms(*r); !msg.empty()) {
            throw Error(ErrorCode::InvalidOrder, r->spec_ + " is not a ring: " + msg);
        }
    }
    return r;
}

Elem Ring::pow(Elem a, std::uint64_t k) const noexcept {
    Elem result = one_;
    Elem base = a;
    while (k > 0) {
        if (k & 1U) result = mul(result, base);
        base = mul(base, base);
        k >>= 1U;
    }
    return result;
}

Elem Ring::from_int(std::uint64_t k) const noexcept {
    Elem result = zero_;
    Elem base = one_;
    while (k > 0) {
        if (k & 1U) result = add(result, base);
        base = add(base, base);
        k >>= 1U;
    }
    return result;
}

std::optional<Elem> Ring::find_label(std::string_view text) const {
    auto it = by_label_.find(std::string(text));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

std::string check_ring_axioms(const Ring& r) {
    const auto n = static_cast<Elem>(r.order());
    std::ostringstream msg;
    if (r.zero() == r.one()) return "one equals zero";
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.zero()) != a) {
            msg << "zero is not an additive identity at " << r.label(a);
            return msg.str();
        }
        if (r.mul(a, r.one()) != a) {
            msg << "one is not a multiplicative identity at " << r.label(a);
            return msg.str();
        }
        if (r.add(a, r.neg(a)) != r.zero()) {
            msg << "no additive inverse for " << r.label(a);
            return msg.str();
        }
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a)) {
                msg << "addition not commutative at " << r.label(a) << "," << r.label(b);
                return msg.str();
            }
            if (r.mul(a, b) != r.mul(b, a)) {
                msg << "multiplication not commutative at " << r.label(a) << "," << r.label(b);
                return msg.str();
            }
            for (Elem c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
                    msg << "addition not associative";
                    return msg.str();
                }
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
                    msg << "multiplication not associative at " << r.label(a) << ","
                        << r.label(b) << "," << r.label(c);
                    return msg.str();
                }
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
                    msg << "distributivity fails at " << r.label(a) << "," << r.label(b) << ","
                        << r.label(c);
                    return msg.str();
                }
            }
        }
    }
    return {};
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b; }

RingPtr make_zn(std::size_t n, const Limits& lim) {
    if (n < 2) throw Error(ErrorCode::InvalidOrder, "Z" + std::to_string(n) + " (need n >= 2)");
    if (n > lim.max_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    "Z" + std::to_string(n) + " exceeds order bound " +
                        std::to_string(lim.max_order));
    }
    const auto m = static_cast<Elem>(n);
    return Ring::tabulate(
        "Z" + std::to_string(n), n, 0, 1, [m](Elem a, Elem b) { return (a + b) % m; },
        [m](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % m); },
        [](Elem a) { return std::to_string(a); }, lim);
}

std::size_t ring_char(const Ring& r) {
    Elem x = r.one();
    std::size_t k = 1;
    while (x != r.zero()) {
        x = r.add(x, r.one());
        ++k;
    }
    return k;
}

std::optional<Elem> inverse(const Ring& r, Elem x) {
    for (Elem y = 0; y < r.order(); ++y) {
        if (r.mul(x, y) == r.one()) return y;
    }
    return std::nullopt;
}

bool is_unit(const Ring& r, Elem x) { return inverse(r, x).has_value(); }

MultSet MultSet::generated(RingPtr ring, const std::vector<Elem>& gens) {
    std::vector<char> member(ring->order(), 0);
    std::vector<Elem> elems{ring->one()};
    member[ring->one()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (Elem g : gens) {
            Elem p = ring->mul(elems[i], g);
            if (!member[p]) {
                member[p] = 1;
                elems.push_back(p);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    MultSet s;
    for (Elem g : gens) {
        if (g != ring->one() && std::find(s.gens_.begin(), s.gens_.end(), g) == s.gens_.end()) {
            s.gens_.push_back(g);
        }
    }
    s.ring_ = std::move(ring);
    s.elements_ = std::move(elems);
    s.member_ = std::move(member);
    return s;
}

MultSet MultSet::from_elements(RingPtr ring, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<char> member(ring->order(), 0);
    for (Elem e : elements) member.at(e) = 1;
    if (!member[ring->one()]) {
        throw Error(ErrorCode::NotAMultiplicativeSet, "set does not contain one");
    }
    for (Elem a : elements) {
        for (Elem b : elements) {
            if (!member[ring->mul(a, b)]) {
                throw Error(ErrorCode::NotAMultiplicativeSet,
                            "product " + ring->label(a) + "*" + ring->label(b) + " escapes the set");
            }
        }
    }
    MultSet s;
    for (Elem e : elements) {
        if (e != ring->one()) s.gens_.push_back(e);
    }
    s.ring_ = std::move(ring);
    s.elements_ = std::move(elements);
    s.member_ = std::move(member);
    return s;
}

std::string MultSet::describe() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) out += ",";
        out += ring_->label(elements_[i]);
    }
    return out + "}";
}

}  // namespace sdfkit
