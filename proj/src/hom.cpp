#include "sdfkit/hom.hpp"

#include <algorithm>

#include "sdfkit/error.hpp"

namespace sdfkit {

namespace {

bool has_top_level_product(const std::string& spec) {
    int depth = 0;
    for (char c : spec) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == 'x' && depth == 0) return true;
    }
    return false;
}

}  // namespace

RingHom make_hom(RingPtr source, RingPtr target, std::vector<Elem> map, std::string name) {
    const Ring& r = *source;
    const Ring& s = *target;
    if (map.size() != r.order()) {
        throw Error(ErrorCode::NotAHomomorphism, "map is not total on " + r.spec());
    }
    for (Elem v : map) {
        if (v >= s.order()) throw Error(ErrorCode::NotAHomomorphism, "image index out of range");
    }
    if (map[r.zero()] != s.zero()) {
        throw Error(ErrorCode::NotAHomomorphism, "map(0) = " + s.label(map[r.zero()]) + " != 0");
    }
    if (map[r.one()] != s.one()) {
        throw Error(ErrorCode::NotAHomomorphism, "map(1) = " + s.label(map[r.one()]) + " != 1");
    }
    for (Elem a = 0; a < r.order(); ++a) {
        for (Elem b = 0; b < r.order(); ++b) {
            if (map[r.add(a, b)] != s.add(map[a], map[b])) {
                throw Error(ErrorCode::NotAHomomorphism,
                            "map(" + r.label(a) + "+" + r.label(b) + ") != map(" + r.label(a) +
                                ")+map(" + r.label(b) + ")");
            }
            if (map[r.mul(a, b)] != s.mul(map[a], map[b])) {
                throw Error(ErrorCode::NotAHomomorphism,
                            "map(" + r.label(a) + "*" + r.label(b) + ") != map(" + r.label(a) +
                                ")*map(" + r.label(b) + ")");
            }
        }
    }
    std::vector<Elem> ker;
    std::vector<char> hit(s.order(), 0);
    for (Elem a = 0; a < r.order(); ++a) {
        if (map[a] == s.zero()) ker.push_back(a);
        hit[map[a]] = 1;
    }
    const bool surj = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    auto kernel = Ideal::from_elements(source, std::move(ker));
    if (name.empty()) name = r.spec() + "->" + s.spec();
    return RingHom(std::move(source), std::move(target), std::move(map), std::move(kernel), surj,
                   std::move(name));
}

RingHom identity_hom(const RingPtr& r) {
    std::vector<Elem> map(r->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = x;
    return make_hom(r, r, std::move(map), "id:" + r->spec());
}

RingHom canonical_hom(const RingPtr& source, const RingPtr& target) {
    const Ring& r = *source;
    if (ring_char(r) != r.order()) {
        throw Error(ErrorCode::NotAHomomorphism,
                    r.spec() + " is not generated by 1; no canonical map");
    }
    std::vector<Elem> map(r.order());
    Elem x = r.zero();
    Elem y = target->zero();
    for (std::size_t k = 0; k < r.order(); ++k) {
        map[x] = y;
        x = r.add(x, r.one());
        y = target->add(y, target->one());
    }
    return make_hom(source, target, std::move(map), "can:" + r.spec() + "->" + target->spec());
}

Ideal preimage_ideal(const RingHom& h, const Ideal& j) {
    if (!same_ring(h.target(), j.ring())) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the target of " + h.name());
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < h.source()->order(); ++x) {
        if (j.contains(h(x))) out.push_back(x);
    }
    return Ideal::from_elements(h.source(), std::move(out));
}

Ideal image_ideal(const RingHom& h, const Ideal& i) {
    if (!same_ring(h.source(), i.ring())) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the source of " + h.name());
    }
    std::vector<Elem> out;
    out.reserve(i.size());
    for (Elem x : i.elements()) out.push_back(h(x));
    return Ideal::from_elements(h.target(), std::move(out));
}

RingHom compose(const RingHom& outer, const RingHom& inner) {
    if (!same_ring(inner.target(), outer.source())) {
        throw Error(ErrorCode::RingMismatch, "cannot compose " + outer.name() + " after " + inner.name());
    }
    std::vector<Elem> map(inner.source()->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = outer(inner(x));
    return make_hom(inner.source(), outer.target(), std::move(map),
                    outer.name() + "." + inner.name());
}

Quotient make_quotient(const Ideal& i, const Limits& lim) {
    const RingPtr& base = i.ring();
    const Ring& r = *base;
    if (!i.is_proper()) {
        throw Error(ErrorCode::NotProper, "quotient of " + r.spec() + " by the unit ideal");
    }
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> rep(r.order(), unset);
    std::vector<Elem> reps;
    for (Elem x = 0; x < r.order(); ++x) {
        if (rep[x] != unset) continue;
        reps.push_back(x);
        for (Elem y : i.elements()) rep[r.add(x, y)] = x;
    }
    std::vector<Elem> index(r.order(), 0);
    for (Elem k = 0; k < reps.size(); ++k) index[reps[k]] = k;
    auto cls = [&](Elem x) { return index[rep[x]]; };

    auto ring = Ring::tabulate(
        "Q(" + r.spec() + "," + i.generator_text() + ")", reps.size(), cls(r.zero()), cls(r.one()),
        [&](Elem a, Elem b) { return cls(r.add(reps[a], reps[b])); },
        [&](Elem a, Elem b) { return cls(r.mul(reps[a], reps[b])); },
        [&](Elem a) { return r.label(reps[a]); }, lim);
    std::vector<Elem> map(r.order());
    for (Elem x = 0; x < r.order(); ++x) map[x] = cls(x);
    auto proj = make_hom(base, ring, std::move(map), "pi:" + ring->spec());
    return Quotient{std::move(ring), std::move(proj)};
}

Product make_product(const RingPtr& left, const RingPtr& right, const Limits& lim) {
    const std::size_t n1 = left->order();
    const std::size_t n2 = right->order();
    if (n1 * n2 > lim.max_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    left->spec() + "x" + right->spec() + " has order " + std::to_string(n1 * n2));
    }
    std::string spec = left->spec() + "x" +
                       (has_top_level_product(right->spec()) ? "(" + right->spec() + ")"
                                                             : right->spec());
    const Ring& a = *left;
    const Ring& b = *right;
    auto split = [n2](Elem x) { return std::pair<Elem, Elem>(x / n2, x % n2); };
    auto join = [n2](Elem u, Elem v) { return static_cast<Elem>(u * n2 + v); };
    auto ring = Ring::tabulate(
        std::move(spec), n1 * n2, join(a.zero(), b.zero()), join(a.one(), b.one()),
        [&](Elem x, Elem y) {
            auto [x1, x2] = split(x);
            auto [y1, y2] = split(y);
            return join(a.add(x1, y1), b.add(x2, y2));
        },
        [&](Elem x, Elem y) {
            auto [x1, x2] = split(x);
            auto [y1, y2] = split(y);
            return join(a.mul(x1, y1), b.mul(x2, y2));
        },
        [&](Elem x) {
            auto [x1, x2] = split(x);
            return "(" + a.label(x1) + "," + b.label(x2) + ")";
        },
        lim);
    return Product{std::move(ring), left, right};
}

RingHom Product::proj_first() const {
    std::vector<Elem> map(ring->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = first(x);
    return make_hom(ring, left, std::move(map), "p1:" + ring->spec());
}

RingHom Product::proj_second() const {
    std::vector<Elem> map(ring->order());
    for (Elem x = 0; x < map.size(); ++x) map[x] = second(x);
    return make_hom(ring, right, std::move(map), "p2:" + ring->spec());
}

Ideal cross_ideal(const Product& p, const Ideal& left, const Ideal& right) {
    if (!same_ring(left.ring(), p.left) || !same_ring(right.ring(), p.right)) {
        throw Error(ErrorCode::RingMismatch, "factor ideals do not match " + p.ring->spec());
    }
    std::vector<Elem> out;
    out.reserve(left.size() * right.size());
    for (Elem a : left.elements()) {
        for (Elem b : right.elements()) out.push_back(p.pair(a, b));
    }
    return Ideal::from_elements(p.ring, std::move(out));
}

}  // namespace sdfkit
