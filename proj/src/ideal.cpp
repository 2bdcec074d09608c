#include "sdfkit/ideal.hpp"

#include <algorithm>
#include <map>

#include "sdfkit/error.hpp"

namespace sdfkit {

namespace {

void require_same_ring(const Ideal& i, const Ideal& j) {
    if (!same_ring(i.ring(), j.ring())) {
        throw Error(ErrorCode::RingMismatch,
                    "ideals live in " + i.ring()->spec() + " and " + j.ring()->spec());
    }
}

// Membership bitmap of the ideal generated by `gens`. Each generator that is
// not yet inside at least doubles the additive subgroup, so the loop body runs
// at most log2|R| times.
std::vector<char> closure(const Ring& r, const std::vector<Elem>& gens) {
    const auto n = r.order();
    std::vector<char> member(n, 0);
    std::vector<Elem> cur{r.zero()};
    member[r.zero()] = 1;
    for (Elem g : gens) {
        if (member[g]) continue;
        std::vector<char> pmember(n, 0);
        std::vector<Elem> multiples;
        for (Elem x = 0; x < n; ++x) {
            Elem m = r.mul(x, g);
            if (!pmember[m]) {
                pmember[m] = 1;
                multiples.push_back(m);
            }
        }
        std::vector<Elem> next;
        for (Elem a : cur) {
            for (Elem b : multiples) {
                Elem s = r.add(a, b);
                if (!member[s]) {
                    member[s] = 1;
                    next.push_back(s);
                }
            }
        }
        cur.insert(cur.end(), next.begin(), next.end());
    }
    return member;
}

std::vector<Elem> members_of(const std::vector<char>& member) {
    std::vector<Elem> out;
    for (Elem x = 0; x < member.size(); ++x) {
        if (member[x]) out.push_back(x);
    }
    return out;
}

std::vector<Elem> discover_generators(const Ring& r, const std::vector<Elem>& elements) {
    std::vector<Elem> gens;
    std::vector<char> cur(r.order(), 0);
    cur[r.zero()] = 1;
    for (Elem x : elements) {
        if (cur[x]) continue;
        gens.push_back(x);
        cur = closure(r, gens);
    }
    return gens;
}

}  // namespace

Ideal Ideal::from_elements(RingPtr ring, std::vector<Elem> elements, std::vector<Elem> gens) {
    const Ring& r = *ring;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<char> member(r.order(), 0);
    for (Elem e : elements) {
        if (e >= r.order()) throw Error(ErrorCode::NotAnIdeal, "element index out of range");
        member[e] = 1;
    }
    if (!member[r.zero()]) throw Error(ErrorCode::NotAnIdeal, "set does not contain zero");
    for (Elem a : elements) {
        for (Elem b : elements) {
            if (!member[r.add(a, b)]) {
                throw Error(ErrorCode::NotAnIdeal, "not closed under addition: " + r.label(a) +
                                                       "+" + r.label(b) + " in " + r.spec());
            }
        }
        for (Elem x = 0; x < r.order(); ++x) {
            if (!member[r.mul(x, a)]) {
                throw Error(ErrorCode::NotAnIdeal, "not absorbing: " + r.label(x) + "*" +
                                                       r.label(a) + " in " + r.spec());
            }
        }
    }
    Ideal out;
    out.gens_ = gens.empty() ? discover_generators(r, elements) : std::move(gens);
    out.ring_ = std::move(ring);
    out.elements_ = std::move(elements);
    out.member_ = std::move(member);
    return out;
}

bool Ideal::subset_of(const Ideal& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](Elem x) { return other.contains(x); });
}

std::string Ideal::describe() const { return "(" + generator_text() + ")"; }

std::string Ideal::generator_text() const {
    if (gens_.empty()) return ring_->label(ring_->zero());
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ",";
        out += ring_->label(gens_[i]);
    }
    return out;
}

std::vector<std::string> Ideal::element_labels() const {
    std::vector<std::string> out;
    out.reserve(elements_.size());
    for (Elem e : elements_) out.push_back(ring_->label(e));
    return out;
}

bool ideal_less(const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
}

Ideal zero_ideal(const RingPtr& r) { return Ideal::from_elements(r, {r->zero()}); }

Ideal unit_ideal(const RingPtr& r) {
    std::vector<Elem> all(r->order());
    for (Elem x = 0; x < all.size(); ++x) all[x] = x;
    return Ideal::from_elements(r, std::move(all), {r->one()});
}

Ideal ideal_from_generators(const RingPtr& r, const std::vector<Elem>& gens) {
    for (Elem g : gens) {
        if (g >= r->order()) throw Error(ErrorCode::NotAnIdeal, "generator out of range");
    }
    auto member = closure(*r, gens);
    std::vector<Elem> kept;
    for (Elem g : gens) {
        if (g != r->zero() && std::find(kept.begin(), kept.end(), g) == kept.end()) {
            kept.push_back(g);
        }
    }
    return Ideal::from_elements(r, members_of(member), std::move(kept));
}

Ideal principal_ideal(const RingPtr& r, Elem x) { return ideal_from_generators(r, {x}); }

Ideal radical(const Ideal& i) {
    const Ring& r = *i.ring();
    // Powers of x that land in I stay in I, and the sequence x, x^2, ... repeats
    // within |R| steps, so x^k in I for some k <= |R| iff x^|R| in I.
    std::vector<Elem> out;
    for (Elem x = 0; x < r.order(); ++x) {
        if (i.contains(r.pow(x, r.order()))) out.push_back(x);
    }
    return Ideal::from_elements(i.ring(), std::move(out));
}

Ideal colon(const Ideal& i, Elem a) {
    const Ring& r = *i.ring();
    std::vector<Elem> out;
    for (Elem x = 0; x < r.order(); ++x) {
        if (i.contains(r.mul(x, a))) out.push_back(x);
    }
    return Ideal::from_elements(i.ring(), std::move(out));
}

Ideal intersect(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    std::vector<Elem> out;
    std::set_intersection(i.elements().begin(), i.elements().end(), j.elements().begin(),
                          j.elements().end(), std::back_inserter(out));
    return Ideal::from_elements(i.ring(), std::move(out));
}

Ideal sum(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    const Ring& r = *i.ring();
    std::vector<char> member(r.order(), 0);
    for (Elem a : i.elements()) {
        for (Elem b : j.elements()) member[r.add(a, b)] = 1;
    }
    std::vector<Elem> gens = i.generators();
    for (Elem g : j.generators()) {
        if (!i.contains(g)) gens.push_back(g);
    }
    return Ideal::from_elements(i.ring(), members_of(member), std::move(gens));
}

Ideal product_ideal(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    const Ring& r = *i.ring();
    std::vector<Elem> products;
    std::vector<char> seen(r.order(), 0);
    for (Elem a : i.elements()) {
        for (Elem b : j.elements()) {
            Elem p = r.mul(a, b);
            if (!seen[p]) {
                seen[p] = 1;
                products.push_back(p);
            }
        }
    }
    std::sort(products.begin(), products.end());
    auto member = closure(r, products);
    return Ideal::from_elements(i.ring(), members_of(member));
}

bool is_comaximal(const Ideal& i, const Ideal& j) {
    require_same_ring(i, j);
    return !sum(i, j).is_proper();
}

std::vector<Ideal> all_ideals(const RingPtr& r, const Limits& lim) {
    if (r->order() > lim.enumerate_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    r->spec() + ": ideal enumeration needs order <= " +
                        std::to_string(lim.enumerate_order));
    }
    std::map<std::vector<Elem>, std::size_t> seen;
    std::vector<Ideal> found;
    auto add = [&](Ideal id) {
        if (seen.emplace(id.elements(), found.size()).second) found.push_back(std::move(id));
    };
    for (Elem x = 0; x < r->order(); ++x) add(principal_ideal(r, x));
    // Pairwise sums until nothing new appears; every ideal of a finite ring is
    // a finite sum of principal ideals.
    for (std::size_t a = 0; a < found.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (found[b].subset_of(found[a]) || found[a].subset_of(found[b])) continue;
            add(sum(found[a], found[b]));
        }
    }
    std::sort(found.begin(), found.end(), ideal_less);
    return found;
}

std::vector<Ideal> proper_ideals(const RingPtr& r, const Limits& lim) {
    auto all = all_ideals(r, lim);
    all.pop_back();
    return all;
}

bool is_s_saturated(const Ideal& i, const MultSet& s) {
    if (!same_ring(i.ring(), s.ring())) {
        throw Error(ErrorCode::RingMismatch, "multiplicative set from another ring");
    }
    const Ring& r = *i.ring();
    for (Elem t : s.elements()) {
        for (Elem x = 0; x < r.order(); ++x) {
            if (i.contains(r.mul(t, x)) && !i.contains(x)) return false;
        }
    }
    return true;
}

Ideal saturate(const Ideal& i, const MultSet& s) {
    if (!same_ring(i.ring(), s.ring())) {
        throw Error(ErrorCode::RingMismatch, "multiplicative set from another ring");
    }
    const Ring& r = *i.ring();
    Ideal cur = i;
    while (true) {
        std::vector<Elem> gens = cur.elements();
        bool grew = false;
        for (Elem x = 0; x < r.order(); ++x) {
            if (cur.contains(x)) continue;
            for (Elem t : s.elements()) {
                if (cur.contains(r.mul(t, x))) {
                    gens.push_back(x);
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) return cur;
        cur = Ideal::from_elements(i.ring(), members_of(closure(r, gens)));
    }
}

}  // namespace sdfkit
