#include "sdfkit/constructions.hpp"

#include <algorithm>

#include "sdfkit/error.hpp"

namespace sdfkit {

namespace {

// Token used for a homomorphism inside an Am(...) spec.
std::string hom_token(const RingHom& h) {
    const Ring& r = *h.source();
    if (same_ring(h.source(), h.target())) {
        bool id = true;
        for (Elem x = 0; x < r.order() && id; ++x) id = h(x) == x;
        if (id) return "id";
    }
    if (ring_char(r) == r.order()) return "can";
    std::string out = "{";
    for (Elem x = 0; x < r.order(); ++x) {
        if (x) out += ";";
        out += h.target()->label(h(x));
    }
    return out + "}";
}

}  // namespace

ModuleSpec ModuleSpec::self(const RingPtr& base) {
    return ModuleSpec(base, zero_ideal(base), base, identity_hom(base));
}

ModuleSpec ModuleSpec::quotient_by(const Ideal& j) {
    if (j.is_zero()) return self(j.ring());
    auto q = make_quotient(j);
    return ModuleSpec(j.ring(), j, q.ring, q.projection);
}

Idealization idealize(const ModuleSpec& m, const Limits& lim) {
    const Ring& r = *m.base();
    const Ring& c = *m.carrier();
    const std::size_t msize = m.size();
    if (r.order() * msize > lim.max_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    "idealization of " + r.spec() + " has order " +
                        std::to_string(r.order() * msize));
    }
    auto split = [msize](Elem x) { return std::pair<Elem, Elem>(x / msize, x % msize); };
    auto join = [msize](Elem a, Elem b) { return static_cast<Elem>(a * msize + b); };
    auto ring = Ring::tabulate(
        "Idl(" + r.spec() + "," + m.annihilator().generator_text() + ")", r.order() * msize,
        join(r.zero(), c.zero()), join(r.one(), c.zero()),
        [&](Elem x, Elem y) {
            auto [r1, m1] = split(x);
            auto [r2, m2] = split(y);
            return join(r.add(r1, r2), c.add(m1, m2));
        },
        [&](Elem x, Elem y) {
            auto [r1, m1] = split(x);
            auto [r2, m2] = split(y);
            return join(r.mul(r1, r2), c.add(m.act(r1, m2), m.act(r2, m1)));
        },
        [&](Elem x) {
            auto [a, b] = split(x);
            return "(" + r.label(a) + "," + c.label(b) + ")";
        },
        lim);
    return Idealization{std::move(ring), m};
}

Ideal idealization_ideal(const Idealization& idl, const Ideal& i) {
    if (!same_ring(i.ring(), idl.module.base())) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the base of " + idl.ring->spec());
    }
    if (!i.is_proper()) throw Error(ErrorCode::NotProper, "I must be proper in the base ring");
    std::vector<Elem> out;
    out.reserve(i.size() * idl.module.size());
    for (Elem a : i.elements()) {
        for (Elem m = 0; m < idl.module.size(); ++m) out.push_back(idl.pair(a, m));
    }
    return Ideal::from_elements(idl.ring, std::move(out));
}

std::optional<Elem> Amalgamation::find(Elem r, Elem s) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), std::pair<Elem, Elem>(r, s));
    if (it == carrier.end() || *it != std::pair<Elem, Elem>(r, s)) return std::nullopt;
    return static_cast<Elem>(it - carrier.begin());
}

Amalgamation amalgamate(const RingHom& phi, const Ideal& j, const Limits& lim) {
    if (!same_ring(j.ring(), phi.target())) {
        throw Error(ErrorCode::RingMismatch, "J must be an ideal of the target of " + phi.name());
    }
    const Ring& r = *phi.source();
    const Ring& s = *phi.target();
    std::vector<std::pair<Elem, Elem>> carrier;
    for (Elem x = 0; x < r.order(); ++x) {
        for (Elem y : j.elements()) carrier.emplace_back(x, s.add(phi(x), y));
    }
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (carrier.size() > lim.max_order) {
        throw Error(ErrorCode::OrderBoundExceeded,
                    "amalgamation has order " + std::to_string(carrier.size()));
    }

    Amalgamation out{nullptr, phi, j, std::move(carrier)};
    auto locate = [&out](Elem a, Elem b) {
        auto idx = out.find(a, b);
        if (!idx) throw Error(ErrorCode::NotAnIdeal, "amalgamation carrier is not a subring");
        return *idx;
    };
    const auto& car = out.carrier;
    out.ring = Ring::tabulate(
        "Am(" + r.spec() + "," + s.spec() + "," + hom_token(phi) + "," + j.generator_text() + ")",
        car.size(), locate(r.zero(), s.zero()), locate(r.one(), s.one()),
        [&](Elem x, Elem y) {
            return locate(r.add(car[x].first, car[y].first), s.add(car[x].second, car[y].second));
        },
        [&](Elem x, Elem y) {
            return locate(r.mul(car[x].first, car[y].first), s.mul(car[x].second, car[y].second));
        },
        [&](Elem x) { return "(" + r.label(car[x].first) + "," + s.label(car[x].second) + ")"; },
        lim);
    return out;
}

Ideal amalgamation_ideal(const Amalgamation& a, const Ideal& i) {
    if (!same_ring(i.ring(), a.hom.source())) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the source ring of the amalgamation");
    }
    if (!i.is_proper()) throw Error(ErrorCode::NotProper, "I must be proper");
    const Ring& s = *a.hom.target();
    std::vector<Elem> out;
    for (Elem x : i.elements()) {
        for (Elem y : a.j.elements()) {
            auto idx = a.find(x, s.add(a.hom(x), y));
            if (!idx) throw Error(ErrorCode::NotAnIdeal, "I ⋈ J leaves the amalgamated ring");
            out.push_back(*idx);
        }
    }
    try {
        return Ideal::from_elements(a.ring, std::move(out));
    } catch (const Error& e) {
        throw Error(ErrorCode::NotAnIdeal, std::string("I ⋈ J is not an ideal: ") + e.what());
    }
}

Localization localize(const MultSet& s, const Limits& lim) {
    const RingPtr& base = s.ring();
    const Ring& r = *base;
    if (s.contains(r.zero())) {
        throw Error(ErrorCode::ZeroRingResult, "0 is in S = " + s.describe() + "; S^-1 R is zero");
    }
    // (r,s) ~ (r',s') iff u(rs' - r's) = 0 for some u in S, i.e. rs' - r's lies in
    // the ideal K of elements killed by S.
    std::vector<char> killed(r.order(), 0);
    for (Elem x = 0; x < r.order(); ++x) {
        for (Elem u : s.elements()) {
            if (r.mul(u, x) == r.zero()) {
                killed[x] = 1;
                break;
            }
        }
    }
    const auto& dens = s.elements();
    std::vector<Elem> den_pos(r.order(), 0);
    for (Elem k = 0; k < dens.size(); ++k) den_pos[dens[k]] = k;

    std::vector<std::pair<Elem, Elem>> reps;
    std::vector<Elem> cls(r.order() * dens.size());
    for (Elem num = 0; num < r.order(); ++num) {
        for (Elem den : dens) {
            Elem found = static_cast<Elem>(reps.size());
            for (Elem k = 0; k < reps.size(); ++k) {
                auto [rn, rd] = reps[k];
                if (killed[r.sub(r.mul(num, rd), r.mul(rn, den))]) {
                    found = k;
                    break;
                }
            }
            if (found == reps.size()) reps.emplace_back(num, den);
            cls[num * dens.size() + den_pos[den]] = found;
        }
    }
    auto class_of = [&](Elem num, Elem den) { return cls[num * dens.size() + den_pos[den]]; };

    std::string gens;
    for (Elem g : s.generators()) {
        if (!gens.empty()) gens += ",";
        gens += r.label(g);
    }
    if (gens.empty()) gens = r.label(r.one());

    auto ring = Ring::tabulate(
        "Loc(" + r.spec() + "," + gens + ")", reps.size(), class_of(r.zero(), r.one()),
        class_of(r.one(), r.one()),
        [&](Elem x, Elem y) {
            auto [a, sa] = reps[x];
            auto [b, sb] = reps[y];
            return class_of(r.add(r.mul(a, sb), r.mul(b, sa)), r.mul(sa, sb));
        },
        [&](Elem x, Elem y) {
            auto [a, sa] = reps[x];
            auto [b, sb] = reps[y];
            return class_of(r.mul(a, b), r.mul(sa, sb));
        },
        [&](Elem x) { return r.label(reps[x].first) + "/" + r.label(reps[x].second); }, lim);

    std::vector<Elem> map(r.order());
    for (Elem x = 0; x < r.order(); ++x) map[x] = class_of(x, r.one());
    auto natural = make_hom(base, ring, std::move(map), "nat:" + ring->spec());
    return Localization{std::move(ring), s, std::move(natural), std::move(reps)};
}

Ideal localize_ideal(const Localization& loc, const Ideal& i) {
    if (!same_ring(i.ring(), loc.s.ring())) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the localized ring's base");
    }
    for (Elem x : i.elements()) {
        if (loc.s.contains(x)) {
            throw Error(ErrorCode::ImproperExtension,
                        "extension needs I such that I∩S=∅; " + i.ring()->label(x) + " is in both");
        }
    }
    std::vector<Elem> gens;
    for (Elem g : i.generators()) gens.push_back(loc.natural(g));
    return ideal_from_generators(loc.ring, gens);
}

Elem TruncatedPolyRing::coefficient(Elem f, unsigned k) const noexcept {
    const auto n = static_cast<Elem>(base->order());
    for (unsigned step = 0; step < k; ++step) f /= n;
    return f % n;
}

TruncatedPolyRing trunc_poly(const RingPtr& base, unsigned t, const Limits& lim) {
    if (t < 2) throw Error(ErrorCode::InvalidOrder, "truncation degree must be >= 2");
    const Ring& r = *base;
    std::size_t order = 1;
    for (unsigned k = 0; k < t; ++k) {
        order *= r.order();
        if (order > lim.max_order) {
            throw Error(ErrorCode::OrderBoundExceeded,
                        "TP(" + r.spec() + "," + std::to_string(t) + ") exceeds the order bound");
        }
    }
    const auto n = static_cast<Elem>(r.order());
    auto decode = [n, t](Elem x) {
        std::vector<Elem> c(t);
        for (unsigned k = 0; k < t; ++k) {
            c[k] = x % n;
            x /= n;
        }
        return c;
    };
    auto encode = [n, t](const std::vector<Elem>& c) {
        Elem x = 0;
        for (unsigned k = t; k-- > 0;) x = x * n + c[k];
        return x;
    };
    auto ring = Ring::tabulate(
        "TP(" + r.spec() + "," + std::to_string(t) + ")", order, r.zero(), r.one(),
        [&](Elem x, Elem y) {
            auto a = decode(x);
            auto b = decode(y);
            for (unsigned k = 0; k < t; ++k) a[k] = r.add(a[k], b[k]);
            return encode(a);
        },
        [&](Elem x, Elem y) {
            auto a = decode(x);
            auto b = decode(y);
            std::vector<Elem> c(t, r.zero());
            for (unsigned i = 0; i < t; ++i) {
                for (unsigned j = 0; i + j < t; ++j) c[i + j] = r.add(c[i + j], r.mul(a[i], b[j]));
            }
            return encode(c);
        },
        [&](Elem x) {
            auto a = decode(x);
            std::string out = "(";
            for (unsigned k = 0; k < t; ++k) {
                if (k) out += ",";
                out += r.label(a[k]);
            }
            return out + ")";
        },
        lim);
    return TruncatedPolyRing{std::move(ring), base, t};
}

Ideal lift_IX(const TruncatedPolyRing& tp, const Ideal& i) {
    if (!same_ring(i.ring(), tp.base)) {
        throw Error(ErrorCode::RingMismatch, "ideal is not in the base of " + tp.ring->spec());
    }
    std::vector<Elem> gens;
    for (Elem g : i.generators()) gens.push_back(tp.constant(g));
    gens.push_back(tp.indeterminate());
    return ideal_from_generators(tp.ring, gens);
}

}  // namespace sdfkit
