#include "sdfkit/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "sdfkit/constructions.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/predicates.hpp"
#include "sdfkit/zint.hpp"

namespace sdfkit {

namespace {

using Clock = std::chrono::steady_clock;

// Rings small enough for checks that build a derived ring per ideal or per set.
constexpr std::size_t kDerivedOrder = 64;

struct Tally {
    std::size_t checked = 0;
    std::size_t cex_count = 0;
    std::vector<Counterexample> cex;
    std::map<std::string, std::size_t> skips;
    std::vector<std::string> notes;

    void fail(Counterexample c) {
        ++cex_count;
        if (cex.size() < kMaxStoredCounterexamples) cex.push_back(std::move(c));
    }
    void skip(const std::string& reason) { ++skips[reason]; }
    void absorb(Tally&& o) {
        checked += o.checked;
        for (auto& c : o.cex) {
            if (cex.size() < kMaxStoredCounterexamples) cex.push_back(std::move(c));
        }
        cex_count += o.cex_count;
        for (auto& [r, n] : o.skips) skips[r] += n;
        for (auto& n : o.notes) notes.push_back(std::move(n));
    }
};

template <class Fn>
Tally over(std::size_t n, unsigned jobs, Fn&& fn) {
    auto parts = parallel_map<Tally>(n, jobs, [&](std::size_t k) {
        Tally t;
        fn(k, t);
        return t;
    });
    Tally out;
    for (auto& p : parts) out.absorb(std::move(p));
    return out;
}

VerifyReport finish(std::string id, Tally&& t, Clock::time_point start) {
    VerifyReport r;
    r.id = std::move(id);
    r.instances_checked = t.checked;
    r.counterexample_count = t.cex_count;
    r.counterexamples = std::move(t.cex);
    for (auto& [reason, n] : t.skips) r.skipped.push_back({reason, n});
    r.notes = std::move(t.notes);
    if (r.counterexample_count > 0) {
        r.status = Status::Refuted;
    } else if (r.instances_checked == 0) {
        r.status = Status::Skipped;
        r.status_reason = r.skipped.empty() ? "no instances in the catalog"
                                            : "every instance failed a hypothesis: " + r.skipped.front().reason;
    }
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

bool quasi(const Ideal& i) { return is_quasi_sdf_absorbing(i).holds; }
bool sdf_primary(const Ideal& i) { return is_sdf_absorbing_primary(i).holds; }

std::string pair_text(const Ring& r, const std::optional<Witness>& w) {
    if (!w) return "";
    return "(" + r.label(w->first) + ", " + r.label(w->second) + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::vector<RingPtr> derived_rings(const Catalog& c) {
    std::vector<RingPtr> out;
    for (const auto& r : c.zn()) {
        if (r->order() <= kDerivedOrder) out.push_back(r);
    }
    for (const auto& p : c.products()) {
        if (p.ring->order() <= kDerivedOrder) out.push_back(p.ring);
    }
    for (const auto& q : c.quotients()) {
        if (q.ring->order() <= kDerivedOrder) out.push_back(q.ring);
    }
    return out;
}

// Least k >= 1 with k * 1 in P, the characteristic of R/P.
std::size_t char_mod(const Ideal& p) {
    const Ring& r = *p.ring();
    for (std::size_t k = 1;; ++k) {
        if (p.contains(r.from_int(k))) return k;
    }
}

bool two_in_radical(const Ideal& i) { return radical(i).contains(i.ring()->from_int(2)); }

}  // namespace

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Refuted: return "refuted";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

VerifyReport verify_remark_rr(const Catalog& c) {
    const auto start = Clock::now();
    const auto& rings = c.rings();
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        for (const auto& i : c.proper(rings[k])) {
            ++t.checked;
            auto f = remark_rr_forms(i);
            if (!f.agree()) {
                t.fail({rings[k]->spec(), {i.describe()}, "",
                        "radical_is_sdf=" + yes(f.radical_is_sdf) + " nonzero_pairs=" + yes(f.nonzero_pairs) +
                            " all_pairs=" + yes(f.all_pairs)});
            }
        }
    });
    return finish("remark-rr", std::move(t), start);
}

VerifyReport verify_comaximal_theorem(const Catalog& c) {
    const auto start = Clock::now();
    const auto& rings = c.rings();
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        std::vector<Ideal> primes;
        for (const auto& i : c.proper(rings[k])) {
            if (is_prime(i).holds) primes.push_back(i);
        }
        if (primes.size() > 12) {
            t.skip("more than 12 primes");
            return;
        }
        for (std::size_t mask = 1; mask < (std::size_t{1} << primes.size()); ++mask) {
            std::vector<const Ideal*> chosen;
            for (std::size_t b = 0; b < primes.size(); ++b) {
                if (mask >> b & 1U) chosen.push_back(&primes[b]);
            }
            bool comaximal = true;
            for (std::size_t a = 0; a < chosen.size() && comaximal; ++a) {
                for (std::size_t b = a + 1; b < chosen.size() && comaximal; ++b) {
                    comaximal = is_comaximal(*chosen[a], *chosen[b]);
                }
            }
            if (!comaximal) {
                t.skip("primes not pairwise comaximal");
                continue;
            }
            Ideal meet = *chosen[0];
            std::size_t odd = 0;
            std::vector<std::string> names;
            for (const Ideal* p : chosen) {
                meet = intersect(meet, *p);
                if (char_mod(*p) != 2) ++odd;
                names.push_back(p->describe());
            }
            ++t.checked;
            auto lhs = is_quasi_sdf_absorbing(meet);
            const bool rhs = odd <= 1;
            if (lhs.holds != rhs) {
                t.fail({rings[k]->spec(), names, pair_text(*rings[k], lhs.witness),
                        "quasi_sdf(intersection)=" + yes(lhs.holds) + " but " + std::to_string(odd) +
                            " factors have characteristic other than 2"});
            }
        }
    });
    return finish("comaximal", std::move(t), start);
}

VerifyReport verify_z_classification(const Catalog& c) {
    const auto start = Clock::now();
    const std::uint64_t hi = c.options().z_range;
    constexpr std::uint64_t kBlock = 500;
    const std::size_t blocks = hi < 2 ? 0 : static_cast<std::size_t>((hi - 2) / kBlock + 1);
    auto t = over(blocks, c.options().jobs, [&](std::size_t k, Tally& t) {
        const std::uint64_t lo = 2 + k * kBlock;
        for (std::uint64_t n = lo; n < lo + kBlock && n <= hi; ++n) {
            ++t.checked;
            const bool thm = zint::classify_z_theorem(n);
            auto oracle = zint::oracle_quasi_sdf_z(n);
            if (thm != oracle.holds) {
                std::string w;
                if (oracle.witness) {
                    w = "(" + std::to_string(oracle.witness->first) + ", " + std::to_string(oracle.witness->second) + ")";
                }
                t.fail({"Z", {std::to_string(n) + "Z"}, w,
                        "factorization rule says " + yes(thm) + ", exhaustive search says " + yes(oracle.holds)});
            }
        }
    });
    for (auto [n, expected] : {std::pair<std::uint64_t, bool>{12, true}, {15, false}}) {
        ++t.checked;
        if (zint::classify_z_theorem(n) != expected) {
            t.fail({"Z", {std::to_string(n) + "Z"}, "", "expected quasi_sdf=" + yes(expected)});
        }
    }
    return finish("z-classification", std::move(t), start);
}

VerifyReport verify_product_theorem(const Catalog& c) {
    const auto start = Clock::now();
    const auto& products = c.products();
    auto t = over(products.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const Product& p = products[k];
        struct Side {
            Ideal ideal;
            bool quasi;
            bool two;
        };
        auto side = [&](const RingPtr& r) {
            std::vector<Side> out;
            for (const auto& i : c.proper(r)) out.push_back({i, quasi(i), two_in_radical(i)});
            return out;
        };
        const auto left = side(p.left);
        const auto right = side(p.right);
        for (const auto& a : left) {
            for (const auto& b : right) {
                ++t.checked;
                auto x = cross_ideal(p, a.ideal, b.ideal);
                auto lhs = is_quasi_sdf_absorbing(x);
                const bool rhs = a.quasi && b.quasi && (a.two || b.two);
                if (lhs.holds != rhs) {
                    t.fail({p.ring->spec(), {a.ideal.describe(), b.ideal.describe()}, pair_text(*p.ring, lhs.witness),
                            "quasi_sdf(I1 x I2)=" + yes(lhs.holds) + ", formula=" + yes(rhs)});
                }
            }
        }
    });

    // The 3Z x 5Z instance, reduced to Z15 x Z15.
    auto z15 = make_zn(15);
    auto p = make_product(z15, z15);
    auto x = cross_ideal(p, principal_ideal(z15, 3), principal_ideal(z15, 5));
    auto rad = radical(x);
    auto lhs = is_quasi_sdf_absorbing(x);
    const Elem xa = p.pair(4, 1);
    const Elem yb = p.pair(1, 4);
    ++t.checked;
    if (lhs.holds || two_in_radical(principal_ideal(z15, 3)) || two_in_radical(principal_ideal(z15, 5))) {
        t.fail({p.ring->spec(), {"(3)", "(5)"}, "", "expected both sides false"});
    }
    ++t.checked;
    if (!sdf_violation(rad, xa, yb)) {
        t.fail({p.ring->spec(), {"(3)", "(5)"}, "((4,1), (1,4))", "pair does not violate the radical"});
    }
    t.notes.push_back(p.ring->spec() + " (3)x(5): x=(4,1), y=(1,4) violates; first witness found " +
                      pair_text(*p.ring, lhs.witness));
    return finish("product", std::move(t), start);
}

VerifyReport verify_hom_transfer(const Catalog& c) {
    const auto start = Clock::now();
    const auto& homs = c.homs();
    auto t = over(homs.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const RingHom& h = homs[k];
        if (h.surjective()) {
            for (const auto& i : c.proper(h.source())) {
                if (!quasi(i)) continue;
                if (!h.kernel().subset_of(radical(i))) {
                    t.skip("kernel not contained in rad(I)");
                    continue;
                }
                ++t.checked;
                auto img = image_ideal(h, i);
                if (!img.is_proper() || !quasi(img)) {
                    t.fail({h.source()->spec(), {i.describe()}, "",
                            "image under " + h.name() + " is " + img.describe() + ", not quasi sdf-absorbing"});
                }
            }
        }
        for (const auto& j : c.proper(h.target())) {
            if (!quasi(j)) continue;
            ++t.checked;
            auto pre = preimage_ideal(h, j);
            auto chk = is_quasi_sdf_absorbing(pre);
            if (!chk.holds) {
                t.fail({h.target()->spec(), {j.describe(), pre.describe()}, pair_text(*h.source(), chk.witness),
                        "preimage under " + h.name() + " is not quasi sdf-absorbing"});
            }
        }
    });
    return finish("hom-transfer", std::move(t), start);
}

VerifyReport verify_quotient_corollary(const Catalog& c) {
    const auto start = Clock::now();
    const auto rings = derived_rings(c);
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const auto ideals = c.proper(rings[k]);
        for (const auto& j : ideals) {
            auto q = make_quotient(j);
            for (const auto& i : ideals) {
                if (!j.subset_of(i)) continue;
                ++t.checked;
                const bool lhs = quasi(i);
                auto img = image_ideal(q.projection, i);
                const bool rhs = quasi(img);
                if (lhs != rhs) {
                    t.fail({rings[k]->spec(), {i.describe(), j.describe()}, "",
                            "quasi_sdf(I)=" + yes(lhs) + " but quasi_sdf(I/J in " + q.ring->spec() + ")=" + yes(rhs)});
                }
            }
        }
    });
    return finish("quotient", std::move(t), start);
}

VerifyReport verify_localization(const Catalog& c) {
    const auto start = Clock::now();
    const auto rings = derived_rings(c);
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const auto ideals = c.proper(rings[k]);
        for (const auto& s : Catalog::cyclic_mult_sets(rings[k])) {
            auto loc = localize(s);
            for (const auto& i : ideals) {
                const bool meets = std::any_of(i.elements().begin(), i.elements().end(),
                                               [&](Elem x) { return s.contains(x); });
                if (meets || !quasi(i)) continue;
                ++t.checked;
                auto ext = localize_ideal(loc, i);
                auto chk = is_quasi_sdf_absorbing(ext);
                if (!chk.holds) {
                    t.fail({rings[k]->spec(), {i.describe()}, pair_text(*loc.ring, chk.witness),
                            "S^-1 I is not quasi sdf-absorbing in " + loc.ring->spec()});
                }
            }
        }
    });
    ++t.checked;
    if (zint::oracle_quasi_sdf_z(15).holds) t.fail({"Z", {"15Z"}, "", "15Z should not be quasi sdf-absorbing"});
    ++t.checked;
    auto z = zint::localize_z(15, {5});
    if (!z.quasi_sdf_theorem || z.quasi_sdf_oracle != std::optional<bool>(true)) {
        t.fail({"Z", {"15Z"}, "", "S^-1(15Z) with S = {5^n} should be quasi sdf-absorbing"});
    }
    return finish("localization", std::move(t), start);
}

VerifyReport verify_colon(const Catalog& c) {
    const auto start = Clock::now();
    const auto rings = derived_rings(c);
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const Ring& r = *rings[k];
        for (const auto& i : c.proper(rings[k])) {
            if (!quasi(i)) continue;
            auto rad = radical(i);
            for (Elem a = 0; a < r.order(); ++a) {
                if (i.contains(a)) continue;
                auto col = colon(i, a);
                const bool hyp = radical(col) == colon(rad, a);
                if (r.mul(a, a) == a) {
                    ++t.checked;
                    if (!hyp) {
                        t.fail({r.spec(), {i.describe()}, r.label(a),
                                "idempotent a but rad(I:a) != (rad I : a)"});
                    }
                }
                if (!hyp) {
                    t.skip("rad(I:a) != (rad I : a)");
                    continue;
                }
                ++t.checked;
                auto chk = is_quasi_sdf_absorbing(col);
                if (!chk.holds) {
                    t.fail({r.spec(), {i.describe(), col.describe()}, pair_text(r, chk.witness),
                            "(I:" + r.label(a) + ") is not quasi sdf-absorbing"});
                }
            }
        }
    });
    // 4Z and a = 2, reduced to Z16, where the hypothesis fails.
    auto z16 = make_zn(16);
    auto i = principal_ideal(z16, 4);
    ++t.checked;
    if (radical(colon(i, 2)) == colon(radical(i), 2)) {
        t.fail({"Z16", {"(4)"}, "2", "expected rad(I:2) != (rad I : 2)"});
    } else {
        t.notes.push_back("Z16 (4), a=2: rad(I:a) = " + radical(colon(i, 2)).describe() +
                          ", (rad I : a) = " + colon(radical(i), 2).describe());
    }
    return finish("colon", std::move(t), start);
}

VerifyReport verify_intersection(const Catalog& c) {
    const auto start = Clock::now();
    const auto& rings = c.rings();
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        std::vector<std::pair<Ideal, Ideal>> qs;
        for (const auto& i : c.proper(rings[k])) {
            if (quasi(i)) qs.emplace_back(i, radical(i));
        }
        for (std::size_t a = 0; a < qs.size(); ++a) {
            for (std::size_t b = a; b < qs.size(); ++b) {
                if (!(qs[a].second == qs[b].second)) continue;
                ++t.checked;
                auto meet = intersect(qs[a].first, qs[b].first);
                auto chk = is_quasi_sdf_absorbing(meet);
                if (!chk.holds) {
                    t.fail({rings[k]->spec(), {qs[a].first.describe(), qs[b].first.describe()},
                            pair_text(*rings[k], chk.witness), "intersection is not quasi sdf-absorbing"});
                }
            }
        }
    });
    return finish("intersection", std::move(t), start);
}

VerifyReport verify_idealization(const Catalog& c) {
    const auto start = Clock::now();
    const auto& idls = c.idealizations();
    auto t = over(idls.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const Idealization& idl = idls[k];
        for (const auto& i : c.proper(idl.module.base())) {
            auto x = idealization_ideal(idl, i);
            ++t.checked;
            auto lhs = radical(x);
            auto rhs = idealization_ideal(idl, radical(i));
            if (!(lhs == rhs)) {
                t.fail({idl.ring->spec(), {i.describe()}, "",
                        "rad(I x M) = " + lhs.describe() + " but rad(I) x M = " + rhs.describe()});
            }
            ++t.checked;
            const bool qx = quasi(x);
            const bool qi = quasi(i);
            if (qx != qi) {
                t.fail({idl.ring->spec(), {i.describe()}, "",
                        "quasi_sdf(I x M)=" + yes(qx) + " but quasi_sdf(I)=" + yes(qi)});
            }
        }
    });
    return finish("idealization", std::move(t), start);
}

VerifyReport verify_amalgamation(const Catalog& c) {
    const auto start = Clock::now();
    const auto& ams = c.amalgamations();
    auto t = over(ams.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const Amalgamation& am = ams[k];
        for (const auto& i : c.proper(am.hom.source())) {
            std::optional<Ideal> x, y;
            try {
                x = amalgamation_ideal(am, i);
                y = amalgamation_ideal(am, radical(i));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotAnIdeal) throw;
                t.skip("I ⋈ J is not an ideal of the amalgamation");
                continue;
            }
            ++t.checked;
            auto rad = radical(*x);
            if (!(rad == *y)) {
                t.fail({am.ring->spec(), {i.describe()}, "",
                        "rad(I ⋈ J) = " + rad.describe() + " but rad(I) ⋈ J = " + y->describe()});
            }
            if (quasi(i)) {
                ++t.checked;
                auto chk = is_quasi_sdf_absorbing(*x);
                if (!chk.holds) {
                    t.fail({am.ring->spec(), {i.describe()}, pair_text(*am.ring, chk.witness),
                            "I quasi sdf-absorbing but I ⋈ J is not"});
                }
            }
        }
    });
    return finish("amalgamation", std::move(t), start);
}

VerifyReport verify_condition_star_suite(const Catalog& c) {
    const auto start = Clock::now();
    const unsigned jobs = c.options().jobs;
    auto star_fail = [](Tally& t, const StarReport& s, const std::string& why) {
        std::vector<std::string> ideals;
        std::string w;
        for (const auto& v : s.violations) {
            ideals.push_back(v.ideal.describe());
            if (w.empty()) w = pair_text(*v.ideal.ring(), v.witness);
        }
        t.fail({s.ring_spec, ideals, w, why});
    };

    // Odd Z_n: 2 is a unit.
    Tally t = over(112, jobs, [&](std::size_t k, Tally& t) {
        const std::size_t n = 3 + 2 * k;
        auto s = satisfies_condition_star(make_zn(n));
        ++t.checked;
        if (!s.satisfied) star_fail(t, s, "2 is a unit but (*) fails");
    });

    const auto& rings = c.rings();
    auto stars = parallel_map<StarReport>(rings.size(), jobs, [&](std::size_t k) {
        return satisfies_condition_star(rings[k]);
    });
    std::map<const Ring*, bool> star_of;
    for (std::size_t k = 0; k < rings.size(); ++k) {
        star_of[rings[k].get()] = stars[k].satisfied;
        const Ring& r = *rings[k];
        const bool two_unit = is_unit(r, r.from_int(2));
        const bool char2 = ring_char(r) == 2;
        if (!two_unit && !char2) continue;
        ++t.checked;
        if (!stars[k].satisfied) star_fail(t, stars[k], two_unit ? "2 is a unit but (*) fails" : "characteristic 2 but (*) fails");
    }
    std::size_t star_rings = 0;
    for (const auto& s : stars) star_rings += s.satisfied;
    t.notes.push_back(std::to_string(star_rings) + " of " + std::to_string(rings.size()) +
                      " catalog rings satisfy (*)");
    auto z144 = satisfies_condition_star(make_zn(144));
    std::string z144_note = "Z144: " + std::to_string(z144.violations.size()) + " violations of (*)";
    for (const auto& v : z144.violations) z144_note += " " + v.ideal.describe();
    t.notes.push_back(z144_note);

    auto holds = [&](const RingPtr& r) {
        auto it = star_of.find(r.get());
        return it != star_of.end() && it->second;
    };

    // Quotients and localizations of (*) rings.
    const auto small = derived_rings(c);
    t.absorb(over(small.size(), jobs, [&](std::size_t k, Tally& t) {
        if (!holds(small[k])) return;
        for (const auto& j : c.proper(small[k])) {
            if (j.is_zero()) continue;
            ++t.checked;
            auto s = satisfies_condition_star(make_quotient(j).ring);
            if (!s.satisfied) star_fail(t, s, "quotient of a (*) ring fails (*)");
        }
        for (const auto& ms : Catalog::cyclic_mult_sets(small[k])) {
            ++t.checked;
            auto s = satisfies_condition_star(localize(ms).ring);
            if (!s.satisfied) star_fail(t, s, "localization of a (*) ring fails (*)");
        }
    }));

    // Surjective images.
    const auto& homs = c.homs();
    t.absorb(over(homs.size(), jobs, [&](std::size_t k, Tally& t) {
        const auto& h = homs[k];
        if (!h.surjective() || !holds(h.source())) return;
        ++t.checked;
        auto s = satisfies_condition_star(h.target());
        if (!s.satisfied) star_fail(t, s, "surjective image under " + h.name() + " fails (*)");
    }));

    // Ideals I x M of R x M over (*) bases.
    const auto& idls = c.idealizations();
    t.absorb(over(idls.size(), jobs, [&](std::size_t k, Tally& t) {
        const auto& idl = idls[k];
        if (!holds(idl.module.base())) return;
        for (const auto& i : c.proper(idl.module.base())) {
            auto x = idealization_ideal(idl, i);
            if (!quasi(x)) continue;
            ++t.checked;
            auto chk = is_sdf_absorbing_primary(x);
            if (!chk.holds) {
                t.fail({idl.ring->spec(), {i.describe()}, pair_text(*idl.ring, chk.witness),
                        "I x M quasi sdf-absorbing but not sdf-absorbing primary"});
            }
        }
    }));

    // Ideals between an sdf-absorbing primary I and its radical, and
    // intersections of sdf-absorbing primary ideals sharing a radical.
    t.absorb(over(rings.size(), jobs, [&](std::size_t k, Tally& t) {
        if (!stars[k].satisfied) return;
        const auto ideals = c.proper(rings[k]);
        std::map<std::vector<Elem>, std::vector<const Ideal*>> by_radical;
        std::vector<Ideal> rads;
        rads.reserve(ideals.size());
        for (const auto& i : ideals) rads.push_back(radical(i));
        for (std::size_t a = 0; a < ideals.size(); ++a) {
            if (!sdf_primary(ideals[a])) continue;
            by_radical[rads[a].elements()].push_back(&ideals[a]);
            for (const auto& j : ideals) {
                if (!ideals[a].subset_of(j) || !j.subset_of(rads[a])) continue;
                ++t.checked;
                auto chk = is_sdf_absorbing_primary(j);
                if (!chk.holds) {
                    t.fail({rings[k]->spec(), {ideals[a].describe(), j.describe()}, pair_text(*rings[k], chk.witness),
                            "I sdf-absorbing primary, I <= J <= rad I, J is not"});
                }
            }
        }
        for (const auto& [rad, group] : by_radical) {
            if (group.size() < 2) continue;
            Ideal all = *group[0];
            for (std::size_t a = 0; a < group.size(); ++a) {
                all = intersect(all, *group[a]);
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    ++t.checked;
                    auto chk = is_sdf_absorbing_primary(intersect(*group[a], *group[b]));
                    if (!chk.holds) {
                        t.fail({rings[k]->spec(), {group[a]->describe(), group[b]->describe()},
                                pair_text(*rings[k], chk.witness), "intersection is not sdf-absorbing primary"});
                    }
                }
            }
            ++t.checked;
            auto chk = is_sdf_absorbing_primary(all);
            if (!chk.holds) {
                t.fail({rings[k]->spec(), {all.describe()}, pair_text(*rings[k], chk.witness),
                        "intersection of the whole family is not sdf-absorbing primary"});
            }
        }
    }));
    return finish("condition-star", std::move(t), start);
}

VerifyReport verify_saturation_lemma(const Catalog& c) {
    const auto start = Clock::now();
    const auto rings = derived_rings(c);
    auto t = over(rings.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const auto ideals = c.proper(rings[k]);
        for (const auto& s : Catalog::cyclic_mult_sets(rings[k])) {
            auto loc = localize(s);
            for (const auto& i : ideals) {
                if (!is_s_saturated(i, s)) continue;
                ++t.checked;
                if (!is_s_saturated(radical(i), s)) {
                    t.fail({rings[k]->spec(), {i.describe()}, "",
                            "rad(I) is not S-saturated for S = " + s.describe()});
                }
                const bool meets = std::any_of(i.elements().begin(), i.elements().end(),
                                               [&](Elem x) { return s.contains(x); });
                if (meets) continue;
                ++t.checked;
                if (!is_sdf_absorbing(localize_ideal(loc, i)).holds) continue;
                auto chk = is_sdf_absorbing(i);
                if (!chk.holds) {
                    t.fail({rings[k]->spec(), {i.describe()}, pair_text(*rings[k], chk.witness),
                            "S = " + s.describe() + ": S^-1 I is sdf-absorbing in " + loc.ring->spec() +
                                " but I is not sdf-absorbing"});
                }
            }
        }
    });
    return finish("saturation", std::move(t), start);
}

VerifyReport verify_trunc_poly(const Catalog& c) {
    const auto start = Clock::now();
    const auto& tps = c.trunc_polys();
    auto t = over(tps.size(), c.options().jobs, [&](std::size_t k, Tally& t) {
        const auto& tp = tps[k];
        for (const auto& i : c.proper(tp.base)) {
            ++t.checked;
            const bool lhs = quasi(lift_IX(tp, i));
            const bool rhs = quasi(i);
            if (lhs != rhs) {
                t.fail({tp.ring->spec(), {i.describe()}, "",
                        "quasi_sdf((I,X))=" + yes(lhs) + " but quasi_sdf(I)=" + yes(rhs)});
            }
        }
    });
    t.notes.push_back("I[x] in R[x] has no finite model; only (I,X) in R[X]/(X^t) is checked");
    return finish("trunc-poly", std::move(t), start);
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "remark-rr",    "comaximal",  "z-classification", "product",        "hom-transfer",
        "quotient",     "localization", "colon",          "intersection",   "idealization",
        "amalgamation", "condition-star", "saturation",   "trunc-poly"};
    return ids;
}

VerifyReport run_verify(std::string_view id, const Catalog& catalog) {
    static const std::map<std::string, std::function<VerifyReport(const Catalog&)>, std::less<>> table = {
        {"remark-rr", verify_remark_rr},
        {"comaximal", verify_comaximal_theorem},
        {"z-classification", verify_z_classification},
        {"product", verify_product_theorem},
        {"hom-transfer", verify_hom_transfer},
        {"quotient", verify_quotient_corollary},
        {"localization", verify_localization},
        {"colon", verify_colon},
        {"intersection", verify_intersection},
        {"idealization", verify_idealization},
        {"amalgamation", verify_amalgamation},
        {"condition-star", verify_condition_star_suite},
        {"saturation", verify_saturation_lemma},
        {"trunc-poly", verify_trunc_poly},
    };
    auto it = table.find(id);
    if (it == table.end()) {
        throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id \"" + std::string(id) + "\"");
    }
    return it->second(catalog);
}

}  // namespace sdfkit
