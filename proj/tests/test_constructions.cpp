#include <gtest/gtest.h>

#include <set>

#include "sdfkit/constructions.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/predicates.hpp"

using namespace sdfkit;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

// Number of fraction classes r/s, with r/s ~ r'/s' iff u(rs' - r's) = 0 for some u in S.
std::size_t fraction_classes(const Ring& r, const std::vector<Elem>& s) {
    std::vector<std::pair<Elem, Elem>> reps;
    for (Elem a = 0; a < r.order(); ++a) {
        for (Elem sa : s) {
            bool seen = false;
            for (auto [b, sb] : reps) {
                const Elem d = r.sub(r.mul(a, sb), r.mul(b, sa));
                for (Elem u : s) seen = seen || r.mul(u, d) == 0;
                if (seen) break;
            }
            if (!seen) reps.emplace_back(a, sa);
        }
    }
    return reps.size();
}

}  // namespace

TEST(Idealization, Orders) {
    auto z4 = make_zn(4);
    auto i4 = idealize(ModuleSpec::self(z4));
    EXPECT_EQ(i4.ring->order(), 16u);
    EXPECT_EQ(ring_char(*i4.ring), 4u);
    EXPECT_EQ(check_ring_axioms(*i4.ring), "");
    auto i2 = idealize(ModuleSpec::self(make_zn(2)));
    EXPECT_EQ(i2.ring->order(), 4u);
    EXPECT_EQ(ring_char(*i2.ring), 2u);
    auto z6 = make_zn(6);
    auto q = idealize(ModuleSpec::quotient_by(principal_ideal(z6, 3)));
    EXPECT_EQ(q.ring->order(), 18u);
    EXPECT_EQ(check_ring_axioms(*q.ring), "");
}

TEST(Idealization, MultiplicationRule) {
    auto z6 = make_zn(6);
    auto idl = idealize(ModuleSpec::quotient_by(principal_ideal(z6, 2)));
    for (Elem x = 0; x < idl.ring->order(); ++x) {
        for (Elem y = 0; y < idl.ring->order(); ++y) {
            const Elem r1 = idl.base_part(x), m1 = idl.module_part(x);
            const Elem r2 = idl.base_part(y), m2 = idl.module_part(y);
            const Elem m = (r1 * m2 + r2 * m1) % 2;
            ASSERT_EQ(idl.ring->mul(x, y), idl.pair(r1 * r2 % 6, m));
        }
    }
}

TEST(Idealization, IdealsAndRadicals) {
    auto z4 = make_zn(4);
    auto idl = idealize(ModuleSpec::self(z4));
    auto i2 = idealization_ideal(idl, principal_ideal(z4, 2));
    EXPECT_EQ(i2.size(), 8u);
    auto i0 = idealization_ideal(idl, zero_ideal(z4));
    EXPECT_EQ(i0.size(), 4u);
    for (Elem x : i0.elements()) EXPECT_EQ(idl.base_part(x), 0u);
    for (std::size_t n = 2; n <= 8; ++n) {
        auto base = make_zn(n);
        auto d = idealize(ModuleSpec::self(base));
        for (const auto& i : proper_ideals(base)) {
            auto lhs = radical(idealization_ideal(d, i));
            auto rhs = idealization_ideal(d, radical(i));
            EXPECT_EQ(lhs.elements(), rhs.elements()) << n << i.describe();
        }
    }
}

TEST(Amalgamation, Carriers) {
    auto z12 = make_zn(12);
    auto a = amalgamate(identity_hom(z12), principal_ideal(z12, 4));
    EXPECT_EQ(a.ring->order(), 36u);
    EXPECT_EQ(check_ring_axioms(*a.ring), "");
    EXPECT_EQ(amalgamate(identity_hom(z12), zero_ideal(z12)).ring->order(), 12u);

    auto z4 = make_zn(4);
    auto b = amalgamate(canonical_hom(z12, z4), principal_ideal(z4, 2));
    EXPECT_EQ(b.ring->order(), 24u);
    std::set<std::pair<Elem, Elem>> expected;
    for (Elem r = 0; r < 12; ++r) {
        for (Elem j : {0u, 2u}) expected.emplace(r, (r % 4 + j) % 4);
    }
    const std::set<std::pair<Elem, Elem>> got(b.carrier.begin(), b.carrier.end());
    EXPECT_EQ(got, expected);
}

TEST(Amalgamation, RadicalIdentity) {
    auto z12 = make_zn(12);
    auto a = amalgamate(identity_hom(z12), principal_ideal(z12, 4));
    auto i = amalgamation_ideal(a, principal_ideal(z12, 4));
    EXPECT_EQ(radical(i).elements(), amalgamation_ideal(a, principal_ideal(z12, 2)).elements());
    auto zero = amalgamation_ideal(a, zero_ideal(z12));
    for (Elem x : zero.elements()) EXPECT_EQ(a.carrier[x].first, 0u);
    EXPECT_EQ(zero.size(), 3u);
}

TEST(Localization, Examples) {
    auto z12 = make_zn(12);
    auto s3 = MultSet::generated(z12, {3});
    auto loc = localize(s3);
    EXPECT_EQ(loc.ring->order(), 4u);
    EXPECT_EQ(ring_char(*loc.ring), 4u);
    EXPECT_EQ(localize(MultSet::generated(z12, {1})).ring->order(), 12u);
    EXPECT_EQ(code_of([&] { localize(MultSet::generated(z12, {6})); }), ErrorCode::ZeroRingResult);

    auto i4 = localize_ideal(loc, principal_ideal(z12, 4));
    EXPECT_TRUE(i4.is_proper());
    EXPECT_TRUE(localize_ideal(loc, zero_ideal(z12)).is_zero());
    EXPECT_EQ(code_of([&] { localize_ideal(loc, principal_ideal(z12, 3)); }), ErrorCode::ImproperExtension);
}

TEST(Localization, OrderMatchesFractionClasses) {
    for (std::size_t n = 2; n <= 30; ++n) {
        auto r = make_zn(n);
        for (Elem g = 1; g < n; ++g) {
            auto s = MultSet::generated(r, {g});
            if (s.contains(0)) continue;
            auto loc = localize(s);
            ASSERT_EQ(loc.ring->order(), fraction_classes(*r, s.elements())) << n << " " << g;
            EXPECT_EQ(check_ring_axioms(*loc.ring), "");
        }
    }
}

TEST(TruncatedPoly, Basics) {
    auto tp = trunc_poly(make_zn(4), 2);
    EXPECT_EQ(tp.ring->order(), 16u);
    EXPECT_EQ(check_ring_axioms(*tp.ring), "");
    const Elem x = tp.indeterminate();
    EXPECT_EQ(tp.ring->mul(x, x), 0u);
    EXPECT_EQ(tp.coefficient(x, 1), 1u);

    auto z12 = make_zn(12);
    auto t12 = trunc_poly(z12, 2);
    auto lifted = lift_IX(t12, principal_ideal(z12, 4));
    for (Elem f = 0; f < t12.ring->order(); ++f) EXPECT_EQ(lifted.contains(f), t12.coefficient(f, 0) % 4 == 0);
    auto rad = radical(lifted);
    for (Elem f = 0; f < t12.ring->order(); ++f) EXPECT_EQ(rad.contains(f), t12.coefficient(f, 0) % 2 == 0);
}

TEST(TruncatedPoly, LiftOfZeroMatchesNilradical) {
    for (std::size_t n = 2; n <= 12; ++n) {
        auto base = make_zn(n);
        auto tp = trunc_poly(base, 2);
        auto x = lift_IX(tp, zero_ideal(base));
        EXPECT_EQ(x.size(), n);
        EXPECT_EQ(is_quasi_sdf_absorbing(x).holds, is_quasi_sdf_absorbing(zero_ideal(base)).holds) << n;
    }
}
