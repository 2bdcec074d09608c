#include <gtest/gtest.h>

#include <set>

#include "sdfkit/error.hpp"
#include "sdfkit/fpoly.hpp"

using namespace sdfkit;
using namespace sdfkit::fpoly;

namespace {

FpPoly P(std::uint32_t p, std::string_view s) { return FpPoly::parse(p, s); }

// Monic polynomials of degree d over F_p with no root and no factor of degree <= d/2,
// found by multiplying out all lower-degree monic pairs.
std::vector<FpPoly> irreducibles_by_sieve(std::uint32_t p, unsigned d) {
    auto monics = [&](unsigned deg) {
        std::vector<FpPoly> out;
        std::uint64_t count = 1;
        for (unsigned k = 0; k < deg; ++k) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::int64_t> c(deg + 1);
            auto k = idx;
            for (unsigned i = 0; i < deg; ++i, k /= p) c[i] = static_cast<std::int64_t>(k % p);
            c[deg] = 1;
            out.emplace_back(p, c);
        }
        return out;
    };
    std::set<FpPoly> composite;
    for (unsigned a = 1; a <= d / 2; ++a) {
        for (const auto& f : monics(a)) {
            for (const auto& g : monics(d - a)) composite.insert(mul(f, g));
        }
    }
    std::vector<FpPoly> out;
    for (const auto& f : monics(d)) {
        if (!composite.count(f)) out.push_back(f);
    }
    return out;
}

}  // namespace

TEST(Fpoly, ParseAndPrint) {
    EXPECT_EQ(P(3, "x^2+1").str(), "1+x^2");
    EXPECT_EQ(P(3, "x^2+x").coefficients(), (std::vector<std::uint32_t>{0, 1, 1}));
    EXPECT_EQ(P(5, "-x"), FpPoly(5, {0, 4}));
    EXPECT_EQ(P(5, "2*x^3 + 3x"), FpPoly(5, {0, 3, 0, 2}));
    EXPECT_TRUE(P(3, "3").is_zero());
    EXPECT_EQ(FpPoly::zero(3).str(), "0");
    EXPECT_EQ(FpPoly(3, {4, 0, 0}).degree(), 0);
    EXPECT_THROW(P(3, "x^"), Error);
}

TEST(Fpoly, Arithmetic) {
    EXPECT_EQ(gcd(P(3, "x^2-1"), P(3, "x-1")), P(3, "x+2"));
    auto [q, r] = divmod(P(3, "x^3"), P(3, "x"));
    EXPECT_EQ(q, P(3, "x^2"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(eval(P(3, "x^2+1"), 1), 2u);
    EXPECT_THROW(divmod(P(3, "x"), FpPoly::zero(3)), Error);
    EXPECT_THROW(add(P(3, "x"), P(5, "x")), Error);
    EXPECT_EQ(monic(P(5, "2x+4")), P(5, "x+2"));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        auto a = P(p, "x^3+2x+1"), b = P(p, "x^2+x+1");
        auto [qq, rr] = divmod(a, b);
        EXPECT_EQ(add(mul(qq, b), rr), a);
        EXPECT_LT(rr.degree(), b.degree());
        EXPECT_EQ(sub(a, a), FpPoly::zero(p));
    }
}

TEST(Fpoly, Factorization) {
    EXPECT_TRUE(is_irreducible(P(3, "x^2+1")));
    for (std::uint32_t v = 0; v < 3; ++v) EXPECT_NE(eval(P(3, "x^2+1"), v), 0u);
    EXPECT_EQ(factorize_fp(P(3, "x^2-1")), (Factorization{{P(3, "x+1"), 1}, {P(3, "x+2"), 1}}));
    EXPECT_EQ(factorize_fp(P(3, "x^2")), (Factorization{{P(3, "x"), 2}}));
    EXPECT_EQ(radical_part(P(3, "x^2")), P(3, "x"));
    EXPECT_EQ(radical_part(mul(P(5, "x^2"), P(5, "x+1"))), mul(P(5, "x"), P(5, "x+1")));
    EXPECT_EQ(radical_part(P(5, "2x^2+2")), P(5, "x^2+1"));
    EXPECT_THROW(factorize_fp(FpPoly(3, std::vector<std::int64_t>(14, 1))), Error);
}

TEST(Fpoly, IrreducibleCountsMatchSieve) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 4; ++d) EXPECT_EQ(irreducibles(p, d), irreducibles_by_sieve(p, d)) << p << " " << d;
    }
    // Necklace counts: (1/d) sum mu(d/e) p^e.
    EXPECT_EQ(irreducibles(2, 5).size(), 6u);
    EXPECT_EQ(irreducibles(3, 5).size(), 48u);
    EXPECT_EQ(irreducibles(7, 3).size(), 112u);
}

TEST(Fpoly, FactorizationRoundTrip) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto& lin = irreducibles(p, 1);
        const auto& quad = irreducibles(p, 2);
        for (const auto& a : lin) {
            for (const auto& b : quad) {
                auto f = mul(mul(a, a), mul(b, a));
                FpPoly prod = FpPoly::constant(p, 1);
                for (auto [g, e] : factorize_fp(f)) {
                    EXPECT_TRUE(is_irreducible(g));
                    for (unsigned k = 0; k < e; ++k) prod = mul(prod, g);
                }
                EXPECT_EQ(prod, f);
            }
        }
    }
}

TEST(Fpoly, ClassifyPrincipal) {
    auto c = classify_principal(P(3, "x^2"));
    EXPECT_TRUE(c.quasi_sdf && c.sdf_primary && c.quasi_primary);
    auto d = classify_principal(P(3, "x^2+x"));
    EXPECT_FALSE(d.quasi_sdf || d.sdf_primary || d.quasi_primary);
    auto e = classify_principal(P(2, "x^2+x"));
    EXPECT_TRUE(e.quasi_sdf);
    EXPECT_TRUE(e.sdf_primary);
    EXPECT_FALSE(e.quasi_primary);
    try {
        classify_principal(P(3, "2"));
        ADD_FAILURE();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::ConstantPolynomial);
    }
}

TEST(Fpoly, Sampler) {
    auto s = sample_check_principal(P(3, "x^2+x"), 2, kSampleBudget);
    ASSERT_TRUE(s.quasi_sdf_witness);
    EXPECT_FALSE(s.contradiction());
    EXPECT_TRUE(s.complete);
    // The witness really violates: f | a^2 - b^2, while x(x+1) divides neither a - b nor a + b.
    const auto f = P(3, "x^2+x");
    auto [a, b] = *s.quasi_sdf_witness;
    EXPECT_TRUE(divmod(sub(mul(a, a), mul(b, b)), f).second.is_zero());
    EXPECT_FALSE(divmod(sub(a, b), f).second.is_zero());
    EXPECT_FALSE(divmod(add(a, b), f).second.is_zero());

    auto t = sample_check_principal(P(3, "x^2"), 2, kSampleBudget);
    EXPECT_FALSE(t.quasi_sdf_witness || t.sdf_primary_witness || t.quasi_primary_witness);
    EXPECT_FALSE(t.contradiction());
    auto u = sample_check_principal(P(5, "x^2+2"), 4, kSampleBudget);
    EXPECT_FALSE(u.contradiction());
    EXPECT_FALSE(u.quasi_sdf_witness);

    auto tiny = sample_check_principal(P(5, "x^4+x"), 4, 10);
    EXPECT_TRUE(tiny.budget_exhausted);
    EXPECT_FALSE(tiny.complete);
}

TEST(Fpoly, SweepAgreesWithCriterion) {
    for (std::uint32_t p : {2u, 3u}) {
        for (unsigned d = 1; d <= 3; ++d) {
            std::uint64_t count = 1;
            for (unsigned k = 0; k < d; ++k) count *= p;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::int64_t> c(d + 1);
                auto k = idx;
                for (unsigned i = 0; i < d; ++i, k /= p) c[i] = static_cast<std::int64_t>(k % p);
                c[d] = 1;
                FpPoly f(p, c);
                const bool single = factorize_fp(f).size() == 1;
                auto v = classify_principal(f);
                EXPECT_EQ(v.quasi_primary, single) << f.str();
                if (p == 2) {
                    EXPECT_TRUE(v.quasi_sdf && v.sdf_primary);
                } else {
                    EXPECT_EQ(v.quasi_sdf, single);
                    EXPECT_EQ(v.sdf_primary, single);
                }
                EXPECT_FALSE(sample_check_principal(f, 3, kSampleBudget).contradiction()) << f.str();
            }
        }
    }
}
