#include <gtest/gtest.h>

#include "naive.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/zint.hpp"

using namespace sdfkit;
using namespace sdfkit::zint;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

bool odd_prime_count_at_most_one(std::uint64_t n) {
    unsigned odd = 0;
    for (std::uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p) continue;
        ++odd;
        while (n % p == 0) n /= p;
    }
    while (n % 2 == 0) n /= 2;
    return odd + (n > 1) <= 1;
}

}  // namespace

TEST(Zint, Factorize) {
    EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
    EXPECT_EQ(factorize(105), (Factorization{{3, 1}, {5, 1}, {7, 1}}));
    EXPECT_EQ(factorize(std::uint64_t{1} << 62), (Factorization{{2, 62}}));
    EXPECT_EQ(factorize(600851475143ULL), (Factorization{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}}));
    EXPECT_EQ(factorize(1000000007ULL * 998244353ULL), (Factorization{{998244353, 1}, {1000000007, 1}}));
    EXPECT_EQ(format_factorization(factorize(12)), "2^2*3");
    EXPECT_THROW(factorize(1), Error);
}

TEST(Zint, FactorizeRoundTrip) {
    for (std::uint64_t n = 2; n <= 5000; ++n) {
        std::uint64_t prod = 1;
        for (auto [p, e] : factorize(n)) {
            EXPECT_TRUE(is_prime(p));
            prod *= ipow(p, e);
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(Zint, WorkedExamples) {
    EXPECT_TRUE(classify_z_theorem(12));
    EXPECT_FALSE(classify_z_theorem(15));
    EXPECT_TRUE(classify_z_theorem(9));

    auto q15 = oracle_quasi_sdf_z(15);
    EXPECT_FALSE(q15.holds);
    EXPECT_EQ(q15.witness, (IntWitness{4, 1}));
    EXPECT_TRUE(oracle_quasi_sdf_z(12).holds);
    EXPECT_TRUE(oracle_quasi_sdf_z(1024).holds);

    auto p12 = oracle_sdf_primary_z(12);
    EXPECT_FALSE(p12.holds);
    EXPECT_EQ(p12.witness, (IntWitness{7, 1}));
    EXPECT_TRUE(oracle_sdf_primary_z(4).holds);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 97u, 7919u}) EXPECT_TRUE(oracle_sdf_primary_z(p).holds) << p;
}

TEST(Zint, Localization) {
    auto c = localize_z(15, {5});
    EXPECT_EQ(c.n, 3u);
    EXPECT_TRUE(c.quasi_sdf_theorem);
    EXPECT_EQ(localize_z(12, {}).quasi_sdf_theorem, classify_z(12).quasi_sdf_theorem);
    try {
        localize_z(15, {3, 5});
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnitIdealResult);
    }
}

TEST(Zint, OraclesMatchPairLoops) {
    for (std::uint64_t n = 2; n <= 400; ++n) {
        ASSERT_EQ(oracle_quasi_sdf_z(n).holds, naive::int_quasi_sdf(n)) << n;
        ASSERT_EQ(oracle_sdf_primary_z(n).holds, naive::int_sdf_primary(n)) << n;
        ASSERT_EQ(oracle_sdf_z(n).holds, naive::int_sdf(n)) << n;
    }
}

TEST(Zint, TheoremMatchesOracle) {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        ASSERT_EQ(classify_z_theorem(n), oracle_quasi_sdf_z(n).holds) << n;
        ASSERT_EQ(classify_z_theorem(n), odd_prime_count_at_most_one(n)) << n;
    }
}

TEST(Zint, Invariants) {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        auto c = classify_z(n);
        if (c.sdf_primary_oracle.value()) EXPECT_TRUE(c.quasi_sdf_oracle.value()) << n;
        if (c.quasi_primary) EXPECT_TRUE(c.quasi_sdf_theorem) << n;
        EXPECT_EQ(c.quasi_primary, c.factorization.size() == 1) << n;
    }
}

TEST(Zint, FourQPowers) {
    for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u}) {
        for (unsigned m = 1; m <= 3; ++m) {
            const auto n = 4 * ipow(q, m);
            auto c = classify_z(n);
            EXPECT_TRUE(c.quasi_sdf_theorem) << n;
            EXPECT_FALSE(c.sdf_primary_oracle.value()) << n;
            // The explicit pair a = 2q^m + 1, b = 1.
            const auto a = 2 * ipow(q, m) + 1;
            EXPECT_EQ((a * a - 1) % n, 0u);
            EXPECT_NE((a - 1) % n, 0u);
            EXPECT_NE((a + 1) % (2 * q), 0u);
        }
    }
}

TEST(Zint, OracleBound) {
    EXPECT_THROW(oracle_sdf_z(kOracleBound + 1), Error);
    auto c = classify_z((std::uint64_t{1} << 62) + 1);
    EXPECT_FALSE(c.sdf_oracle.has_value());
}
