#include <gtest/gtest.h>

#include "naive.hpp"
#include "sdfkit/error.hpp"
#include "sdfkit/hom.hpp"
#include "sdfkit/predicates.hpp"

using namespace sdfkit;

namespace {

std::vector<bool> mask_of(const Ideal& i) {
    std::vector<bool> m(i.ring()->order());
    for (Elem x = 0; x < m.size(); ++x) m[x] = i.contains(x);
    return m;
}

}  // namespace

TEST(Predicates, FrozenZ12) {
    auto z12 = make_zn(12);
    auto i3 = principal_ideal(z12, 3), i4 = principal_ideal(z12, 4), i6 = principal_ideal(z12, 6);
    EXPECT_TRUE(is_prime(i3).holds);
    EXPECT_TRUE(is_primary(i4).holds);
    EXPECT_FALSE(is_prime(i4).holds);
    auto qp = is_quasi_primary(i6);
    EXPECT_FALSE(qp.holds);
    ASSERT_TRUE(qp.witness);
    EXPECT_EQ(z12->mul(qp.witness->first, qp.witness->second) % 6, 0u);
    EXPECT_TRUE(is_sdf_absorbing(i6).holds);
    EXPECT_TRUE(is_sdf_absorbing_primary(i4).holds);
    EXPECT_TRUE(is_quasi_sdf_absorbing(i4).holds);
    EXPECT_TRUE(is_maximal(principal_ideal(z12, 2)));
    EXPECT_FALSE(is_maximal(i4));
}

TEST(Predicates, IntegerExamples) {
    auto z15 = make_zn(15);
    auto zero = zero_ideal(z15);
    EXPECT_TRUE(sdf_violation(zero, 4, 1));
    EXPECT_FALSE(is_sdf_absorbing(zero).holds);

    auto z225 = make_zn(225);
    EXPECT_FALSE(is_quasi_sdf_absorbing(principal_ideal(z225, 15)).holds);

    auto z144 = make_zn(144);
    auto i12 = principal_ideal(z144, 12);
    EXPECT_TRUE(is_quasi_sdf_absorbing(i12).holds);
    EXPECT_FALSE(is_sdf_absorbing_primary(i12).holds);
    EXPECT_TRUE(sdf_primary_violation(i12, 7, 1));
}

TEST(Predicates, CharacteristicTwo) {
    auto v = make_product(make_zn(2), make_zn(2));
    auto w = make_product(make_zn(2), make_zn(4));
    for (const auto& i : proper_ideals(v.ring)) {
        EXPECT_TRUE(is_quasi_sdf_absorbing(i).holds) << i.describe();
        EXPECT_TRUE(is_sdf_absorbing_primary(i).holds) << i.describe();
    }
    for (const auto& i : proper_ideals(w.ring)) EXPECT_TRUE(remark_rr_agree(i));
}

TEST(Predicates, UnitIdealIsRejected) {
    auto z6 = make_zn(6);
    EXPECT_THROW(is_sdf_absorbing(unit_ideal(z6)), Error);
    EXPECT_THROW(is_prime(unit_ideal(z6)), Error);
}

TEST(Predicates, MatchDirectDefinitionsOnZn) {
    for (std::size_t n = 2; n <= 60; ++n) {
        auto r = make_zn(n);
        for (const auto& i : proper_ideals(r)) {
            const auto m = mask_of(i);
            const auto rad = naive::radical(n, m);
            ASSERT_EQ(is_prime(i).holds, naive::prime(n, m)) << n << i.describe();
            ASSERT_EQ(is_sdf_absorbing(i).holds, naive::sdf(n, m)) << n << i.describe();
            ASSERT_EQ(is_sdf_absorbing_primary(i).holds, naive::sdf_primary(n, m)) << n << i.describe();
            ASSERT_EQ(is_quasi_sdf_absorbing(i).holds, naive::sdf(n, rad)) << n << i.describe();
            ASSERT_EQ(is_quasi_primary(i).holds, naive::prime(n, rad)) << n << i.describe();
        }
    }
}

TEST(Predicates, WitnessesAreGenuine) {
    for (std::size_t n = 2; n <= 48; ++n) {
        auto r = make_zn(n);
        for (const auto& i : proper_ideals(r)) {
            if (auto c = is_sdf_absorbing(i); !c.holds) {
                ASSERT_TRUE(c.witness);
                EXPECT_TRUE(sdf_violation(i, c.witness->first, c.witness->second));
            }
            if (auto c = is_sdf_absorbing_primary(i); !c.holds) {
                ASSERT_TRUE(c.witness);
                EXPECT_TRUE(sdf_primary_violation(i, c.witness->first, c.witness->second));
            }
        }
    }
}

TEST(Predicates, Implications) {
    for (std::size_t n = 2; n <= 80; ++n) {
        auto r = make_zn(n);
        for (const auto& i : proper_ideals(r)) {
            const bool prime = is_prime(i).holds;
            const bool sdfp = is_sdf_absorbing_primary(i).holds;
            const bool qsdf = is_quasi_sdf_absorbing(i).holds;
            if (prime) EXPECT_TRUE(sdfp);
            if (sdfp) EXPECT_TRUE(qsdf) << n << i.describe();
            if (is_quasi_primary(i).holds) EXPECT_TRUE(qsdf);
            if (is_primary(i).holds) EXPECT_TRUE(is_quasi_primary(i).holds);
        }
    }
}

TEST(Predicates, RemarkFormsAgree) {
    for (std::size_t n = 2; n <= 36; ++n) {
        for (const auto& i : proper_ideals(make_zn(n))) EXPECT_TRUE(remark_rr_agree(i)) << n << i.describe();
    }
    EXPECT_TRUE(remark_rr_agree(zero_ideal(make_zn(7))));
}

TEST(Predicates, ConditionStar) {
    EXPECT_TRUE(satisfies_condition_star(make_zn(9)).satisfied);
    EXPECT_TRUE(satisfies_condition_star(make_zn(15)).satisfied);
    EXPECT_TRUE(satisfies_condition_star(make_zn(25)).satisfied);
    EXPECT_TRUE(satisfies_condition_star(make_product(make_zn(2), make_zn(2)).ring).satisfied);
    auto z144 = satisfies_condition_star(make_zn(144));
    EXPECT_FALSE(z144.satisfied);
    bool has12 = false;
    for (const auto& v : z144.violations) {
        has12 = has12 || v.ideal.describe() == "(12)";
        EXPECT_TRUE(sdf_primary_violation(v.ideal, v.witness.first, v.witness.second));
    }
    EXPECT_TRUE(has12);
}

TEST(Predicates, TwoUnitEquivalence) {
    for (std::size_t n : {9u, 15u, 21u, 45u}) {
        for (const auto& i : proper_ideals(make_zn(n))) EXPECT_TRUE(two_unit_equivalence(i)) << n << i.describe();
    }
    try {
        two_unit_equivalence(principal_ideal(make_zn(12), 4));
        ADD_FAILURE() << "expected TwoNotUnit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TwoNotUnit);
    }
}
