#include <gtest/gtest.h>

#include "binlab/congruence.hpp"
#include "binlab/conjecture.hpp"
#include "binlab/oracle.hpp"

using namespace binlab;

TEST(HalfWeightSum, Divisibility)
{
    const auto r = check_conjecture_1_1_divisibility(5, 1, 3);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.modulus, 25u);
    EXPECT_EQ(r.observed, 0);
    EXPECT_TRUE(check_conjecture_1_1_divisibility(5, 2, 13).holds);
    EXPECT_EQ(check_conjecture_1_1_divisibility(5, 2, 13).modulus, 125u);
    EXPECT_THROW(check_conjecture_1_1_divisibility(3, 1, 2), std::invalid_argument);
    EXPECT_THROW(check_conjecture_1_1_divisibility(5, 1, 2), std::invalid_argument);
}

TEST(HalfWeightSum, DivisibilityMatchesExactSum)
{
    for (u64 p : {3u, 5u, 7u}) {
        for (i64 h : conjecture_1_1_lifts(p)) {
            const unsigned a = p == 3 ? 2 : 1;
            const u64 n = checked_power(p, a);
            const auto exact = oracle::exact_weighted_sum(h, n, oracle::ExactRational(-h, 2));
            const auto v = oracle::rational_valuation(exact, p);
            EXPECT_TRUE(!v || *v >= static_cast<long>(a) + 1) << p << " " << h;
            EXPECT_TRUE(check_conjecture_1_1_divisibility(p, a, h).holds);
        }
    }
}

TEST(HalfWeightSum, Lifts)
{
    EXPECT_EQ(conjecture_1_1_lifts(5), (std::vector<i64>{3, 8, 13, 18, 23}));
    for (i64 h : conjecture_1_1_lifts(13)) EXPECT_EQ((2 * h) % 13, 1);
}

TEST(HalfWeightSum, Integrality)
{
    const auto r = check_conjecture_1_1_integrality(3, 3, 2);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.observed, 1);
    EXPECT_EQ(r.expected, 1);
    EXPECT_TRUE(check_conjecture_1_1_integrality(3, 1, 2).holds);
    EXPECT_TRUE(check_conjecture_1_1_integrality(5, 25, 3).holds);
    for (u64 n = 1; n <= 40; ++n) EXPECT_TRUE(check_conjecture_1_1_integrality(7, n, 4).holds) << n;
}

TEST(CubicRefinement, AllPrimesAboveThree)
{
    const auto r5 = check_conjecture_1_2(5);
    EXPECT_TRUE(r5.holds);
    EXPECT_EQ(r5.expected, 45);
    EXPECT_EQ(r5.modulus, 125u);
    EXPECT_EQ(check_conjecture_1_2(7).expected, 42);
    EXPECT_THROW(check_conjecture_1_2(3), std::invalid_argument);
}

TEST(CubicRefinement, RestrictedPrimeClasses)
{
    EXPECT_TRUE(check_conjecture_1_3(11).holds);
    EXPECT_THROW(check_conjecture_1_3(5), std::invalid_argument);
    EXPECT_TRUE(check_conjecture_1_4(7).holds);
    EXPECT_THROW(check_conjecture_1_4(5), std::invalid_argument);
}

TEST(ConjectureWeakened, HoldsModP2)
{
    for (u64 p : odd_primes(5, 61)) {
        EXPECT_TRUE(weakened_mod_p2_check("1.2", p).holds) << p;
        if (!conjecture_precondition_failure("1.3", p)) EXPECT_TRUE(weakened_mod_p2_check("1.3", p).holds) << p;
        if (!conjecture_precondition_failure("1.4", p)) EXPECT_TRUE(weakened_mod_p2_check("1.4", p).holds) << p;
    }
    const auto w = weakened_mod_p2_check("1.2", 17);
    EXPECT_EQ(w.strength, Strength::ModP2);
    EXPECT_EQ(w.modulus, 289u);
}

TEST(ConjectureWeakened, FullReductionAgreesModP2)
{
    for (u64 p : {11u, 13u, 23u}) {
        const auto full = check_conjecture_1_3(p);
        const auto weak = weakened_mod_p2_check("1.3", p);
        ASSERT_TRUE(full.observed && weak.observed);
        EXPECT_EQ(*full.observed % static_cast<i64>(p * p), *weak.observed);
    }
}

TEST(ConjectureScan, OrderingAndSkips)
{
    ConjectureScanRequest req;
    req.id = "1.3";
    req.p_min = 11;
    req.p_max = 37;
    std::vector<u64> checked;
    for (const auto& e : scan_conjecture(req)) {
        if (!e.report) {
            EXPECT_FALSE(e.skipped_reason.empty());
            continue;
        }
        if (e.report->strength == Strength::Full) checked.push_back(e.p);
        EXPECT_TRUE(e.report->holds);
    }
    EXPECT_EQ(checked, (std::vector<u64>{11, 13, 23, 37}));
    EXPECT_THROW(scan_conjecture({"9.9", 3, 5, 1, 0, 10}), std::invalid_argument);
    EXPECT_TRUE(is_conjecture_id("1.1-int"));
    EXPECT_FALSE(is_conjecture_id("1.7"));
}

TEST(ConjectureScan, DivisibilityScanCoversLifts)
{
    ConjectureScanRequest req;
    req.id = "1.1";
    req.p_min = 5;
    req.p_max = 13;
    req.a_max = 2;
    std::size_t reports = 0;
    for (const auto& e : scan_conjecture(req)) {
        ASSERT_TRUE(e.report);
        EXPECT_TRUE(e.report->holds);
        ++reports;
    }
    EXPECT_EQ(reports, 2u * (5 + 7 + 11 + 13));
}
