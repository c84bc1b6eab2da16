#include <gtest/gtest.h>

#include "binlab/binomial.hpp"
#include "binlab/congruence.hpp"
#include "binlab/crosscheck.hpp"
#include "binlab/oracle.hpp"

using namespace binlab;
using oracle::BigInt;
using oracle::ExactRational;

TEST(Oracle, ExactBinom)
{
    EXPECT_EQ(oracle::exact_binom(17, 0), 1);
    EXPECT_EQ(oracle::exact_binom(-4, 2), 10);
    EXPECT_EQ(oracle::exact_binom(6, 3), 20);
    EXPECT_EQ(oracle::exact_binom(3, 5), 0);
    EXPECT_EQ(oracle::exact_binom(-1, 7), -1);
}

TEST(Oracle, PascalRule)
{
    for (i64 n = -40; n <= 40; ++n) {
        for (u64 k = 1; k <= 40; ++k) {
            ASSERT_EQ(oracle::exact_binom(n, k), oracle::exact_binom(n - 1, k - 1) + oracle::exact_binom(n - 1, k))
                << n << " " << k;
        }
    }
}

TEST(Oracle, ExactWeightedSum)
{
    EXPECT_EQ(oracle::exact_weighted_sum(1, 1, ExactRational(7, 3)), 1);
    EXPECT_EQ(oracle::exact_weighted_sum(2, 3, -1), 51);
    EXPECT_EQ(oracle::exact_weighted_sum(1, 3, ExactRational(-1, 2)), ExactRational(1, 2));
}

TEST(Oracle, ReduceMod)
{
    const PrimeContext ctx9(3, 1, 2);
    EXPECT_EQ(oracle::reduce_mod(ExactRational(1, 2), ctx9).value, 5u);
    EXPECT_EQ(oracle::reduce_mod(ExactRational(51), PrimeContext(3, 1, 3)).value, 24u);
    EXPECT_THROW(oracle::reduce_mod(ExactRational(1, 3), ctx9), NotInvertible);
    EXPECT_EQ(oracle::reduce_mod(BigInt(-1), ctx9).value, 8u);
}

TEST(Oracle, RationalValuation)
{
    EXPECT_EQ(oracle::rational_valuation(ExactRational(51), 3), 1);
    EXPECT_EQ(oracle::rational_valuation(ExactRational(1, 2), 3), 0);
    EXPECT_EQ(oracle::rational_valuation(ExactRational(0), 5), std::nullopt);
    EXPECT_EQ(oracle::rational_valuation(ExactRational(2, 75), 5), -2);
}

TEST(Oracle, CentralConsistency)
{
    for (u64 p : {3u, 7u, 13u, 31u}) {
        const PrimeContext ctx(p, 2, 3);
        const BinomTable table(ctx);
        for (u64 k = 0; k < table.size(); k += 3) {
            ASSERT_EQ(table.central_residue(k),
                      oracle::reduce_mod(oracle::exact_binom(static_cast<i64>(2 * k), k), ctx));
        }
    }
}

TEST(Oracle, CrossValidatesFastPath)
{
    const auto records = run_crosscheck(200, 20240611);
    ASSERT_EQ(records.size(), 200u);
    for (const auto& r : records) {
        EXPECT_LE(r.p, 31u);
        EXPECT_LE(r.modulus, 400u * 400u);
        EXPECT_TRUE(r.holds) << "p=" << r.p << " a=" << r.a << " h=" << r.h << " z=" << r.z_num << "/" << r.z_den;
    }
}

TEST(Oracle, CrosscheckIsDeterministic)
{
    const auto x = run_crosscheck(20, 5);
    const auto y = run_crosscheck(20, 5);
    for (std::size_t i = 0; i < x.size(); ++i) {
        EXPECT_EQ(x[i].p, y[i].p);
        EXPECT_EQ(x[i].h, y[i].h);
        EXPECT_EQ(x[i].fast, y[i].fast);
    }
}
