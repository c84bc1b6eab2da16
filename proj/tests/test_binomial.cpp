#include <gtest/gtest.h>

#include <random>

#include "binlab/binomial.hpp"
#include "binlab/oracle.hpp"

using namespace binlab;

namespace {

// Carries when adding x + y in base p.
unsigned carries(u64 x, u64 y, u64 p)
{
    unsigned count = 0;
    u64 carry = 0;
    while (x != 0 || y != 0 || carry != 0) {
        const u64 digit = x % p + y % p + carry;
        carry = digit >= p ? 1 : 0;
        count += static_cast<unsigned>(carry);
        x /= p;
        y /= p;
    }
    return count;
}

}  // namespace

TEST(CentralBinom, SpotValues)
{
    EXPECT_EQ(central_binom(0, PrimeContext(3, 1, 2)), ValUnit::one());
    EXPECT_EQ(central_binom(2, PrimeContext(3, 2, 2)), ValUnit(1, Residue{2}));
    EXPECT_EQ(central_binom(3, PrimeContext(3, 2, 2)), ValUnit(0, Residue{2}));
    EXPECT_EQ(central_binom(5, PrimeContext(5, 2, 2)), ValUnit(0, Residue{2}));
    EXPECT_THROW(central_binom(3, PrimeContext(3, 1, 2)), std::invalid_argument);
}

TEST(CentralBinom, MatchesExactBinomial)
{
    std::mt19937_64 rng(7);
    const std::vector<u64> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97};
    for (int i = 0; i < 100; ++i) {
        const u64 p = primes[rng() % primes.size()];
        const unsigned e = 1 + static_cast<unsigned>(rng() % 4);
        unsigned a = 1;
        while (checked_power(p, a + 1) <= 3000) ++a;
        const PrimeContext ctx(p, a, e);
        const u64 k = rng() % ctx.p_pow_a();
        const auto exact = oracle::exact_binom(static_cast<i64>(2 * k), k);
        EXPECT_EQ(valunit_to_residue(central_binom(k, ctx), ctx), oracle::reduce_mod(exact, ctx)) << p << " " << k;
    }
}

TEST(CentralBinom, KummerValuation)
{
    for (u64 p : {3u, 5u, 7u, 11u, 13u, 17u, 29u, 53u}) {
        for (unsigned a = 1; checked_power(p, a) <= 3000; ++a) {
            const BinomTable table(PrimeContext(p, a, 2));
            for (u64 k = 0; k < table.size(); ++k) {
                ASSERT_EQ(static_cast<unsigned>(table.central(k).valuation()), carries(k, k, p)) << p << " " << k;
            }
        }
    }
}

TEST(CentralBinom, TableAgreesWithDirectProduct)
{
    const PrimeContext ctx(5, 3, 3);
    const BinomTable table(ctx);
    for (u64 k = 0; k < table.size(); k += 7) EXPECT_EQ(table.central(k), central_binom(k, ctx));
}

TEST(CentralBinom, ReductionToHalfRowModP)
{
    // C(2k,k) = (-4)^k C((p^a-1)/2, k) (mod p); the right side is zero past (p^a-1)/2.
    for (auto [p, a] : {std::pair<u64, unsigned>{3, 2}, {5, 2}, {3, 3}, {7, 2}, {11, 2}}) {
        const PrimeContext ctx(p, a, 1);
        const BinomTable table(ctx);
        const i64 half = static_cast<i64>((ctx.p_pow_a() - 1) / 2);
        for (u64 k = 0; k < table.size(); ++k) {
            const oracle::BigInt rhs = oracle::exact_pow(-4, k) * oracle::exact_binom(half, k);
            ASSERT_EQ(table.central_residue(k), oracle::reduce_mod(rhs, ctx)) << p << "^" << a << " k=" << k;
            if (2 * k > ctx.p_pow_a()) ASSERT_EQ(table.central_residue(k).value, 0u);
        }
    }
}

TEST(ShiftedBinom, SpotValues)
{
    EXPECT_EQ(shifted_binom(Residue{1}, 0, PrimeContext(5, 1, 2)).value, 1u);
    EXPECT_EQ(shifted_binom(Residue{1}, 2, PrimeContext(5, 1, 2)).value, 6u);
    EXPECT_EQ(shifted_binom(Residue{8}, 1, PrimeContext(3, 1, 2)).value, 5u);
    EXPECT_EQ(shifted_binom(Residue{2}, 2, PrimeContext(3, 1, 2)).value, 1u);
    EXPECT_THROW(shifted_binom(Residue{1}, 5, PrimeContext(5, 1, 2)), std::invalid_argument);
}

TEST(ShiftedBinom, MatchesExactForIntegerH)
{
    for (u64 p : {3u, 5u, 7u, 11u}) {
        for (unsigned a = 1; a <= 2; ++a) {
            for (unsigned e = 1; e <= 3; ++e) {
                const PrimeContext ctx(p, a, e);
                const BinomTable table(ctx);
                for (i64 h : {-7, -2, -1, 0, 1, 2, 3, 5, 12, 100}) {
                    const auto row = table.shifted(ctx.reduce(h));
                    const i64 top = h * static_cast<i64>(ctx.p_pow_a()) - 1;
                    for (u64 k = 0; k < table.size(); ++k) {
                        const Residue expected = oracle::reduce_mod(oracle::exact_binom(top, k), ctx);
                        ASSERT_EQ(row[k], expected) << "p=" << p << " a=" << a << " h=" << h << " k=" << k;
                        if (k % 5 == 0) ASSERT_EQ(shifted_binom(ctx.reduce(h), k, ctx), expected);
                    }
                }
            }
        }
    }
}

TEST(ShiftedBinom, LinearisesModPSquared)
{
    // (-1)^k C(hp^a-1,k) = 1 - h p (p^(a-1) H_k)  (mod p^2)
    for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
        for (unsigned a = 1; a <= 2; ++a) {
            const PrimeContext ctx(p, a, 2);
            for (i64 h : {1, 2, 4, -3, 17}) {
                const Residue hr = ctx.reduce(h);
                for (u64 k = 1; k < ctx.p_pow_a(); ++k) {
                    Residue lhs = shifted_binom(hr, k, ctx);
                    if (k % 2 == 1) lhs = ctx.neg(lhs);
                    // H_k exactly, then p^a H_k reduced: independent of harmonic_scaled.
                    oracle::ExactRational harmonic = 0;
                    for (u64 j = 1; j <= k; ++j) harmonic += oracle::ExactRational(1, static_cast<unsigned long>(j));
                    harmonic *= oracle::BigInt(static_cast<unsigned long>(ctx.p_pow_a())) * h;
                    harmonic.canonicalize();
                    const Residue rhs = ctx.sub(Residue{1}, oracle::reduce_mod(harmonic, ctx));
                    ASSERT_EQ(lhs, rhs) << p << " " << a << " " << h << " " << k;
                    const u64 h_mod_p = static_cast<u64>(((h % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p));
                    const u64 digit = h_mod_p * harmonic_scaled(k, ctx).value % p;
                    const Residue via_scaled = ctx.sub(Residue{1}, ctx.reduce_unsigned(p * digit));
                    ASSERT_EQ(lhs, via_scaled);
                }
            }
        }
    }
}

TEST(HarmonicScaled, SpotValues)
{
    EXPECT_EQ(harmonic_scaled(1, PrimeContext(7, 1, 2)).value, 1u);
    EXPECT_EQ(harmonic_scaled(2, PrimeContext(5, 1, 2)).value, 4u);
    EXPECT_EQ(harmonic_scaled(4, PrimeContext(3, 2, 2)).value, 1u);
    EXPECT_THROW(harmonic_scaled(0, PrimeContext(3, 1, 2)), std::invalid_argument);
    EXPECT_THROW(harmonic_scaled(9, PrimeContext(3, 2, 2)), std::invalid_argument);
}
