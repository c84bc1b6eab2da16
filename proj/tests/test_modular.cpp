#include <gtest/gtest.h>

#include <random>

#include "binlab/modular.hpp"
#include "binlab/oracle.hpp"

using namespace binlab;

namespace {

std::vector<u64> small_odd_primes(u64 limit)
{
    std::vector<u64> out;
    for (u64 n = 3; n <= limit; n += 2) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

// Euler's criterion by brute force, independent of the reciprocity-based routine.
int legendre_by_squares(i64 t, i64 p)
{
    const i64 r = ((t % p) + p) % p;
    if (r == 0) return 0;
    for (i64 x = 1; x < p; ++x) {
        if (x * x % p == r) return 1;
    }
    return -1;
}

}  // namespace

TEST(PrimeContext, RejectsBadParameters)
{
    EXPECT_THROW(PrimeContext(2, 1, 2), std::invalid_argument);
    EXPECT_THROW(PrimeContext(9, 1, 2), std::invalid_argument);
    EXPECT_THROW(PrimeContext(1, 1, 2), std::invalid_argument);
    EXPECT_THROW(PrimeContext(5, 0, 2), std::invalid_argument);
    EXPECT_THROW(PrimeContext(5, 1, 0), std::invalid_argument);
    EXPECT_THROW(PrimeContext(3, 1, 40), std::invalid_argument);
    EXPECT_THROW(PrimeContext(3, 40, 2), std::invalid_argument);
    const PrimeContext ctx(7, 2, 3);
    EXPECT_EQ(ctx.p_pow_a(), 49u);
    EXPECT_EQ(ctx.modulus(), 343u);
}

TEST(PrimeContext, SymmetricRepresentative)
{
    const PrimeContext ctx(5, 1, 2);
    EXPECT_EQ(ctx.symmetric(Residue{24}), -1);
    EXPECT_EQ(ctx.symmetric(Residue{12}), 12);
    EXPECT_EQ(ctx.symmetric(Residue{13}), -12);
    EXPECT_EQ(ctx.reduce(-3).value, 22u);
}

TEST(Jacobi, SpotValues)
{
    EXPECT_EQ(jacobi(1, 1), 1);
    EXPECT_EQ(jacobi(2, 3), -1);
    EXPECT_EQ(jacobi(-3, 7), 1);
    EXPECT_EQ(jacobi(5, 9), 1);
    EXPECT_EQ(jacobi(-7, 1), 1);
    EXPECT_EQ(jacobi(0, 1), 1);
    EXPECT_EQ(jacobi(6, 9), 0);
    EXPECT_EQ(jacobi(-1, 3), -1);
}

TEST(Jacobi, RejectsEvenOrNonpositiveBottom)
{
    EXPECT_THROW(jacobi(1, 4), std::invalid_argument);
    EXPECT_THROW(jacobi(1, 0), std::invalid_argument);
    EXPECT_THROW(jacobi(1, -3), std::invalid_argument);
}

TEST(Jacobi, MultiplicativeInTop)
{
    for (i64 n = 1; n <= 99; n += 2) {
        for (i64 a = -50; a <= 50; ++a) {
            for (i64 b = -50; b <= 50; ++b) {
                ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n)) << a << " " << b << " " << n;
            }
        }
    }
}

TEST(Jacobi, MultiplicativeInBottom)
{
    for (i64 m = 1; m <= 99; m += 2) {
        for (i64 n = 1; n <= 99; n += 2) {
            for (i64 a = -50; a <= 50; ++a) {
                ASSERT_EQ(jacobi(a, m * n), jacobi(a, m) * jacobi(a, n));
            }
        }
    }
}

TEST(Jacobi, EulerCriterionExhaustive)
{
    for (u64 p : small_odd_primes(97)) {
        const auto sp = static_cast<i64>(p);
        for (i64 t = -sp * sp; t <= sp * sp; ++t) {
            ASSERT_EQ(jacobi(t, sp), legendre_by_squares(t, sp)) << t << " " << p;
        }
    }
}

TEST(Jacobi, PrimePowerBottom)
{
    for (u64 p : small_odd_primes(97)) {
        for (i64 d = -60; d <= 60; ++d) {
            const int base = jacobi(d, static_cast<i64>(p));
            int expected = 1;
            for (unsigned a = 1; a <= 4; ++a) {
                expected *= base;
                ASSERT_EQ(jacobi(d, static_cast<i64>(checked_power(p, a))), expected);
            }
        }
    }
}

TEST(ModPow, SpotValues)
{
    EXPECT_EQ(mod_pow(Residue{2}, 0, PrimeContext(3, 1, 2)).value, 1u);
    EXPECT_EQ(mod_pow(Residue{2}, 6, PrimeContext(7, 1, 2)).value, 15u);
    EXPECT_EQ(mod_pow(Residue{3}, 4, PrimeContext(5, 1, 2)).value, 6u);
}

TEST(ModInv, SpotValues)
{
    EXPECT_EQ(mod_inv(Residue{1}, PrimeContext(11, 1, 3)).value, 1u);
    EXPECT_EQ(mod_inv(Residue{7}, PrimeContext(3, 1, 2)).value, 4u);
    EXPECT_EQ(mod_inv(Residue{22}, PrimeContext(5, 1, 2)).value, 8u);
    EXPECT_THROW(mod_inv(Residue{10}, PrimeContext(5, 1, 2)), NotInvertible);
    EXPECT_THROW(mod_inv(Residue{0}, PrimeContext(5, 1, 2)), NotInvertible);
}

TEST(ModInv, ExhaustiveUpToTenThousand)
{
    for (u64 p : small_odd_primes(100)) {
        for (unsigned e = 1; checked_power(p, e) != 0 && checked_power(p, e) <= 10000; ++e) {
            const PrimeContext ctx(p, 1, e);
            for (u64 x = 1; x < ctx.modulus(); ++x) {
                if (x % p == 0) continue;
                ASSERT_EQ(ctx.mul(Residue{x}, mod_inv(Residue{x}, ctx)).value, 1u) << x << " mod " << ctx.modulus();
            }
        }
    }
}

TEST(FermatQuotient, SpotValues)
{
    EXPECT_EQ(fermat_quotient(Residue{1}, PrimeContext(13, 1, 2)).value, 0u);
    EXPECT_EQ(fermat_quotient(Residue{2}, PrimeContext(7, 1, 2)).value, 2u);
    EXPECT_EQ(fermat_quotient(Residue{2}, PrimeContext(3, 1, 2)).value, 1u);
    EXPECT_THROW(fermat_quotient(Residue{14}, PrimeContext(7, 1, 2)), std::invalid_argument);
}

TEST(FermatQuotient, MatchesBigIntegerComputation)
{
    std::mt19937_64 rng(2024);
    const auto primes = small_odd_primes(500);
    for (int i = 0; i < 100; ++i) {
        const u64 p = primes[rng() % primes.size()];
        u64 h;
        do {
            h = 1 + rng() % (p * p - 1);
        } while (h % p == 0);
        const oracle::BigInt big = oracle::exact_pow(oracle::BigInt(static_cast<unsigned long>(h)), p - 1) - 1;
        ASSERT_TRUE(mpz_divisible_ui_p(big.get_mpz_t(), p));
        const oracle::BigInt q = big / static_cast<unsigned long>(p) % static_cast<unsigned long>(p);
        EXPECT_EQ(fermat_quotient(Residue{h}, PrimeContext(p, 1, 2)).value, q.get_ui()) << "h=" << h << " p=" << p;
    }
}

TEST(StripP, SpotValuesAndRoundTrip)
{
    EXPECT_EQ(strip_p(45, 3), std::make_pair(2u, i64{5}));
    EXPECT_EQ(strip_p(-8, 3), std::make_pair(0u, i64{-8}));
    EXPECT_EQ(strip_p(250, 5), std::make_pair(3u, i64{2}));
    EXPECT_THROW(strip_p(0, 3), std::invalid_argument);
    for (i64 n = -2000; n <= 2000; ++n) {
        if (n == 0) continue;
        for (u64 p : {3u, 5u, 7u}) {
            const auto [v, u] = strip_p(n, p);
            ASSERT_NE(u % static_cast<i64>(p), 0);
            ASSERT_EQ(static_cast<i64>(checked_power(p, v)) * u, n);
        }
    }
}

TEST(ValUnit, Arithmetic)
{
    const PrimeContext ctx(3, 1, 2);
    const ValUnit one = ValUnit::one();
    const ValUnit x(2, Residue{5});
    EXPECT_EQ(valunit_mul(one, x, ctx), x);

    const ValUnit six = ValUnit::from_integer(6, ctx);
    EXPECT_EQ(six, ValUnit(1, Residue{2}));
    EXPECT_EQ(valunit_mul(six, six, ctx), ValUnit(2, Residue{4}));
    EXPECT_EQ(valunit_to_residue(ValUnit(1, Residue{2}), ctx).value, 6u);
    EXPECT_EQ(valunit_to_residue(ValUnit(2, Residue{4}), ctx).value, 0u);
    EXPECT_EQ(valunit_to_residue(ValUnit::zero(), ctx).value, 0u);

    const ValUnit q = valunit_div(six, ValUnit::from_integer(9, ctx), ctx);
    EXPECT_EQ(q.valuation(), -1);
    EXPECT_THROW(valunit_to_residue(q, ctx), std::domain_error);
    EXPECT_THROW(valunit_div(six, ValUnit::zero(), ctx), NotInvertible);
    EXPECT_TRUE(valunit_mul(six, ValUnit::zero(), ctx).is_zero());
}
