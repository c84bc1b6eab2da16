#include "binlab/crosscheck.hpp"

#include <random>

#include "binlab/binomial.hpp"
#include "binlab/congruence.hpp"
#include "binlab/oracle.hpp"

namespace binlab {

namespace {

constexpr u64 kMaxPrime = 31;
constexpr u64 kMaxPower = 400;
constexpr i64 kMaxWeight = 50;

i64 draw(std::mt19937_64& rng, i64 lo, i64 hi)
{
    return lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
}

}  // namespace

std::vector<CrosscheckRecord> run_crosscheck(std::size_t samples, u64 seed)
{
    const std::vector<u64> primes = odd_primes(3, kMaxPrime);
    std::mt19937_64 rng(seed);
    std::vector<CrosscheckRecord> out;
    out.reserve(samples);

    for (std::size_t i = 0; i < samples; ++i) {
        CrosscheckRecord rec;
        rec.index = i;
        rec.p = primes[rng() % primes.size()];
        unsigned a_top = 1;
        while (checked_power(rec.p, a_top + 1) <= kMaxPower) ++a_top;
        rec.a = static_cast<unsigned>(1 + rng() % a_top);

        const auto sp = static_cast<i64>(rec.p);
        do {
            rec.h = draw(rng, -sp * sp, sp * sp);
        } while (rec.h % sp == 0);
        do {
            rec.z_num = draw(rng, -kMaxWeight, kMaxWeight);
        } while (rec.z_num % sp == 0);
        do {
            rec.z_den = draw(rng, 1, kMaxWeight);
        } while (rec.z_den % sp == 0);

        const PrimeContext ctx(rec.p, rec.a, 2);
        rec.modulus = ctx.modulus();
        const Residue z = ctx.mul(ctx.reduce(rec.z_num), mod_inv(ctx.reduce(rec.z_den), ctx));
        rec.fast = weighted_sum(ctx.reduce(rec.h), z, ctx);

        oracle::ExactRational exact_z(oracle::BigInt(static_cast<long>(rec.z_num)),
                                      oracle::BigInt(static_cast<long>(rec.z_den)));
        exact_z.canonicalize();
        rec.exact = oracle::reduce_mod(oracle::exact_weighted_sum(rec.h, ctx.p_pow_a(), exact_z), ctx);
        rec.holds = rec.fast == rec.exact;
        out.push_back(rec);
    }
    return out;
}

}  // namespace binlab
