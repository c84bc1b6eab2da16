#include "binlab/oracle.hpp"

namespace binlab::oracle {

namespace {

BigInt from_i64(i64 x)
{
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(x));
    return r;
}

BigInt from_u64(u64 x)
{
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(x));
    return r;
}

}  // namespace

BigInt exact_binom(i64 n, u64 k)
{
    BigInt num = 1;
    BigInt den = 1;
    for (u64 j = 1; j <= k; ++j) {
        num *= from_i64(n) - from_u64(j) + 1;
        den *= from_u64(j);
    }
    BigInt q = num / den;
    return q;
}

ExactRational exact_weighted_sum(i64 h, u64 n, const ExactRational& z)
{
    const BigInt top = from_i64(h) * from_u64(n) - 1;
    ExactRational sum = 0;
    BigInt shifted = 1;  // C(hn-1, k)
    BigInt central = 1;  // C(2k, k)
    ExactRational power = 1;
    for (u64 k = 0; k < n; ++k) {
        if (k > 0) {
            shifted = shifted * (top - from_u64(k) + 1) / from_u64(k);
            central = central * from_u64(2 * (2 * k - 1)) / from_u64(k);
            power *= z;
        }
        sum += ExactRational(shifted * central) * power;
    }
    sum.canonicalize();
    return sum;
}

Residue reduce_mod(const BigInt& n, const PrimeContext& ctx)
{
    const BigInt m = from_u64(ctx.modulus());
    BigInt r = n % m;
    if (r < 0) r += m;
    return {static_cast<u64>(r.get_ui())};
}

Residue reduce_mod(const ExactRational& q, const PrimeContext& ctx)
{
    const Residue den = reduce_mod(q.get_den(), ctx);
    if (ctx.divisible_by_p(den)) {
        throw NotInvertible("reduce_mod: denominator is divisible by p");
    }
    return ctx.mul(reduce_mod(q.get_num(), ctx), mod_inv(den, ctx));
}

std::optional<long> valuation(const BigInt& n, u64 p)
{
    if (n == 0) return std::nullopt;
    BigInt x = abs(n);
    const BigInt bp = from_u64(p);
    long v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), bp.get_mpz_t())) {
        x /= bp;
        ++v;
    }
    return v;
}

std::optional<long> rational_valuation(const ExactRational& q, u64 p)
{
    const auto num = valuation(q.get_num(), p);
    if (!num) return std::nullopt;
    return *num - *valuation(q.get_den(), p);
}

BigInt exact_lucas_u(LucasParams params, u64 n)
{
    BigInt u0 = 0, u1 = 1;
    const BigInt a = from_i64(params.A), b = from_i64(params.B);
    for (u64 i = 0; i < n; ++i) {
        BigInt u2 = a * u1 - b * u0;
        u0 = u1;
        u1 = u2;
    }
    return u0;
}

BigInt exact_lucas_v(LucasParams params, u64 n)
{
    BigInt v0 = 2, v1 = from_i64(params.A);
    const BigInt a = from_i64(params.A), b = from_i64(params.B);
    for (u64 i = 0; i < n; ++i) {
        BigInt v2 = a * v1 - b * v0;
        v0 = v1;
        v1 = v2;
    }
    return v0;
}

BigInt exact_pow(const BigInt& base, u64 exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace binlab::oracle
