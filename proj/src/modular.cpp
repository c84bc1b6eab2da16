#include "binlab/modular.hpp"

#include <string>
#include <tuple>

namespace binlab {

bool is_prime(u64 n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

u64 checked_power(u64 p, unsigned k)
{
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > kMaxModulus / p) return 0;
        r *= p;
    }
    return r;
}

PrimeContext::PrimeContext(u64 p, unsigned a, unsigned e) : p_(p), a_(a), e_(e)
{
    if (p == 2 || !is_prime(p)) {
        throw std::invalid_argument("PrimeContext: p = " + std::to_string(p) + " is not an odd prime");
    }
    if (a == 0 || e == 0) {
        throw std::invalid_argument("PrimeContext: exponents a and e must be positive");
    }
    p_pow_a_ = checked_power(p, a);
    p_pow_e_ = checked_power(p, e);
    if (p_pow_a_ == 0 || p_pow_e_ == 0) {
        throw std::invalid_argument("PrimeContext: p^a or p^e exceeds the native word bound");
    }
}

Residue PrimeContext::reduce(i64 n) const
{
    const auto m = static_cast<i64>(p_pow_e_);
    i64 r = n % m;
    if (r < 0) r += m;
    return {static_cast<u64>(r)};
}

Residue PrimeContext::add(Residue x, Residue y) const
{
    u64 s = x.value + y.value;
    if (s >= p_pow_e_) s -= p_pow_e_;
    return {s};
}

Residue PrimeContext::sub(Residue x, Residue y) const
{
    return {x.value >= y.value ? x.value - y.value : x.value + p_pow_e_ - y.value};
}

Residue PrimeContext::neg(Residue x) const
{
    return {x.value == 0 ? 0 : p_pow_e_ - x.value};
}

i64 PrimeContext::symmetric(Residue x) const
{
    if (x.value > p_pow_e_ / 2) return static_cast<i64>(x.value) - static_cast<i64>(p_pow_e_);
    return static_cast<i64>(x.value);
}

int jacobi(i64 top, i64 bottom)
{
    if (bottom < 1 || bottom % 2 == 0) {
        throw std::invalid_argument("jacobi: bottom must be a positive odd integer");
    }
    int result = 1;
    auto n = static_cast<u64>(bottom);
    u64 t;
    if (top < 0) {
        t = static_cast<u64>(-(top + 1)) + 1;
        if (n % 4 == 3) result = -result;
    } else {
        t = static_cast<u64>(top);
    }
    t %= n;
    while (t != 0) {
        while (t % 2 == 0) {
            t /= 2;
            if (n % 8 == 3 || n % 8 == 5) result = -result;
        }
        std::swap(t, n);
        if (t % 4 == 3 && n % 4 == 3) result = -result;
        t %= n;
    }
    return n == 1 ? result : 0;
}

Residue mod_pow(Residue base, u64 exp, const PrimeContext& ctx)
{
    Residue result = ctx.reduce_unsigned(1);
    Residue b = base;
    while (exp != 0) {
        if (exp & 1) result = ctx.mul(result, b);
        b = ctx.mul(b, b);
        exp >>= 1;
    }
    return result;
}

Residue mod_inv(Residue x, const PrimeContext& ctx)
{
    if (ctx.divisible_by_p(x)) {
        throw NotInvertible("mod_inv: " + std::to_string(x.value) + " is divisible by p = " +
                            std::to_string(ctx.p()));
    }
    // Extended Euclid over signed 128-bit to keep the Bezout coefficients exact.
    using i128 = __int128;
    i128 r0 = static_cast<i128>(ctx.modulus()), r1 = static_cast<i128>(x.value);
    i128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const i128 q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    i128 inv = s0 % static_cast<i128>(ctx.modulus());
    if (inv < 0) inv += static_cast<i128>(ctx.modulus());
    return {static_cast<u64>(inv)};
}

Residue fermat_quotient(Residue h, const PrimeContext& ctx)
{
    if (ctx.divisible_by_p(h)) {
        throw std::invalid_argument("fermat_quotient: h must not be divisible by p");
    }
    const PrimeContext wide = ctx.with_precision(ctx.e() + 1);
    const Residue power = mod_pow(wide.reduce_unsigned(h.value), ctx.p() - 1, wide);
    const u64 numerator = wide.sub(power, Residue{1}).value;
    // power == 1 (mod p) by Fermat's little theorem, so this division is exact.
    return {(numerator / ctx.p()) % ctx.p()};
}

std::pair<unsigned, i64> strip_p(i64 n, u64 p)
{
    if (n == 0) throw std::invalid_argument("strip_p: n must be nonzero");
    const auto sp = static_cast<i64>(p);
    unsigned v = 0;
    while (n % sp == 0) {
        n /= sp;
        ++v;
    }
    return {v, n};
}

ValUnit ValUnit::from_integer(i64 n, const PrimeContext& ctx)
{
    if (n == 0) return zero();
    const auto [v, u] = strip_p(n, ctx.p());
    return {static_cast<int>(v), ctx.reduce(u)};
}

ValUnit valunit_mul(const ValUnit& x, const ValUnit& y, const PrimeContext& ctx)
{
    if (x.is_zero() || y.is_zero()) return ValUnit::zero();
    return {x.valuation() + y.valuation(), ctx.mul(x.unit(), y.unit())};
}

ValUnit valunit_div(const ValUnit& x, const ValUnit& y, const PrimeContext& ctx)
{
    if (y.is_zero()) throw NotInvertible("valunit_div: division by zero");
    if (x.is_zero()) return ValUnit::zero();
    return {x.valuation() - y.valuation(), ctx.mul(x.unit(), mod_inv(y.unit(), ctx))};
}

Residue valunit_to_residue(const ValUnit& x, const PrimeContext& ctx)
{
    if (x.is_zero()) return {0};
    if (x.valuation() < 0) {
        throw std::domain_error("valunit_to_residue: negative valuation is not a p-adic integer");
    }
    if (static_cast<unsigned>(x.valuation()) >= ctx.e()) return {0};
    return ctx.mul(ctx.reduce_unsigned(checked_power(ctx.p(), static_cast<unsigned>(x.valuation()))), x.unit());
}

}  // namespace binlab
