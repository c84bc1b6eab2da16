#include "binlab/lucas.hpp"

#include <array>

namespace binlab {

namespace {

u64 reduce_signed(i64 x, u64 modulus)
{
    const auto m = static_cast<i64>(modulus);
    i64 r = x % m;
    return static_cast<u64>(r < 0 ? r + m : r);
}

u64 mulmod(u64 x, u64 y, u64 modulus)
{
    return static_cast<u64>(static_cast<u128>(x) * y % modulus);
}

using Mat = std::array<u64, 4>;

Mat mat_mul(const Mat& x, const Mat& y, u64 modulus)
{
    auto dot = [&](u64 a, u64 b, u64 c, u64 d) { return (mulmod(a, b, modulus) + mulmod(c, d, modulus)) % modulus; };
    return {dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]),
            dot(x[2], y[0], x[3], y[2]), dot(x[2], y[1], x[3], y[3])};
}

}  // namespace

LucasPair lucas_uv_iterative(LucasParams params, u64 n, u64 modulus)
{
    const u64 a = reduce_signed(params.A, modulus);
    const u64 b = reduce_signed(params.B, modulus);
    u64 u0 = 0, u1 = 1 % modulus;
    u64 v0 = 2 % modulus, v1 = a;
    for (u64 i = 0; i < n; ++i) {
        const u64 u2 = (mulmod(a, u1, modulus) + modulus - mulmod(b, u0, modulus)) % modulus;
        const u64 v2 = (mulmod(a, v1, modulus) + modulus - mulmod(b, v0, modulus)) % modulus;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    return {u0, v0};
}

LucasPair lucas_uv_fast(LucasParams params, u64 n, u64 modulus)
{
    const u64 a = reduce_signed(params.A, modulus);
    const u64 minus_b = reduce_signed(-params.B, modulus);
    // [[A, -B], [1, 0]]^n maps (u_1, u_0) to (u_{n+1}, u_n).
    Mat result{1 % modulus, 0, 0, 1 % modulus};
    Mat base{a, minus_b, 1 % modulus, 0};
    for (u64 k = n; k != 0; k >>= 1) {
        if (k & 1) result = mat_mul(result, base, modulus);
        base = mat_mul(base, base, modulus);
    }
    const u64 u_next = result[0];
    const u64 u = result[2];
    // v_n = 2 u_{n+1} - A u_n
    const u64 v = (mulmod(2 % modulus, u_next, modulus) + modulus - mulmod(a, u, modulus)) % modulus;
    return {u, v};
}

u64 lucas_u(LucasParams params, u64 n, u64 modulus)
{
    return n <= kLucasIterativeLimit ? lucas_uv_iterative(params, n, modulus).u : lucas_uv_fast(params, n, modulus).u;
}

u64 lucas_v(LucasParams params, u64 n, u64 modulus)
{
    return n <= kLucasIterativeLimit ? lucas_uv_iterative(params, n, modulus).v : lucas_uv_fast(params, n, modulus).v;
}

std::vector<u64> lucas_u_table(LucasParams params, std::size_t count, u64 modulus)
{
    std::vector<u64> out;
    out.reserve(count);
    const u64 a = reduce_signed(params.A, modulus);
    const u64 b = reduce_signed(params.B, modulus);
    u64 u0 = 0, u1 = 1 % modulus;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(u0);
        const u64 u2 = (mulmod(a, u1, modulus) + modulus - mulmod(b, u0, modulus)) % modulus;
        u0 = u1;
        u1 = u2;
    }
    return out;
}

u64 fibonacci(u64 n, u64 modulus)
{
    return lucas_u({1, -1}, n, modulus);
}

u64 rank_index(const PrimeContext& ctx, LucasParams params)
{
    // Only D mod p matters; reducing first keeps large A from overflowing A^2.
    const auto p = static_cast<i64>(ctx.p());
    const i64 a = params.A % p;
    const i64 b = params.B % p;
    const int symbol = jacobi((a * a - 4 * b) % p, p);
    return static_cast<u64>(static_cast<i64>(ctx.p()) - symbol);
}

}  // namespace binlab
