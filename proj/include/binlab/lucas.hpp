#pragma once

#include <vector>

#include "binlab/modular.hpp"

namespace binlab {

/// Coefficients of x_{n+1} = A x_n - B x_{n-1}.
struct LucasParams {
    i64 A = 0;
    i64 B = 0;

    i64 discriminant() const { return A * A - 4 * B; }
};

struct LucasPair {
    u64 u = 0;
    u64 v = 0;
};

/// u_n(A,B) mod modulus. Iterates for small n, switches to lucas_uv_fast above
/// kLucasIterativeLimit.
u64 lucas_u(LucasParams params, u64 n, u64 modulus);
u64 lucas_v(LucasParams params, u64 n, u64 modulus);

/// (u_n, v_n) mod modulus in O(log n) multiplications by squaring the
/// companion matrix. Works for any modulus >= 1, even ones.
LucasPair lucas_uv_fast(LucasParams params, u64 n, u64 modulus);

/// Plain O(n) recurrence; the reference the fast path is tested against.
LucasPair lucas_uv_iterative(LucasParams params, u64 n, u64 modulus);

/// u_0 .. u_{count-1} mod modulus.
std::vector<u64> lucas_u_table(LucasParams params, std::size_t count, u64 modulus);

inline constexpr u64 kLucasIterativeLimit = 4096;

/// F_n = u_n(1,-1).
u64 fibonacci(u64 n, u64 modulus);

/// p - (D/p) with D = A^2 - 4B, where u vanishes mod p for p not dividing 2B.
u64 rank_index(const PrimeContext& ctx, LucasParams params);

}  // namespace binlab
