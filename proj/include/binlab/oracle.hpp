#pragma once

// Exact arbitrary-precision ground truth. Deliberately naive: every value is
// computed term by term over Z or Q and reduced only at the very end, so its
// failure modes share nothing with the modular fast path.

#include <gmpxx.h>

#include <optional>

#include "binlab/lucas.hpp"
#include "binlab/modular.hpp"

namespace binlab::oracle {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// prod_{j=1..k} (n-j+1)/j for any signed n.
BigInt exact_binom(i64 n, u64 k);

/// sum_{k=0}^{n-1} C(hn-1,k) C(2k,k) z^k in lowest terms.
ExactRational exact_weighted_sum(i64 h, u64 n, const ExactRational& z);

/// numerator * denominator^{-1} mod p^e. Throws NotInvertible if p divides
/// the denominator.
Residue reduce_mod(const ExactRational& q, const PrimeContext& ctx);
Residue reduce_mod(const BigInt& n, const PrimeContext& ctx);

/// v_p(q); std::nullopt stands for the infinite valuation of 0.
std::optional<long> rational_valuation(const ExactRational& q, u64 p);
std::optional<long> valuation(const BigInt& n, u64 p);

BigInt exact_lucas_u(LucasParams params, u64 n);
BigInt exact_lucas_v(LucasParams params, u64 n);

BigInt exact_pow(const BigInt& base, u64 exp);

}  // namespace binlab::oracle
