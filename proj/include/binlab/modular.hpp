#pragma once

// Residues mod p^e, truncated p-adic numbers with explicit valuation,
// Jacobi symbols and Fermat quotients.

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace binlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Raised when an element divisible by p is used as a denominator.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element of Z/p^e. The modulus lives in the PrimeContext that produced it.
struct Residue {
    u64 value = 0;

    friend bool operator==(Residue, Residue) = default;
};

/// Largest modulus accepted by a context; leaves headroom for one extra
/// digit of precision and for sums of two residues.
inline constexpr u64 kMaxModulus = u64{1} << 62;

bool is_prime(u64 n);

/// p^k, or 0 if the value would exceed kMaxModulus.
u64 checked_power(u64 p, unsigned k);

/// The ambient ring Z/p^e together with the exponent a of the sums.
class PrimeContext {
public:
    /// Throws std::invalid_argument unless p is an odd prime, a, e >= 1 and
    /// both p^a and p^e stay below kMaxModulus.
    PrimeContext(u64 p, unsigned a, unsigned e);

    u64 p() const { return p_; }
    unsigned a() const { return a_; }
    unsigned e() const { return e_; }
    u64 p_pow_a() const { return p_pow_a_; }
    u64 modulus() const { return p_pow_e_; }

    /// Same p and a at a different precision.
    PrimeContext with_precision(unsigned e) const { return {p_, a_, e}; }

    Residue reduce(i64 n) const;
    Residue reduce_unsigned(u64 n) const { return {n % p_pow_e_}; }

    Residue add(Residue x, Residue y) const;
    Residue sub(Residue x, Residue y) const;
    Residue neg(Residue x) const;
    Residue mul(Residue x, Residue y) const
    {
        return {static_cast<u64>(static_cast<u128>(x.value) * y.value % p_pow_e_)};
    }

    /// Representative of smallest absolute value, in (-p^e/2, p^e/2].
    i64 symmetric(Residue x) const;

    bool divisible_by_p(Residue x) const { return x.value % p_ == 0; }

private:
    u64 p_;
    unsigned a_;
    unsigned e_;
    u64 p_pow_a_;
    u64 p_pow_e_;
};

/// Jacobi symbol (top/bottom) for odd bottom >= 1, with (x/1) = 1 and the
/// (-1/n) factor for negative top. Throws std::invalid_argument otherwise.
int jacobi(i64 top, i64 bottom);

Residue mod_pow(Residue base, u64 exp, const PrimeContext& ctx);

/// Throws NotInvertible when p | x.
Residue mod_inv(Residue x, const PrimeContext& ctx);

/// ((h^(p-1) - 1) / p) mod p, evaluated at precision e+1 so the division
/// is exact. The result is a residue mod p.
Residue fermat_quotient(Residue h, const PrimeContext& ctx);

/// n = p^v * u with p not dividing u. Throws std::invalid_argument for n = 0.
std::pair<unsigned, i64> strip_p(i64 n, u64 p);

/// p^valuation * unit, known to relative precision p^e. The zero element has
/// infinite valuation and no meaningful unit.
class ValUnit {
public:
    static ValUnit zero() { return ValUnit{}; }
    static ValUnit one() { return ValUnit{0, Residue{1}}; }

    /// Exact integer, stripped of its p-part before reduction.
    static ValUnit from_integer(i64 n, const PrimeContext& ctx);

    ValUnit(int valuation, Residue unit) : infinite_(false), valuation_(valuation), unit_(unit) {}

    bool is_zero() const { return infinite_; }
    int valuation() const { return valuation_; }
    Residue unit() const { return unit_; }

    friend bool operator==(const ValUnit&, const ValUnit&) = default;

private:
    ValUnit() = default;

    bool infinite_ = true;
    int valuation_ = 0;
    Residue unit_{};
};

ValUnit valunit_mul(const ValUnit& x, const ValUnit& y, const PrimeContext& ctx);

/// Valuations subtract and may go negative; callers check. Throws
/// NotInvertible when y is zero.
ValUnit valunit_div(const ValUnit& x, const ValUnit& y, const PrimeContext& ctx);

/// p^v * u mod p^e; zero and v >= e map to 0. Throws std::domain_error for
/// negative valuation.
Residue valunit_to_residue(const ValUnit& x, const PrimeContext& ctx);

}  // namespace binlab
