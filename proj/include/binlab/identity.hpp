#pragma once

// Exact integer checks of the binomial-sum identity and the Lucas-sequence
// bridge identity, plus a Laurent-polynomial constant-term oracle.

#include <map>
#include <utility>

#include "binlab/oracle.hpp"

namespace binlab {

using oracle::BigInt;

/// Finitely supported sum of c_k x^k over signed k; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
    static LaurentPoly monomial(long exponent, const BigInt& c);

    void add_term(long exponent, const BigInt& c);

    BigInt coefficient(long exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    long min_exponent() const { return coeffs_.begin()->first; }
    long max_exponent() const { return coeffs_.rbegin()->first; }
    std::size_t term_count() const { return coeffs_.size(); }

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly pow(unsigned n) const;

private:
    std::map<long, BigInt> coeffs_;
};

/// sum_{k=0}^{n-1} C(n-1,k) C(2k,k) (-1)^k m^(n-1-k)
BigInt lhs_identity_1_3(u64 n, i64 m);

/// sum_{k=0}^{floor((n-1)/2)} C(n-1,k) C(n-1-k,k) (m-2)^(n-1-2k)
BigInt rhs_identity_1_3(u64 n, i64 m);

/// Constant term of (m - 2 + x + 1/x)^(n-1), by direct expansion.
BigInt constant_term_oracle(u64 n, i64 m);

/// Both sides of m^n v_{2n+1}(m-4, 4-m) = (m-4)^(n+1) u_{2n+1}(m, m).
std::pair<BigInt, BigInt> identity_2_5_sides(u64 n, i64 m);

/// The cross-multiplied (division free) form of the bridge identity.
bool check_identity_2_5(u64 n, i64 m);

}  // namespace binlab
