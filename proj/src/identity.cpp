#include "binlab/identity.hpp"

#include <stdexcept>
#include <utility>

namespace binlab {

LaurentPoly LaurentPoly::monomial(long exponent, const BigInt& c)
{
    LaurentPoly out;
    out.add_term(exponent, c);
    return out;
}

void LaurentPoly::add_term(long exponent, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

BigInt LaurentPoly::coefficient(long exponent) const
{
    const auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const
{
    LaurentPoly out = *this;
    for (const auto& [k, c] : other.coeffs_) out.add_term(k, c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const
{
    LaurentPoly out;
    for (const auto& [i, a] : coeffs_) {
        for (const auto& [j, b] : other.coeffs_) out.add_term(i + j, a * b);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const
{
    LaurentPoly result = constant(1);
    for (unsigned i = 0; i < n; ++i) result = result * *this;
    return result;
}

namespace {

void require_positive(u64 n)
{
    if (n == 0) throw std::invalid_argument("identity: n must be positive");
}

}  // namespace

BigInt lhs_identity_1_3(u64 n, i64 m)
{
    require_positive(n);
    BigInt sum = 0;
    for (u64 k = 0; k < n; ++k) {
        BigInt term = oracle::exact_binom(static_cast<i64>(n - 1), k) * oracle::exact_binom(static_cast<i64>(2 * k), k) *
                      oracle::exact_pow(BigInt(static_cast<long>(m)), n - 1 - k);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

BigInt rhs_identity_1_3(u64 n, i64 m)
{
    require_positive(n);
    BigInt sum = 0;
    for (u64 k = 0; 2 * k <= n - 1; ++k) {
        sum += oracle::exact_binom(static_cast<i64>(n - 1), k) * oracle::exact_binom(static_cast<i64>(n - 1 - k), k) *
               oracle::exact_pow(BigInt(static_cast<long>(m - 2)), n - 1 - 2 * k);
    }
    return sum;
}

BigInt constant_term_oracle(u64 n, i64 m)
{
    require_positive(n);
    LaurentPoly base = LaurentPoly::constant(BigInt(static_cast<long>(m - 2)));
    base.add_term(1, 1);
    base.add_term(-1, 1);
    return base.pow(static_cast<unsigned>(n - 1)).coefficient(0);
}

std::pair<BigInt, BigInt> identity_2_5_sides(u64 n, i64 m)
{
    BigInt lhs = oracle::exact_pow(BigInt(static_cast<long>(m)), n) *
                       oracle::exact_lucas_v(LucasParams{m - 4, 4 - m}, 2 * n + 1);
    BigInt rhs = oracle::exact_pow(BigInt(static_cast<long>(m - 4)), n + 1) *
                 oracle::exact_lucas_u(LucasParams{m, m}, 2 * n + 1);
    return {std::move(lhs), std::move(rhs)};
}

bool check_identity_2_5(u64 n, i64 m)
{
    const auto [lhs, rhs] = identity_2_5_sides(n, m);
    return lhs == rhs;
}

}  // namespace binlab
