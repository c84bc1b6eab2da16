#include "binlab/binomial.hpp"

#include <string>

namespace binlab {

namespace {

void require_below_pa(u64 k, const PrimeContext& ctx, const char* what)
{
    if (k >= ctx.p_pow_a()) {
        throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) + " must be below p^a = " +
                                    std::to_string(ctx.p_pow_a()));
    }
}

// (h p^(a - v) - j0) / j0 for j = p^v j0.
Residue shifted_factor(Residue h, u64 j, const PrimeContext& ctx)
{
    const auto [v, j0] = strip_p(static_cast<i64>(j), ctx.p());
    const Residue shift = ctx.reduce_unsigned(checked_power(ctx.p(), ctx.a() - v));
    const Residue cofactor = ctx.reduce(j0);
    return ctx.mul(ctx.sub(ctx.mul(h, shift), cofactor), mod_inv(cofactor, ctx));
}

}  // namespace

ValUnit central_binom(u64 k, const PrimeContext& ctx)
{
    require_below_pa(k, ctx, "central_binom");
    ValUnit acc = ValUnit::one();
    for (u64 j = 1; j <= k; ++j) {
        acc = valunit_mul(acc, ValUnit::from_integer(static_cast<i64>(k + j), ctx), ctx);
        acc = valunit_div(acc, ValUnit::from_integer(static_cast<i64>(j), ctx), ctx);
    }
    return acc;
}

Residue shifted_binom(Residue h, u64 k, const PrimeContext& ctx)
{
    require_below_pa(k, ctx, "shifted_binom");
    Residue acc = ctx.reduce_unsigned(1);
    for (u64 j = 1; j <= k; ++j) acc = ctx.mul(acc, shifted_factor(h, j, ctx));
    return acc;
}

Residue harmonic_scaled(u64 k, const PrimeContext& ctx)
{
    if (k == 0) throw std::invalid_argument("harmonic_scaled: k must be at least 1");
    require_below_pa(k, ctx, "harmonic_scaled");
    const PrimeContext modp = ctx.with_precision(1);
    const u64 step = checked_power(ctx.p(), ctx.a() - 1);
    Residue acc{0};
    // j = p^(a-1) j0 with j0 < p; every other j contributes p^(>0)/j0 = 0 mod p.
    for (u64 j = step; j <= k; j += step) {
        acc = modp.add(acc, mod_inv(modp.reduce_unsigned(j / step), modp));
    }
    return acc;
}

BinomTable::BinomTable(const PrimeContext& ctx) : ctx_(ctx)
{
    const u64 n = ctx.p_pow_a();
    central_.reserve(n);
    central_residue_.reserve(n);
    shift_power_.assign(n, Residue{0});
    inv_cofactor_.assign(n, Residue{0});
    cofactor_.assign(n, Residue{0});

    // C(2k,k) = C(2k-2,k-1) * 2(2k-1) / k
    ValUnit c = ValUnit::one();
    for (u64 k = 0; k < n; ++k) {
        if (k > 0) {
            c = valunit_mul(c, ValUnit::from_integer(static_cast<i64>(2 * (2 * k - 1)), ctx), ctx);
            c = valunit_div(c, ValUnit::from_integer(static_cast<i64>(k), ctx), ctx);
        }
        central_.push_back(c);
        central_residue_.push_back(valunit_to_residue(c, ctx));
    }

    for (u64 j = 1; j < n; ++j) {
        const auto [v, j0] = strip_p(static_cast<i64>(j), ctx.p());
        shift_power_[j] = ctx.reduce_unsigned(checked_power(ctx.p(), ctx.a() - v));
        cofactor_[j] = ctx.reduce(j0);
        inv_cofactor_[j] = mod_inv(cofactor_[j], ctx);
    }
}

std::vector<Residue> BinomTable::shifted(Residue h) const
{
    const u64 n = size();
    std::vector<Residue> out;
    out.reserve(n);
    Residue acc = ctx_.reduce_unsigned(1);
    out.push_back(acc);
    for (u64 j = 1; j < n; ++j) {
        const Residue factor = ctx_.mul(ctx_.sub(ctx_.mul(h, shift_power_[j]), cofactor_[j]), inv_cofactor_[j]);
        acc = ctx_.mul(acc, factor);
        out.push_back(acc);
    }
    return out;
}

}  // namespace binlab
