#pragma once

// Central binomials C(2k,k) and shifted binomials C(hp^a-1,k) modulo p^e.
//
// Every quantity is built factor by factor from exact machine integers whose
// p-part is stripped before the unit is reduced, so unit products mod p^e are
// exact and no precision is lost to divisions by p.

#include <vector>

#include "binlab/modular.hpp"

namespace binlab {

/// C(2k,k) = prod_{j=1..k} (k+j)/j as p^v * u. Requires k < p^a.
ValUnit central_binom(u64 k, const PrimeContext& ctx);

/// C(hp^a - 1, k) mod p^e for any p-adic h. Requires k < p^a.
///
/// Uses (hp^a - j)/j = (h p^(a - v) - j0)/j0 with j = p^v j0; since v <= a-1
/// every factor is a p-adic unit.
Residue shifted_binom(Residue h, u64 k, const PrimeContext& ctx);

/// (p^(a-1) H_k) mod p for 1 <= k < p^a. Only the j with v_p(j) = a-1 contribute.
/// The result is a residue mod p, not mod p^e.
Residue harmonic_scaled(u64 k, const PrimeContext& ctx);

/// Per-context precomputation shared by every sum over k = 0 .. p^a - 1.
/// Immutable after construction.
class BinomTable {
public:
    explicit BinomTable(const PrimeContext& ctx);

    const PrimeContext& context() const { return ctx_; }
    u64 size() const { return ctx_.p_pow_a(); }

    const ValUnit& central(u64 k) const { return central_[k]; }
    Residue central_residue(u64 k) const { return central_residue_[k]; }

    /// C(hp^a - 1, k) mod p^e for k = 0 .. p^a - 1.
    std::vector<Residue> shifted(Residue h) const;

private:
    PrimeContext ctx_;
    std::vector<ValUnit> central_;
    std::vector<Residue> central_residue_;
    // For j = p^v j0 (index j, slot 0 unused): p^(a-v) mod p^e and j0^{-1} mod p^e.
    std::vector<Residue> shift_power_;
    std::vector<Residue> inv_cofactor_;
    std::vector<Residue> cofactor_;
};

}  // namespace binlab
