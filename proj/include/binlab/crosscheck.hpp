#pragma once

#include <vector>

#include "binlab/modular.hpp"

namespace binlab {

/// One modular-vs-exact comparison of the weighted binomial sum.
struct CrosscheckRecord {
    std::size_t index = 0;
    u64 p = 0;
    unsigned a = 1;
    i64 h = 0;
    i64 z_num = 1;
    i64 z_den = 1;
    u64 modulus = 0;
    Residue fast;
    Residue exact;
    bool holds = false;
};

/// Seeded random instances with p <= 31, p^a <= 400, e = 2, h and z units.
std::vector<CrosscheckRecord> run_crosscheck(std::size_t samples, u64 seed);

}  // namespace binlab
