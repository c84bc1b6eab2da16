#pragma once

// Numerical scanners for the open conjectures. Full-strength outcomes are
// reported only; the mod p^2 weakenings of 1.2-1.4 are proved statements and
// are the only reports whose failure counts as an error.

#include <optional>
#include <string>
#include <vector>

#include "binlab/modular.hpp"

namespace binlab {

enum class Strength { Full, ModP2 };

struct ConjectureReport {
    std::string id;  // "1.1", "1.1-int", "1.2", "1.3", "1.4"
    Strength strength = Strength::Full;
    u64 p = 0;
    unsigned a = 1;
    std::optional<u64> n;  // integrality checks only
    std::optional<i64> h;
    u64 modulus = 0;       // p^e for residue checks, 0 for valuation checks
    // Residues for congruence checks; valuations for integrality checks, where
    // observed == std::nullopt means the sum is exactly zero.
    std::optional<i64> observed;
    i64 expected = 0;
    bool holds = false;
    std::string note;
};

/// sum_{k<p^a} C(hp^a-1,k) C(2k,k) (-h/2)^k = 0 (mod p^(a+1)) for 2h = 1 (mod p).
/// Throws std::invalid_argument for p^a <= 3 or 2h != 1 (mod p).
ConjectureReport check_conjecture_1_1_divisibility(u64 p, unsigned a, i64 h);

/// The lifts (p+1)/2 + t p, t = 0 .. p-1, scanned for the divisibility claim.
std::vector<i64> conjecture_1_1_lifts(u64 p);

/// v_p(sum_{k<n} C(hn-1,k) C(2k,k) (-h/2)^k) >= v_p(n), evaluated exactly.
ConjectureReport check_conjecture_1_1_integrality(u64 p, u64 n, i64 h);

/// Throws std::invalid_argument for p <= 3.
ConjectureReport check_conjecture_1_2(u64 p);
/// Throws std::invalid_argument unless p = +-1 (mod 12).
ConjectureReport check_conjecture_1_3(u64 p);
/// Throws std::invalid_argument unless p = +-1 (mod 8).
ConjectureReport check_conjecture_1_4(u64 p);

/// The same congruence mod p^2 for id in {1.2, 1.3, 1.4}.
ConjectureReport weakened_mod_p2_check(const std::string& id, u64 p);

/// Reason p is outside the id's prime class, if it is.
std::optional<std::string> conjecture_precondition_failure(const std::string& id, u64 p, unsigned a = 1);

struct ConjectureScanRequest {
    std::string id;
    u64 p_min = 3;
    u64 p_max = 3;
    unsigned a_max = 1;
    u64 pa_max = 0;  // 0: unbounded beyond a_max
    u64 n_max = 50;  // integrality scans
};

struct ConjectureEntry {
    u64 p = 0;
    unsigned a = 1;
    std::optional<ConjectureReport> report;
    std::string skipped_reason;
};

/// Sorted by p, a, then h or n; for 1.2-1.4 the full report precedes the mod p^2 one.
/// Throws std::invalid_argument for unknown ids.
std::vector<ConjectureEntry> scan_conjecture(const ConjectureScanRequest& request);

bool is_conjecture_id(const std::string& id);

}  // namespace binlab
