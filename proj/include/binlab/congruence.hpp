#pragma once

// Left-hand sums and right-hand closed forms for the theorem, corollary and
// lemma congruences, paired into exact Verdicts.
//
// Identifiers:
//   theorems/corollaries  1.1 1.2 1.4 1.5 1.6 1.7 1.8 1.9 1.10 1.11 1.12
//   supporting            L2.1 L2.2 L2.3 L2.4 L2.5 E2.6 morley remark1.1

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "binlab/binomial.hpp"
#include "binlab/modular.hpp"

namespace binlab {

class PreconditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter point of one check. h and m are p-adic integers given by an
/// integer representative; they are reduced into the context on use.
struct Params {
    u64 p = 3;
    unsigned a = 1;
    std::optional<i64> h;
    std::optional<i64> m;

    friend bool operator==(const Params&, const Params&) = default;
};

struct Verdict {
    std::string id;
    Params params;
    Residue lhs;
    Residue rhs;
    u64 modulus = 0;
    bool holds = false;
};

struct IdInfo {
    std::string_view id;
    bool supporting = false;  // lemma / auxiliary congruence
    bool uses_h = false;
    bool uses_m = false;
    bool uses_a = true;       // false: only a = 1 is meaningful
    unsigned native_e = 2;    // the verdict compares mod p^native_e
    bool unit_h = false;      // hypothesis includes p not dividing h
};

/// Every id accepted by verify(), in canonical order.
std::span<const IdInfo> known_ids();

/// Throws UnknownId.
const IdInfo& id_info(std::string_view id);

/// The hypotheses of `id` checked against `params`; std::nullopt when all hold,
/// otherwise a description of the first failing one.
std::optional<std::string> precondition_failure(std::string_view id, const Params& params);

/// Shares BinomTables between checks on the same (p, a, e). Not thread-safe.
class TableCache {
public:
    const BinomTable& get(const PrimeContext& ctx);

private:
    std::map<std::tuple<u64, unsigned, unsigned>, std::unique_ptr<BinomTable>> tables_;
};

/// sum_{k=0}^{p^a-1} C(hp^a-1,k) C(2k,k) z^k mod p^e. Throws NotInvertible when p | z.
Residue weighted_sum(Residue h, Residue z, const BinomTable& table);
Residue weighted_sum(Residue h, Residue z, const PrimeContext& ctx);

/// Same sum with an arbitrary weight w_k in place of z^k; weights.size() must be p^a.
Residue weighted_sum(Residue h, std::span<const Residue> weights, const BinomTable& table);

/// Closed form of the h-family congruence mod p^2. ctx.e() must be 2.
/// Throws PreconditionViolated when p | h, or 2h = 1 (mod p) with p^a = 3.
Residue rhs_theorem_1_1(Residue h, const PrimeContext& ctx);

/// Closed form of the (h, m)-family congruence mod p^2, with its p^a = 3,
/// m = 1 (mod 3) correction. ctx.e() must be 2. Throws PreconditionViolated when p | m.
Residue rhs_theorem_1_2(Residue h, Residue m, const PrimeContext& ctx);

/// Right side of the id 1.8 form: only valid when hm = 2 (mod p).
Residue rhs_theorem_1_2_special(Residue h, Residue m, const PrimeContext& ctx);

/// Closed forms of the corollaries 1.2, 1.4, 1.5, 1.6, 1.9, 1.10, 1.11, 1.12 mod p^2.
Residue rhs_corollary(std::string_view id, const PrimeContext& ctx);

/// Evaluates both sides of any known id. Throws UnknownId or PreconditionViolated.
Verdict verify(std::string_view id, const Params& params);
Verdict verify(std::string_view id, const Params& params, TableCache& cache);

/// The lemma / auxiliary ids (L2.*, E2.6, morley, remark1.1), at their native moduli.
/// Throws std::logic_error if a quotient the theory says is divisible by p is not.
Verdict check_supporting(std::string_view id, const Params& params, TableCache& cache);
Verdict check_supporting(std::string_view id, const Params& params);

/// Jacobi symbol (x / p^k) of a residue; (x / p^0) = 1.
int jacobi_prime_power(Residue x, unsigned k, const PrimeContext& ctx);

// ---------------------------------------------------------------------------
// Scanning

/// How h or m values are enumerated at each (p, a) point.
struct ValuePolicy {
    enum class Kind { All, Sample, List, Range };

    Kind kind = Kind::All;
    std::size_t count = 0;
    u64 seed = 0;
    std::vector<i64> values;
    i64 lo = 0;
    i64 hi = 0;

    static ValuePolicy all() { return {}; }
    static ValuePolicy sample(std::size_t count, u64 seed) { return {Kind::Sample, count, seed, {}, 0, 0}; }
    static ValuePolicy list(std::vector<i64> values) { return {Kind::List, 0, 0, std::move(values), 0, 0}; }
    static ValuePolicy range(i64 lo, i64 hi) { return {Kind::Range, 0, 0, {}, lo, hi}; }

    /// Parses "all", "sample:N:SEED", "list:1,2,3" or "range:LO:HI".
    /// Throws std::invalid_argument.
    static ValuePolicy parse(std::string_view text);
};

struct ScanRequest {
    std::string id;
    u64 p_min = 3;
    u64 p_max = 3;
    unsigned a_max = 1;
    u64 pa_max = 0;  // 0: no bound on p^a beyond a_max
    ValuePolicy h = ValuePolicy::all();
    ValuePolicy m = ValuePolicy::range(-20, 20);
};

struct ScanEntry {
    Params params;
    std::optional<Verdict> verdict;
    std::string skipped_reason;  // non-empty iff verdict is empty
};

/// Deterministic enumeration sorted by p, a, h, m. Precondition failures
/// become skipped entries. Throws UnknownId.
std::vector<ScanEntry> scan(const ScanRequest& request);

/// Values drawn for one (p, a) point; exposed for tests.
std::vector<i64> expand_policy(const ValuePolicy& policy, u64 p, unsigned a, bool units_only, u64 salt);

/// Odd primes in [lo, hi].
std::vector<u64> odd_primes(u64 lo, u64 hi);

}  // namespace binlab
