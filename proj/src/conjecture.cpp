#include "binlab/conjecture.hpp"

#include "binlab/binomial.hpp"
#include "binlab/congruence.hpp"
#include "binlab/lucas.hpp"
#include "binlab/oracle.hpp"

namespace binlab {

namespace {

constexpr const char* kConjectural = "conjectural: empirical support only";

// sum_{k<p} C(p-1,k) C(2k,k) w_k with w_k supplied per k.
Residue row_sum(const BinomTable& table, const std::vector<Residue>& weights)
{
    return weighted_sum(Residue{1}, weights, table);
}

ConjectureReport lucas_conjecture(const std::string& id, u64 p, unsigned e)
{
    if (auto failure = conjecture_precondition_failure(id, p)) {
        throw std::invalid_argument("conjecture " + id + ": " + *failure);
    }
    const PrimeContext ctx(p, 1, e);
    const BinomTable table(ctx);
    std::vector<Residue> weights(p);
    Residue lhs{0};
    Residue rhs{0};
    const Residue sign = ctx.reduce(((p - 1) / 2) % 2 == 0 ? 1 : -1);

    if (id == "1.2") {
        // (-1)^k - (-3)^(-k)
        const Residue inv_minus_3 = mod_inv(ctx.reduce(-3), ctx);
        Residue a_pow{1}, b_pow{1};
        for (u64 k = 0; k < p; ++k) {
            weights[k] = ctx.sub(a_pow, b_pow);
            a_pow = ctx.neg(a_pow);
            b_pow = ctx.mul(b_pow, inv_minus_3);
        }
        lhs = row_sum(table, weights);
        const int symbol = jacobi(static_cast<i64>(p), 3);
        rhs = ctx.mul(ctx.reduce(symbol), ctx.sub(mod_pow(Residue{3}, p - 1, ctx), Residue{1}));
    } else if (id == "1.3") {
        const std::vector<u64> u = lucas_u_table({4, 1}, p, ctx.modulus());
        for (u64 k = 0; k < p; ++k) {
            weights[k] = k % 2 == 0 ? Residue{u[k]} : ctx.neg(Residue{u[k]});
        }
        lhs = row_sum(table, weights);
        rhs = ctx.mul(sign, Residue{u[p - 1]});
    } else {
        const std::vector<u64> u = lucas_u_table({4, 2}, p, ctx.modulus());
        const Residue inv_minus_2 = mod_inv(ctx.reduce(-2), ctx);
        Residue power{1};
        for (u64 k = 0; k < p; ++k) {
            weights[k] = ctx.mul(Residue{u[k]}, power);
            power = ctx.mul(power, inv_minus_2);
        }
        lhs = row_sum(table, weights);
        rhs = ctx.mul(sign, Residue{u[p - 1]});
    }

    ConjectureReport report;
    report.id = id;
    report.strength = e == 3 ? Strength::Full : Strength::ModP2;
    report.p = p;
    report.modulus = ctx.modulus();
    report.observed = static_cast<i64>(lhs.value);
    report.expected = static_cast<i64>(rhs.value);
    report.holds = lhs == rhs;
    report.note = e == 3 ? kConjectural : "proved strength";
    return report;
}

}  // namespace

bool is_conjecture_id(const std::string& id)
{
    return id == "1.1" || id == "1.1-int" || id == "1.2" || id == "1.3" || id == "1.4";
}

std::optional<std::string> conjecture_precondition_failure(const std::string& id, u64 p, unsigned a)
{
    if (p < 3 || !is_prime(p)) return "p must be an odd prime";
    if (id == "1.1") {
        const u64 pa = checked_power(p, a);
        if (pa == 0 || checked_power(p, a + 1) == 0) return "p^(a+1) exceeds the native word bound";
        if (pa <= 3) return "p^a > 3 required";
    } else if (id == "1.2") {
        if (p <= 3) return "p > 3 required";
    } else if (id == "1.3") {
        if (p % 12 != 1 && p % 12 != 11) return "p = +-1 (mod 12) required";
    } else if (id == "1.4") {
        if (p % 8 != 1 && p % 8 != 7) return "p = +-1 (mod 8) required";
    } else if (id != "1.1-int") {
        throw std::invalid_argument("unknown conjecture id: " + id);
    }
    return std::nullopt;
}

std::vector<i64> conjecture_1_1_lifts(u64 p)
{
    std::vector<i64> lifts;
    const auto base = static_cast<i64>((p + 1) / 2);
    for (u64 t = 0; t < p; ++t) lifts.push_back(base + static_cast<i64>(t * p));
    return lifts;
}

ConjectureReport check_conjecture_1_1_divisibility(u64 p, unsigned a, i64 h)
{
    if (auto failure = conjecture_precondition_failure("1.1", p, a)) {
        throw std::invalid_argument("conjecture 1.1: " + *failure);
    }
    const PrimeContext ctx(p, a, a + 1);
    const Residue hr = ctx.reduce(h);
    if (ctx.sub(ctx.add(hr, hr), Residue{1}).value % p != 0) {
        throw std::invalid_argument("conjecture 1.1: 2h = 1 (mod p) required");
    }
    const Residue z = ctx.neg(ctx.mul(hr, mod_inv(Residue{2}, ctx)));
    const Residue sum = weighted_sum(hr, z, BinomTable(ctx));

    ConjectureReport report;
    report.id = "1.1";
    report.p = p;
    report.a = a;
    report.h = h;
    report.modulus = ctx.modulus();
    report.observed = static_cast<i64>(sum.value);
    report.expected = 0;
    report.holds = sum.value == 0;
    report.note = kConjectural;
    return report;
}

ConjectureReport check_conjecture_1_1_integrality(u64 p, u64 n, i64 h)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("conjecture 1.1: p must be an odd prime");
    if (n == 0) throw std::invalid_argument("conjecture 1.1: n must be positive");
    const auto sp = static_cast<i64>(p);
    if (((2 * h - 1) % sp + sp) % sp != 0) throw std::invalid_argument("conjecture 1.1: 2h = 1 (mod p) required");

    const oracle::ExactRational z(oracle::BigInt(static_cast<long>(-h)), oracle::BigInt(2));
    const oracle::ExactRational sum = oracle::exact_weighted_sum(h, n, z);
    const auto v_sum = oracle::rational_valuation(sum, p);
    const auto v_n = *oracle::valuation(oracle::BigInt(static_cast<unsigned long>(n)), p);

    ConjectureReport report;
    report.id = "1.1-int";
    report.p = p;
    report.n = n;
    report.h = h;
    report.modulus = 0;
    report.observed = v_sum;
    report.expected = v_n;
    report.holds = !v_sum || *v_sum >= v_n;
    report.note = std::string(kConjectural) + "; h fixed per p";
    return report;
}

ConjectureReport check_conjecture_1_2(u64 p) { return lucas_conjecture("1.2", p, 3); }
ConjectureReport check_conjecture_1_3(u64 p) { return lucas_conjecture("1.3", p, 3); }
ConjectureReport check_conjecture_1_4(u64 p) { return lucas_conjecture("1.4", p, 3); }

ConjectureReport weakened_mod_p2_check(const std::string& id, u64 p)
{
    if (id != "1.2" && id != "1.3" && id != "1.4") {
        throw std::invalid_argument("weakened check exists only for 1.2, 1.3, 1.4");
    }
    return lucas_conjecture(id, p, 2);
}

std::vector<ConjectureEntry> scan_conjecture(const ConjectureScanRequest& request)
{
    if (!is_conjecture_id(request.id)) throw std::invalid_argument("unknown conjecture id: " + request.id);
    std::vector<ConjectureEntry> entries;
    for (u64 p : odd_primes(request.p_min, request.p_max)) {
        if (request.id == "1.1") {
            for (unsigned a = 1; a <= request.a_max; ++a) {
                const u64 pa = checked_power(p, a);
                if (pa == 0 || (request.pa_max != 0 && pa > request.pa_max)) break;
                if (auto failure = conjecture_precondition_failure("1.1", p, a)) {
                    entries.push_back({p, a, std::nullopt, *failure});
                    continue;
                }
                for (i64 h : conjecture_1_1_lifts(p)) {
                    entries.push_back({p, a, check_conjecture_1_1_divisibility(p, a, h), {}});
                }
            }
        } else if (request.id == "1.1-int") {
            const auto h = static_cast<i64>((p + 1) / 2);
            for (u64 n = 1; n <= request.n_max; ++n) {
                entries.push_back({p, 1, check_conjecture_1_1_integrality(p, n, h), {}});
            }
        } else {
            if (auto failure = conjecture_precondition_failure(request.id, p)) {
                entries.push_back({p, 1, std::nullopt, *failure});
                continue;
            }
            entries.push_back({p, 1, lucas_conjecture(request.id, p, 3), {}});
            entries.push_back({p, 1, lucas_conjecture(request.id, p, 2), {}});
        }
    }
    return entries;
}

}  // namespace binlab
