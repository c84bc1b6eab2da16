#include <algorithm>
#include <charconv>
#include <random>

#include "binlab/congruence.hpp"

namespace binlab {

namespace {

u64 splitmix64(u64 x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

i64 parse_int(std::string_view text)
{
    i64 value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

void sort_unique(std::vector<i64>& values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

ValuePolicy ValuePolicy::parse(std::string_view text)
{
    const auto parts = split(text, ':');
    const std::string_view kind = parts.front();
    if (kind == "all" && parts.size() == 1) return all();
    if (kind == "sample" && parts.size() == 3) {
        const i64 count = parse_int(parts[1]);
        if (count < 0) throw std::invalid_argument("sample count must be nonnegative");
        return sample(static_cast<std::size_t>(count), static_cast<u64>(parse_int(parts[2])));
    }
    if (kind == "list" && parts.size() == 2) {
        std::vector<i64> values;
        for (std::string_view item : split(parts[1], ',')) values.push_back(parse_int(item));
        return list(std::move(values));
    }
    if (kind == "range" && parts.size() == 3) {
        const i64 lo = parse_int(parts[1]);
        const i64 hi = parse_int(parts[2]);
        if (lo > hi) throw std::invalid_argument("range: lo must not exceed hi");
        return range(lo, hi);
    }
    throw std::invalid_argument("bad value policy '" + std::string(text) +
                                "' (expected all | sample:N:SEED | list:a,b,... | range:LO:HI)");
}

std::vector<u64> odd_primes(u64 lo, u64 hi)
{
    std::vector<u64> out;
    for (u64 n = std::max<u64>(lo, 3); n <= hi; ++n) {
        if (n % 2 == 1 && is_prime(n)) out.push_back(n);
    }
    return out;
}

std::vector<i64> expand_policy(const ValuePolicy& policy, u64 p, unsigned a, bool units_only, u64 salt)
{
    std::vector<i64> values;
    switch (policy.kind) {
    case ValuePolicy::Kind::All:
        for (u64 x = 0; x < p; ++x) values.push_back(static_cast<i64>(x));
        break;
    case ValuePolicy::Kind::List:
        values = policy.values;
        break;
    case ValuePolicy::Kind::Range:
        for (i64 x = policy.lo; x <= policy.hi; ++x) values.push_back(x);
        break;
    case ValuePolicy::Kind::Sample: {
        // Draws representatives mod p^2, which fix every value mod p^2.
        const u64 bound = p * p;
        const u64 available = units_only ? bound - p : bound;
        const std::size_t target = static_cast<std::size_t>(std::min<u64>(policy.count, available));
        std::mt19937_64 rng(splitmix64(policy.seed ^ splitmix64(p * 0x100000001b3ULL + a) ^ splitmix64(salt)));
        std::vector<i64> drawn;
        while (drawn.size() < target) {
            const u64 x = rng() % bound;
            if (units_only && x % p == 0) continue;
            const auto v = static_cast<i64>(x);
            if (std::find(drawn.begin(), drawn.end(), v) == drawn.end()) drawn.push_back(v);
        }
        values = std::move(drawn);
        break;
    }
    }
    sort_unique(values);
    return values;
}

std::vector<ScanEntry> scan(const ScanRequest& request)
{
    const IdInfo& info = id_info(request.id);
    std::vector<ScanEntry> entries;

    for (u64 p : odd_primes(request.p_min, request.p_max)) {
        TableCache cache;
        const unsigned a_top = info.uses_a ? request.a_max : 1;
        for (unsigned a = 1; a <= a_top; ++a) {
            const u64 pa = checked_power(p, a);
            if (pa == 0 || (request.pa_max != 0 && pa > request.pa_max)) break;

            std::vector<std::optional<i64>> hs{std::nullopt};
            std::vector<std::optional<i64>> ms{std::nullopt};
            if (info.uses_h) {
                hs.clear();
                for (i64 h : expand_policy(request.h, p, a, info.unit_h, 1)) hs.emplace_back(h);
            }
            if (info.uses_m) {
                ms.clear();
                for (i64 m : expand_policy(request.m, p, a, false, 2)) ms.emplace_back(m);
            }

            std::vector<std::pair<std::optional<i64>, std::optional<i64>>> points;
            for (const auto& h : hs) {
                for (const auto& m : ms) {
                    std::optional<i64> hh = h;
                    if (request.id == "1.8" && h && m) {
                        // Keep the higher p-adic digits of h and force hm = 2 (mod p).
                        const auto sp = static_cast<i64>(p);
                        const i64 m_low = ((*m % sp) + sp) % sp;
                        if (m_low != 0) {
                            const PrimeContext modp(p, 1, 1);
                            const auto target = static_cast<i64>(
                                modp.mul(Residue{2}, mod_inv(Residue{static_cast<u64>(m_low)}, modp)).value);
                            const i64 h_low = ((*h % sp) + sp) % sp;
                            hh = *h - h_low + target;
                        }
                    }
                    points.emplace_back(hh, m);
                }
            }
            std::sort(points.begin(), points.end());
            points.erase(std::unique(points.begin(), points.end()), points.end());

            for (const auto& [h, m] : points) {
                ScanEntry entry{Params{p, a, h, m}, std::nullopt, {}};
                if (auto failure = precondition_failure(request.id, entry.params)) {
                    entry.skipped_reason = *failure;
                } else {
                    entry.verdict = verify(request.id, entry.params, cache);
                }
                entries.push_back(std::move(entry));
            }
        }
    }
    return entries;
}

}  // namespace binlab
