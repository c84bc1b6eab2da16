#include "binlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "binlab/congruence.hpp"
#include "binlab/conjecture.hpp"
#include "binlab/crosscheck.hpp"
#include "binlab/identity.hpp"
#include "report.hpp"

namespace binlab::cli {

namespace {

using json = nlohmann::ordered_json;

/// Options shared by every subcommand.
struct RunConfig {
    std::vector<std::string> ids;
    u64 p_min = 3;
    u64 p_max = 0;  // 0: same as p_min
    unsigned a_max = 1;
    u64 pa_max = 0;
    std::string h_policy = "all";
    std::string m_policy = "range:-20:20";
    std::optional<unsigned> precision;
    u64 n_max = 20;
    i64 m_min = -8;
    i64 m_max = 8;
    std::size_t samples = 200;
    u64 seed = 42;
    std::string format;
    std::string output;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json optional_int(const std::optional<i64>& v)
{
    return v ? json(*v) : json(nullptr);
}

/// Where records go: --output file or the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
    {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (!file_) throw ConfigError("cannot open output file " + path);
        stream_ = &file_;
    }

    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

Format resolve_format(const RunConfig& config)
{
    std::string text = config.format;
    if (text.empty()) {
        const char* env = std::getenv(kFormatEnv);
        text = env && *env ? env : "json-lines";
    }
    try {
        return parse_format(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void check_prime_range(RunConfig& config)
{
    if (config.p_max == 0) config.p_max = config.p_min;
    if (config.p_min > config.p_max) throw ConfigError("--p-min must not exceed --p-max");
    if (config.a_max == 0) throw ConfigError("--a-max must be at least 1");
}

int cmd_verify(RunConfig config, std::ostream& out, std::ostream& err)
{
    check_prime_range(config);
    const Format format = resolve_format(config);
    for (const auto& id : config.ids) {
        try {
            id_info(id);
        } catch (const UnknownId& e) {
            throw ConfigError(e.what());
        }
        if (config.precision && (*config.precision == 0 || *config.precision > id_info(id).native_e)) {
            throw ConfigError("--precision must be between 1 and the native exponent of " + id);
        }
    }
    ValuePolicy h_policy, m_policy;
    try {
        h_policy = ValuePolicy::parse(config.h_policy);
        m_policy = ValuePolicy::parse(config.m_policy);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    Sink sink(config.output, out);
    ReportWriter writer(format, {"id", "p", "a", "h", "m", "modulus", "lhs", "rhs", "holds", "skipped_reason"},
                        sink.stream());
    std::size_t held = 0, failed = 0, skipped = 0;
    for (const auto& id : config.ids) {
        ScanRequest request{id, config.p_min, config.p_max, config.a_max, config.pa_max, h_policy, m_policy};
        for (const ScanEntry& entry : scan(request)) {
            json record;
            record["id"] = id;
            record["p"] = entry.params.p;
            record["a"] = entry.params.a;
            record["h"] = optional_int(entry.params.h);
            record["m"] = optional_int(entry.params.m);
            if (entry.verdict) {
                Verdict v = *entry.verdict;
                if (config.precision) {
                    v.modulus = checked_power(v.params.p, *config.precision);
                    v.lhs.value %= v.modulus;
                    v.rhs.value %= v.modulus;
                    v.holds = v.lhs == v.rhs;
                }
                record["modulus"] = v.modulus;
                record["lhs"] = v.lhs.value;
                record["rhs"] = v.rhs.value;
                record["holds"] = v.holds;
                record["skipped_reason"] = nullptr;
                (v.holds ? held : failed) += 1;
            } else {
                record["modulus"] = nullptr;
                record["lhs"] = nullptr;
                record["rhs"] = nullptr;
                record["holds"] = nullptr;
                record["skipped_reason"] = entry.skipped_reason;
                ++skipped;
            }
            writer.write(record);
        }
    }
    writer.finish("verify: " + std::to_string(held + failed + skipped) + " records, " + std::to_string(held) +
                      " hold, " + std::to_string(failed) + " fail, " + std::to_string(skipped) + " skipped",
                  err);
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_scan_conjecture(RunConfig config, std::ostream& out, std::ostream& err)
{
    check_prime_range(config);
    const Format format = resolve_format(config);
    for (const auto& id : config.ids) {
        if (!is_conjecture_id(id)) throw ConfigError("unknown conjecture id: " + id);
    }

    Sink sink(config.output, out);
    ReportWriter writer(format,
                        {"id", "strength", "p", "a", "n", "h", "modulus", "observed", "expected", "holds", "flagged",
                         "note", "skipped_reason"},
                        sink.stream());
    std::size_t full_hold = 0, counterexamples = 0, proved_hold = 0, proved_fail = 0, skipped = 0;
    for (const auto& id : config.ids) {
        ConjectureScanRequest request{id, config.p_min, config.p_max, config.a_max, config.pa_max, config.n_max};
        for (const ConjectureEntry& entry : scan_conjecture(request)) {
            json record;
            record["id"] = id;
            record["p"] = entry.p;
            record["a"] = entry.a;
            if (!entry.report) {
                record["skipped_reason"] = entry.skipped_reason;
                ++skipped;
                writer.write(record);
                continue;
            }
            const ConjectureReport& r = *entry.report;
            const bool full = r.strength == Strength::Full;
            record["strength"] = full ? "full" : "mod p^2";
            record["n"] = r.n ? json(*r.n) : json(nullptr);
            record["h"] = optional_int(r.h);
            record["modulus"] = r.modulus == 0 ? json(nullptr) : json(r.modulus);
            record["observed"] = r.observed ? json(*r.observed) : json("inf");
            record["expected"] = r.expected;
            record["holds"] = r.holds;
            record["flagged"] = full && !r.holds;
            record["note"] = r.note;
            record["skipped_reason"] = nullptr;
            writer.write(record);
            if (full) {
                if (r.holds) {
                    ++full_hold;
                } else {
                    ++counterexamples;
                    err << "COUNTEREXAMPLE conjecture " << r.id << " p=" << r.p << " a=" << r.a
                        << (r.h ? " h=" + std::to_string(*r.h) : "") << (r.n ? " n=" + std::to_string(*r.n) : "")
                        << '\n';
                }
            } else {
                (r.holds ? proved_hold : proved_fail) += 1;
            }
        }
    }
    writer.finish("scan-conjecture: " + std::to_string(full_hold) + " full-strength hold, " +
                      std::to_string(counterexamples) + " counterexamples, " + std::to_string(proved_hold) +
                      " mod p^2 hold, " + std::to_string(proved_fail) + " mod p^2 fail, " + std::to_string(skipped) +
                      " skipped",
                  err);
    return proved_fail == 0 ? kExitOk : kExitFailure;
}

int cmd_identity(RunConfig config, std::ostream& out, std::ostream& err)
{
    if (config.n_max < 1) throw ConfigError("--n-max must be at least 1");
    if (config.m_min > config.m_max) throw ConfigError("--m-min must not exceed --m-max");
    const Format format = resolve_format(config);

    Sink sink(config.output, out);
    ReportWriter writer(format, {"identity", "n", "m", "lhs", "rhs", "oracle", "holds"}, sink.stream());
    std::size_t held = 0, failed = 0;
    for (u64 n = 1; n <= config.n_max; ++n) {
        for (i64 m = config.m_min; m <= config.m_max; ++m) {
            const BigInt lhs = lhs_identity_1_3(n, m);
            const BigInt rhs = rhs_identity_1_3(n, m);
            const BigInt ct = constant_term_oracle(n, m);
            const bool holds = lhs == rhs && rhs == ct;
            (holds ? held : failed) += 1;
            writer.write(json{{"identity", "1.3"}, {"n", n}, {"m", m}, {"lhs", lhs.get_str()},
                              {"rhs", rhs.get_str()}, {"oracle", ct.get_str()}, {"holds", holds}});
        }
    }
    for (u64 n = 0; n <= config.n_max; ++n) {
        for (i64 m = config.m_min; m <= config.m_max; ++m) {
            const auto [lhs, rhs] = identity_2_5_sides(n, m);
            const bool holds = lhs == rhs;
            (holds ? held : failed) += 1;
            writer.write(json{{"identity", "2.5"}, {"n", n}, {"m", m}, {"lhs", lhs.get_str()},
                              {"rhs", rhs.get_str()}, {"oracle", nullptr}, {"holds", holds}});
        }
    }
    writer.finish("identity: " + std::to_string(held) + " hold, " + std::to_string(failed) + " fail", err);
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    if (config.samples == 0) throw ConfigError("--samples must be at least 1");
    const Format format = resolve_format(config);

    Sink sink(config.output, out);
    ReportWriter writer(format, {"index", "p", "a", "h", "z", "modulus", "fast", "oracle", "holds"}, sink.stream());
    std::size_t held = 0, failed = 0;
    for (const CrosscheckRecord& r : run_crosscheck(config.samples, config.seed)) {
        (r.holds ? held : failed) += 1;
        writer.write(json{{"index", r.index}, {"p", r.p}, {"a", r.a}, {"h", r.h},
                          {"z", std::to_string(r.z_num) + "/" + std::to_string(r.z_den)}, {"modulus", r.modulus},
                          {"fast", r.fast.value}, {"oracle", r.exact.value}, {"holds", r.holds}});
    }
    writer.finish("crosscheck: " + std::to_string(held) + " agree, " + std::to_string(failed) + " disagree", err);
    return failed == 0 ? kExitOk : kExitFailure;
}

void add_output_options(CLI::App* cmd, RunConfig& config)
{
    cmd->add_option("--format", config.format, "json-lines | csv | human (default: $BINLAB_FORMAT or json-lines)");
    cmd->add_option("--output,-o", config.output, "write records to this file instead of stdout");
}

void add_range_options(CLI::App* cmd, RunConfig& config)
{
    cmd->add_option("--id", config.ids, "identifier (repeatable)")->required()->delimiter(',');
    cmd->add_option("--p-min", config.p_min, "smallest prime");
    cmd->add_option("--p-max", config.p_max, "largest prime (default: --p-min)");
    cmd->add_option("--a-max", config.a_max, "largest exponent a");
    cmd->add_option("--pa-max", config.pa_max, "largest p^a (0: no bound)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of binomial-sum congruences modulo prime powers", "binlab"};
    app.require_subcommand(1);
    RunConfig config;

    auto* verify_cmd = app.add_subcommand("verify", "check theorem, corollary and lemma congruences");
    verify_cmd->set_help_flag("--help", "print this help message and exit");
    add_range_options(verify_cmd, config);
    verify_cmd->add_option("--h", config.h_policy, "h policy: all | sample:N:SEED | list:a,b | range:LO:HI");
    verify_cmd->add_option("--m", config.m_policy, "m policy, same syntax as --h");
    verify_cmd->add_option("--precision", config.precision, "compare modulo p^E, E at most the native exponent");
    add_output_options(verify_cmd, config);

    auto* scan_cmd = app.add_subcommand("scan-conjecture", "scan conjectures 1.1, 1.1-int, 1.2, 1.3, 1.4");
    add_range_options(scan_cmd, config);
    scan_cmd->add_option("--n-max", config.n_max, "largest n for the 1.1-int integrality scan");
    add_output_options(scan_cmd, config);

    auto* identity_cmd = app.add_subcommand("identity", "exact identity grid");
    identity_cmd->add_option("--n-max", config.n_max, "largest n");
    identity_cmd->add_option("--m-min", config.m_min, "smallest m");
    identity_cmd->add_option("--m-max", config.m_max, "largest m");
    add_output_options(identity_cmd, config);

    auto* cross_cmd = app.add_subcommand("crosscheck", "modular fast path against the exact oracle");
    cross_cmd->add_option("--samples", config.samples, "number of random instances");
    cross_cmd->add_option("--seed", config.seed, "random seed");
    add_output_options(cross_cmd, config);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify_cmd) return cmd_verify(config, out, err);
        if (*scan_cmd) return cmd_scan_conjecture(config, out, err);
        if (*identity_cmd) return cmd_identity(config, out, err);
        return cmd_crosscheck(config, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace binlab::cli
