// Copyright 2026 The clusterbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterbench/report.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

namespace clusterbench {

using nlohmann::ordered_json;

std::string to_string(BenchMode mode) {
    switch (mode) {
        case BenchMode::Protocol1: return "protocol1";
        case BenchMode::Generic: return "generic";
        case BenchMode::Optimized: return "optimized";
    }
    return "protocol1";
}

BenchMode bench_mode_from_string(const std::string& s) {
    if (s == "protocol1") return BenchMode::Protocol1;
    if (s == "generic") return BenchMode::Generic;
    if (s == "optimized") return BenchMode::Optimized;
    throw std::invalid_argument("unknown bench mode: " + s);
}

ordered_json config_to_json(const BenchmarkConfig& config) {
    ordered_json j;
    j["n"] = config.n;
    j["m"] = config.m;
    j["beta"] = config.beta;
    j["beta_t"] = config.beta_t;
    j["c_t"] = config.c_t;
    j["omega"] = config.omega;
    j["trap_fraction"] = config.trap_fraction;
    j["exponent_mode"] = to_string(config.exponent_mode);
    j["seed"] = config.seed;
    if (config.trap_dist.fixed_subsets) j["fixed_trap_subsets"] = *config.trap_dist.fixed_subsets;
    return j;
}

BenchmarkConfig config_from_json(const ordered_json& j) {
    BenchmarkConfig config;
    for (const auto& [key, value] : j.items()) {
        if (key == "n") config.n = value.get<long>();
        else if (key == "m") config.m = value.get<long>();
        else if (key == "beta") config.beta = value.get<double>();
        else if (key == "beta_t") config.beta_t = value.get<double>();
        else if (key == "c_t") config.c_t = value.get<double>();
        else if (key == "omega") config.omega = value.get<double>();
        else if (key == "trap_fraction") config.trap_fraction = value.get<double>();
        else if (key == "exponent_mode") config.exponent_mode = exponent_mode_from_string(value.get<std::string>());
        else if (key == "seed") config.seed = value.get<std::uint64_t>();
        else if (key == "fixed_trap_subsets")
            config.trap_dist.fixed_subsets = value.get<std::vector<std::vector<std::size_t>>>();
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    config.validate();
    return config;
}

std::string config_hash(const BenchmarkConfig& config) {
    const std::string canon = config_to_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["mode"] = to_string(cert.mode);
    j["graph"] = {{"width", cert.width}, {"depth", cert.depth}};
    j["config"] = config_to_json(cert.config);
    j["config_hash"] = config_hash(cert.config);
    j["counts"] = {{"rounds", cert.rounds},
                   {"trap_rounds", cert.trap_rounds},
                   {"activated", cert.activated},
                   {"failed", cert.failed},
                   {"accepted_repetitions", cert.accepted_repetitions}};
    j["z"] = cert.z;
    j["z_t"] = cert.z_t;
    j["z_fail"] = cert.z_fail;
    j["gamma"] = cert.gamma;
    j["exponent_mode"] = to_string(cert.config.exponent_mode);
    j["seed"] = cert.config.seed;
    j["verdict"] = cert.accepted ? "accept" : "reject";
    return j;
}

Certificate certificate_from_json(const ordered_json& j) {
    Certificate cert;
    cert.mode = bench_mode_from_string(j.at("mode").get<std::string>());
    cert.width = j.at("graph").at("width").get<std::size_t>();
    cert.depth = j.at("graph").at("depth").get<std::size_t>();
    cert.config = config_from_json(j.at("config"));
    cert.rounds = j.at("counts").at("rounds").get<long>();
    cert.trap_rounds = j.at("counts").at("trap_rounds").get<long>();
    cert.activated = j.at("counts").at("activated").get<long>();
    cert.failed = j.at("counts").at("failed").get<long>();
    cert.accepted_repetitions = j.at("counts").at("accepted_repetitions").get<long>();
    cert.z = j.at("z").get<double>();
    cert.z_t = j.at("z_t").get<double>();
    cert.z_fail = j.at("z_fail").get<double>();
    cert.gamma = j.at("gamma").get<double>();
    cert.accepted = j.at("verdict").get<std::string>() == "accept";
    return cert;
}

Certificate make_protocol1_certificate(const Protocol1Result& result, const BenchmarkConfig& config,
                                       std::size_t width, std::size_t depth) {
    Certificate cert;
    cert.mode = BenchMode::Protocol1;
    cert.width = width;
    cert.depth = depth;
    cert.config = config;
    cert.rounds = result.rounds;
    cert.trap_rounds = result.rounds;
    cert.failed = result.failed;
    cert.activated = result.failed;
    cert.z_fail = result.z_fail;
    cert.accepted = result.accepted;
    return cert;
}

Certificate make_generic_certificate(const BenchmarkResult& result, const BenchmarkConfig& config,
                                     std::size_t width, std::size_t depth) {
    Certificate cert;
    cert.mode = BenchMode::Generic;
    cert.width = width;
    cert.depth = depth;
    cert.config = config;
    cert.rounds = config.m * config.n;
    cert.trap_rounds = result.trap_rounds;
    cert.activated = result.activated_count;
    cert.accepted_repetitions = result.accepted_count;
    cert.z = result.z;
    cert.gamma = result.gamma;
    cert.accepted = result.z > 0.0;
    return cert;
}

Certificate make_optimized_certificate(const BenchmarkResult& result, const BenchmarkConfig& config,
                                       std::size_t width, std::size_t depth) {
    Certificate cert;
    cert.mode = BenchMode::Optimized;
    cert.width = width;
    cert.depth = depth;
    cert.config = config;
    cert.rounds = config.m * config.n;
    cert.trap_rounds = result.trap_rounds;
    cert.activated = result.activated_count;
    cert.z = result.z;
    cert.z_t = result.z_t;
    cert.gamma = result.gamma;
    cert.accepted = result.z > 0.0;
    return cert;
}

Certificate score_from_records(BenchMode mode, const BenchmarkConfig& config,
                               const std::vector<RoundRecord>& records, std::size_t width,
                               std::size_t depth) {
    config.validate();
    if (mode == BenchMode::Protocol1) {
        if (static_cast<long>(records.size()) != config.n)
            throw std::runtime_error("score_from_records: transcript does not cover n rounds");
        Protocol1Result result;
        result.rounds = config.n;
        for (const RoundRecord& rec : records) {
            if (rec.kind != RoundKind::Trap || !rec.verdict)
                throw std::runtime_error("score_from_records: non-trap round in trap-only transcript");
            if (*rec.verdict == TrapVerdict::Fail) ++result.failed;
        }
        result.z_fail = static_cast<double>(result.failed) / static_cast<double>(result.rounds);
        result.accepted = result.z_fail < config.omega;
        return make_protocol1_certificate(result, config, width, depth);
    }

    if (mode == BenchMode::Optimized) {
        if (static_cast<long>(records.size()) != config.m * config.n)
            throw std::runtime_error("score_from_records: transcript does not cover m*n rounds");
        BenchmarkResult result;
        result.exponent_mode = config.exponent_mode;
        for (const RoundRecord& rec : records) {
            if (rec.kind != RoundKind::Trap || !rec.verdict)
                throw std::runtime_error("score_from_records: non-trap round in trap-only transcript");
            ++result.trap_rounds;
            if (*rec.verdict == TrapVerdict::Fail) ++result.activated_count;
        }
        result.z_t = static_cast<double>(result.activated_count) /
                         static_cast<double>(config.m * config.n) +
                     config.beta_t;
        result.z = (result.z_t < config.c_t)
                       ? success_lower_bound(result.z_t, config.c_t, config.n, config.exponent_mode)
                       : 0.0;
        result.gamma = gamma_confidence(config.m, config.n, config.beta_t);
        return make_optimized_certificate(result, config, width, depth);
    }

    // Generic: re-derive each repetition's accept flag from its trap
    // count and its computation-round plurality vote.
    if (static_cast<long>(records.size()) != config.m * config.n)
        throw std::runtime_error("score_from_records: transcript does not cover m*n rounds");
    BenchmarkResult result;
    result.exponent_mode = config.exponent_mode;
    for (long rep = 0; rep < config.m; ++rep) {
        long activated = 0;
        std::map<std::vector<int>, long> votes;
        for (const RoundRecord& rec : records) {
            if (rec.repetition != static_cast<std::uint64_t>(rep)) continue;
            if (rec.kind == RoundKind::Trap) {
                if (!rec.verdict) throw std::runtime_error("score_from_records: trap round without verdict");
                ++result.trap_rounds;
                if (*rec.verdict == TrapVerdict::Fail) ++activated;
            } else if (!rec.transcript.aborted) {
                ++votes[rec.transcript.result_bits];
            }
        }
        result.activated_count += activated;
        long best = 0;
        bool tie = true;
        for (const auto& [bits, count] : votes) {
            if (count > best) {
                best = count;
                tie = false;
            } else if (count == best) {
                tie = true;
            }
        }
        const bool traps_ok = static_cast<double>(activated) < config.c_t * static_cast<double>(config.n);
        if (traps_ok && !tie && best > 0) ++result.accepted_count;
    }
    result.z = score_generic(result.accepted_count, config.m, config.beta);
    result.gamma = gamma_generic(config.m, config.beta);
    return make_generic_certificate(result, config, width, depth);
}

}  // namespace clusterbench
