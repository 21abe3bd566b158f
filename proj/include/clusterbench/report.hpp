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

#pragma once

#include <string>

#include <json.hpp>

#include "clusterbench/bench.hpp"

namespace clusterbench {

enum class BenchMode : std::uint8_t { Protocol1 = 0, Generic = 1, Optimized = 2 };

std::string to_string(BenchMode mode);
BenchMode bench_mode_from_string(const std::string& s);

nlohmann::ordered_json config_to_json(const BenchmarkConfig& config);
BenchmarkConfig config_from_json(const nlohmann::ordered_json& j);

/// FNV-1a over the canonical config JSON, hex-encoded.
std::string config_hash(const BenchmarkConfig& config);

/// The machine-readable certificate a benchmark run produces. Every
/// value is recomputable from (transcript, config) alone.
struct Certificate {
    BenchMode mode = BenchMode::Protocol1;
    std::size_t width = 0;
    std::size_t depth = 0;
    BenchmarkConfig config;
    long rounds = 0;
    long trap_rounds = 0;
    long activated = 0;
    long failed = 0;
    long accepted_repetitions = 0;
    double z = 0.0;
    double z_t = 0.0;
    double z_fail = 0.0;
    double gamma = 1.0;
    bool accepted = false;
};

nlohmann::ordered_json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::ordered_json& j);

Certificate make_protocol1_certificate(const Protocol1Result& result, const BenchmarkConfig& config,
                                       std::size_t width, std::size_t depth);
Certificate make_generic_certificate(const BenchmarkResult& result, const BenchmarkConfig& config,
                                     std::size_t width, std::size_t depth);
Certificate make_optimized_certificate(const BenchmarkResult& result, const BenchmarkConfig& config,
                                       std::size_t width, std::size_t depth);

/// Offline re-scoring: recomputes the certificate from stored rounds.
/// The classical interpretation runs without any quantum simulation, so
/// alternate exponent modes can be applied after the fact. Throws
/// std::runtime_error when the transcript does not cover the configured
/// number of rounds.
Certificate score_from_records(BenchMode mode, const BenchmarkConfig& config,
                               const std::vector<RoundRecord>& records, std::size_t width,
                               std::size_t depth);

}  // namespace clusterbench
