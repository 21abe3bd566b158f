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
#include <vector>

#include <json.hpp>

#include "clusterbench/characterize.hpp"

namespace clusterbench {

/// Device selection from a run configuration.
struct DeviceConfig {
    std::string kind = "honest";  // honest | flip_all | constant_zero | random_outcomes | targeted_pauli
    NoiseModel noise;
    std::string error;  // Pauli string for targeted_pauli
    double probability = 1.0;
};

/// Full description of one CLI run. Schema-validated on load; unknown
/// keys are rejected so a typo cannot silently change a benchmark.
struct RunConfig {
    BenchMode mode = BenchMode::Protocol1;
    std::size_t width = 2;
    std::size_t depth = 2;
    BenchmarkConfig bench;
    DeviceConfig device;
    std::vector<std::uint8_t> pattern_angles;  // generic mode; empty = all zeros
    std::vector<std::size_t> sweep_widths;
    std::vector<std::size_t> sweep_depths;
    SweepMode sweep_mode = SweepMode::Protocol1;
    std::string device_label = "device";
};

RunConfig runconfig_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json runconfig_to_json(const RunConfig& config);
RunConfig load_runconfig(const std::string& path);

DeviceFactory device_factory_from_config(const DeviceConfig& config);

/// Grid pattern for the configured dimensions and angle list.
MeasurementPattern pattern_from_config(const RunConfig& config);

}  // namespace clusterbench
