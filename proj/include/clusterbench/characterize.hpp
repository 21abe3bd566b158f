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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterbench/devices.hpp"
#include "clusterbench/report.hpp"

namespace clusterbench {

enum class SweepMode : std::uint8_t { Protocol1 = 0, OptimizedCicc = 1 };

std::string to_string(SweepMode mode);
SweepMode sweep_mode_from_string(const std::string& s);

/// One grid size in a characterization sweep.
struct CertEntry {
    std::size_t width = 0;
    std::size_t depth = 0;
    std::string verdict;  // "accept", "reject", "skipped"
    double z = 0.0;
    double z_t = 0.0;
    double z_fail = 0.0;
    double gamma = 1.0;
    long failed = 0;
    long rounds = 0;
    std::uint64_t seed = 0;
    std::string config_hash;
};

struct CertificationMap {
    std::string device_label;
    std::string created;  // optional timestamp; empty keeps output seed-deterministic
    std::string mode;
    std::vector<CertEntry> entries;
};

/// Row-major sweep over widths x depths; one entry per grid, each with
/// an independent stream derived from config.seed. Grids over the qubit
/// limit are marked skipped, never dropped.
CertificationMap characterize_device(const DeviceFactory& device_factory,
                                     const std::vector<std::size_t>& widths,
                                     const std::vector<std::size_t>& depths,
                                     const BenchmarkConfig& config, SweepMode mode,
                                     const std::string& device_label = "device");

struct QueryResult {
    bool certified = false;
    std::vector<std::pair<std::size_t, std::size_t>> fitting_entries;
    std::optional<std::pair<std::size_t, std::size_t>> largest_certified;
};

/// True iff the pattern dimensions fit into some accepted entry
/// (delegates to fits_certified; transpose allowed).
QueryResult query_pattern(const CertificationMap& map, std::size_t width, std::size_t depth,
                          bool allow_transpose = true);

enum class MapFormat : std::uint8_t { Json = 0, Csv = 1, SvgHeatmap = 2 };

nlohmann::ordered_json map_to_json(const CertificationMap& map);
CertificationMap map_from_json(const nlohmann::ordered_json& j);
std::string map_to_csv(const CertificationMap& map);
std::string map_to_svg(const CertificationMap& map);

/// Writes the map in the given format. Output bytes depend only on the
/// map contents. I/O failures surface as std::runtime_error.
void emit_map(const CertificationMap& map, MapFormat format, const std::string& path);

}  // namespace clusterbench
