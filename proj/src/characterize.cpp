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

#include "clusterbench/characterize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clusterbench {

using nlohmann::ordered_json;

std::string to_string(SweepMode mode) {
    return mode == SweepMode::Protocol1 ? "protocol1" : "optimized_cicc";
}

SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "protocol1") return SweepMode::Protocol1;
    if (s == "optimized_cicc") return SweepMode::OptimizedCicc;
    throw std::invalid_argument("unknown sweep mode: " + s);
}

namespace {

std::uint64_t entry_seed(std::uint64_t master, std::size_t width, std::size_t depth) {
    std::uint64_t s = master ^ (static_cast<std::uint64_t>(width) << 32) ^ depth;
    return splitmix64(s);
}

}  // namespace

CertificationMap characterize_device(const DeviceFactory& device_factory,
                                     const std::vector<std::size_t>& widths,
                                     const std::vector<std::size_t>& depths,
                                     const BenchmarkConfig& config, SweepMode mode,
                                     const std::string& device_label) {
    config.validate();
    CertificationMap map;
    map.device_label = device_label;
    map.mode = to_string(mode);
    const std::string hash = config_hash(config);
    for (std::size_t width : widths) {
        for (std::size_t depth : depths) {
            CertEntry entry;
            entry.width = width;
            entry.depth = depth;
            entry.seed = entry_seed(config.seed, width, depth);
            entry.config_hash = hash;
            if (width * depth > static_cast<std::size_t>(Statevector::kMaxQubits)) {
                entry.verdict = "skipped";
                map.entries.push_back(entry);
                continue;
            }
            const Graph grid = grid_graph(width, depth);
            auto device = device_factory(entry.seed);
            if (mode == SweepMode::Protocol1) {
                const Protocol1Result result = run_protocol1(grid, config.trap_dist, config.n,
                                                             config.omega, *device, entry.seed);
                entry.z_fail = result.z_fail;
                entry.failed = result.failed;
                entry.rounds = result.rounds;
                entry.verdict = result.accepted ? "accept" : "reject";
            } else {
                BenchmarkConfig entry_config = config;
                entry_config.seed = entry.seed;
                const BenchmarkResult result = run_optimized_cicc(grid, entry_config, *device);
                entry.z = result.z;
                entry.z_t = result.z_t;
                entry.gamma = result.gamma;
                entry.failed = result.activated_count;
                entry.rounds = result.trap_rounds;
                entry.verdict = (result.z > 0.0) ? "accept" : "reject";
            }
            map.entries.push_back(entry);
        }
    }
    return map;
}

QueryResult query_pattern(const CertificationMap& map, std::size_t width, std::size_t depth,
                          bool allow_transpose) {
    QueryResult result;
    std::vector<std::pair<std::size_t, std::size_t>> accepted;
    for (const CertEntry& entry : map.entries) {
        if (entry.verdict == "accept") accepted.emplace_back(entry.width, entry.depth);
    }
    for (const auto& dims : accepted) {
        if (fits_certified({width, depth}, {&dims, 1}, allow_transpose))
            result.fitting_entries.push_back(dims);
    }
    result.certified = fits_certified({width, depth}, accepted, allow_transpose);
    for (const auto& dims : accepted) {
        if (!result.largest_certified ||
            dims.first * dims.second >
                result.largest_certified->first * result.largest_certified->second)
            result.largest_certified = dims;
    }
    return result;
}

ordered_json map_to_json(const CertificationMap& map) {
    ordered_json j;
    j["device"] = map.device_label;
    j["created"] = map.created;
    j["mode"] = map.mode;
    ordered_json entries = ordered_json::array();
    for (const CertEntry& e : map.entries) {
        ordered_json je;
        je["width"] = e.width;
        je["depth"] = e.depth;
        je["verdict"] = e.verdict;
        je["z"] = e.z;
        je["z_t"] = e.z_t;
        je["z_fail"] = e.z_fail;
        je["gamma"] = e.gamma;
        je["failed"] = e.failed;
        je["rounds"] = e.rounds;
        je["seed"] = e.seed;
        je["config_hash"] = e.config_hash;
        entries.push_back(je);
    }
    j["entries"] = entries;
    return j;
}

CertificationMap map_from_json(const ordered_json& j) {
    CertificationMap map;
    map.device_label = j.at("device").get<std::string>();
    map.created = j.at("created").get<std::string>();
    map.mode = j.at("mode").get<std::string>();
    for (const auto& je : j.at("entries")) {
        CertEntry e;
        e.width = je.at("width").get<std::size_t>();
        e.depth = je.at("depth").get<std::size_t>();
        e.verdict = je.at("verdict").get<std::string>();
        e.z = je.at("z").get<double>();
        e.z_t = je.at("z_t").get<double>();
        e.z_fail = je.at("z_fail").get<double>();
        e.gamma = je.at("gamma").get<double>();
        e.failed = je.at("failed").get<long>();
        e.rounds = je.at("rounds").get<long>();
        e.seed = je.at("seed").get<std::uint64_t>();
        e.config_hash = je.at("config_hash").get<std::string>();
        map.entries.push_back(e);
    }
    return map;
}

std::string map_to_csv(const CertificationMap& map) {
    std::ostringstream out;
    out << "width,depth,z,z_t,gamma,verdict\n";
    for (const CertEntry& e : map.entries) {
        out << e.width << ',' << e.depth << ',' << ordered_json(e.z).dump() << ','
            << ordered_json(e.z_t).dump() << ',' << ordered_json(e.gamma).dump() << ',' << e.verdict
            << '\n';
    }
    return out.str();
}

std::string map_to_svg(const CertificationMap& map) {
    std::size_t max_w = 0, max_d = 0;
    for (const CertEntry& e : map.entries) {
        max_w = std::max(max_w, e.width);
        max_d = std::max(max_d, e.depth);
    }
    const int cell = 40, margin = 50;
    const int svg_w = margin + static_cast<int>(max_d) * cell + 10;
    const int svg_h = margin + static_cast<int>(max_w) * cell + 10;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_w << "\" height=\"" << svg_h
        << "\">\n";
    out << "<text x=\"5\" y=\"15\" font-size=\"12\">" << map.device_label << " (" << map.mode
        << ")</text>\n";
    for (const CertEntry& e : map.entries) {
        const int x = margin + static_cast<int>(e.depth - 1) * cell;
        const int y = margin + static_cast<int>(e.width - 1) * cell;
        std::string fill = "#bbbbbb";  // skipped
        if (e.verdict == "accept") {
            // Accepted cells shade with z; protocol1 entries carry z = 0
            // and render at the base green.
            const int level = 155 + static_cast<int>(100.0 * std::clamp(e.z, 0.0, 1.0));
            fill = "rgb(64," + std::to_string(level) + ",64)";
        } else if (e.verdict == "reject") {
            fill = "rgb(200,64,64)";
        }
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << (cell - 2) << "\" height=\""
            << (cell - 2) << "\" fill=\"" << fill << "\"/>\n";
        out << "<text x=\"" << (x + 4) << "\" y=\"" << (y + 24) << "\" font-size=\"10\">" << e.width
            << "x" << e.depth << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit_map(const CertificationMap& map, MapFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_map: cannot open " + path);
    switch (format) {
        case MapFormat::Json: out << map_to_json(map).dump(2) << '\n'; break;
        case MapFormat::Csv: out << map_to_csv(map); break;
        case MapFormat::SvgHeatmap: out << map_to_svg(map); break;
    }
    if (!out) throw std::runtime_error("emit_map: write failed for " + path);
}

}  // namespace clusterbench
