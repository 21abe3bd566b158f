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

#include "clusterbench/runconfig.hpp"

#include <fstream>
#include <stdexcept>

namespace clusterbench {

using nlohmann::ordered_json;

namespace {

void reject_unknown(const ordered_json& j, std::initializer_list<const char*> known,
                    const std::string& scope) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw std::invalid_argument("config: unknown key '" + scope + key + "'");
    }
}

NoiseModel noise_from_json(const ordered_json& j) {
    reject_unknown(j, {"prep_depolarizing", "cz_depolarizing", "measure_flip", "idle_dephasing"},
                   "device.noise.");
    NoiseModel noise;
    if (j.contains("prep_depolarizing")) noise.prep_depolarizing = j.at("prep_depolarizing").get<double>();
    if (j.contains("cz_depolarizing")) noise.cz_depolarizing = j.at("cz_depolarizing").get<double>();
    if (j.contains("measure_flip")) noise.measure_flip = j.at("measure_flip").get<double>();
    if (j.contains("idle_dephasing")) noise.idle_dephasing = j.at("idle_dephasing").get<double>();
    if (!noise.valid()) throw std::invalid_argument("config: noise probability outside [0,1]");
    return noise;
}

DeviceConfig device_from_json(const ordered_json& j) {
    reject_unknown(j, {"kind", "noise", "error", "probability"}, "device.");
    DeviceConfig device;
    if (j.contains("kind")) device.kind = j.at("kind").get<std::string>();
    if (device.kind != "honest" && device.kind != "flip_all" && device.kind != "constant_zero" &&
        device.kind != "random_outcomes" && device.kind != "targeted_pauli")
        throw std::invalid_argument("config: unknown device kind '" + device.kind + "'");
    if (j.contains("noise")) device.noise = noise_from_json(j.at("noise"));
    if (j.contains("error")) device.error = j.at("error").get<std::string>();
    if (j.contains("probability")) device.probability = j.at("probability").get<double>();
    if (device.kind == "targeted_pauli" && device.error.empty())
        throw std::invalid_argument("config: targeted_pauli device needs an error string");
    return device;
}

}  // namespace

RunConfig runconfig_from_json(const ordered_json& j) {
    reject_unknown(j,
                   {"mode", "graph", "bench", "device", "pattern_angles", "sweep", "device_label"},
                   "");
    RunConfig config;
    if (j.contains("mode")) config.mode = bench_mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("graph")) {
        const auto& g = j.at("graph");
        reject_unknown(g, {"width", "depth"}, "graph.");
        config.width = g.at("width").get<std::size_t>();
        config.depth = g.at("depth").get<std::size_t>();
        if (config.width == 0 || config.depth == 0)
            throw std::invalid_argument("config: zero graph dimension");
    }
    if (j.contains("bench")) config.bench = config_from_json(j.at("bench"));
    if (j.contains("device")) config.device = device_from_json(j.at("device"));
    if (j.contains("pattern_angles")) {
        for (const auto& a : j.at("pattern_angles")) {
            const long v = a.get<long>();
            if (v < 0 || v > 7) throw std::invalid_argument("config: pattern angle outside 0..7");
            config.pattern_angles.push_back(static_cast<std::uint8_t>(v));
        }
    }
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        reject_unknown(s, {"widths", "depths", "mode"}, "sweep.");
        config.sweep_widths = s.at("widths").get<std::vector<std::size_t>>();
        config.sweep_depths = s.at("depths").get<std::vector<std::size_t>>();
        if (s.contains("mode")) config.sweep_mode = sweep_mode_from_string(s.at("mode").get<std::string>());
    }
    if (j.contains("device_label")) config.device_label = j.at("device_label").get<std::string>();
    return config;
}

ordered_json runconfig_to_json(const RunConfig& config) {
    ordered_json j;
    j["mode"] = to_string(config.mode);
    j["graph"] = {{"width", config.width}, {"depth", config.depth}};
    j["bench"] = config_to_json(config.bench);
    ordered_json dev;
    dev["kind"] = config.device.kind;
    dev["noise"] = {{"prep_depolarizing", config.device.noise.prep_depolarizing},
                    {"cz_depolarizing", config.device.noise.cz_depolarizing},
                    {"measure_flip", config.device.noise.measure_flip},
                    {"idle_dephasing", config.device.noise.idle_dephasing}};
    if (!config.device.error.empty()) {
        dev["error"] = config.device.error;
        dev["probability"] = config.device.probability;
    }
    j["device"] = dev;
    if (!config.pattern_angles.empty()) {
        ordered_json angles = ordered_json::array();
        for (std::uint8_t a : config.pattern_angles) angles.push_back(a);
        j["pattern_angles"] = angles;
    }
    if (!config.sweep_widths.empty()) {
        j["sweep"] = {{"widths", config.sweep_widths},
                      {"depths", config.sweep_depths},
                      {"mode", to_string(config.sweep_mode)}};
    }
    j["device_label"] = config.device_label;
    return j;
}

RunConfig load_runconfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config: parse error: ") + e.what());
    }
    return runconfig_from_json(j);
}

DeviceFactory device_factory_from_config(const DeviceConfig& config) {
    if (config.kind == "honest") return honest_device_factory(config.noise);
    if (config.kind == "flip_all") return adversarial_device_factory(AdversaryStrategy::FlipAllOutcomes);
    if (config.kind == "constant_zero")
        return adversarial_device_factory(AdversaryStrategy::ConstantZero);
    if (config.kind == "random_outcomes")
        return adversarial_device_factory(AdversaryStrategy::RandomOutcomes);
    return targeted_pauli_factory(PauliString::from_str(config.error), config.probability);
}

MeasurementPattern pattern_from_config(const RunConfig& config) {
    MeasurementPattern pattern;
    pattern.graph = grid_graph(config.width, config.depth);
    pattern.flow = standard_grid_flow(pattern.graph);
    if (config.pattern_angles.empty()) {
        pattern.phi.assign(pattern.graph.n_vertices, 0);
    } else {
        if (config.pattern_angles.size() != pattern.graph.n_vertices)
            throw std::invalid_argument("config: pattern_angles length does not match grid");
        pattern.phi = config.pattern_angles;
    }
    return pattern;
}

}  // namespace clusterbench
