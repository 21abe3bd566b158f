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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "clusterbench/runconfig.hpp"
#include "clusterbench/transcript.hpp"

namespace fs = std::filesystem;
using namespace clusterbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitProtocol = 4;

void warn_omega(const RunConfig& config) {
    if (config.bench.omega >= 0.25) {
        std::cerr << "warning: omega = " << config.bench.omega
                  << " >= 1/4; the soundness guarantee for stabilizer traps does not apply\n";
    }
}

void write_json_file(const fs::path& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

int run_bench(const RunConfig& config, const std::string& out_dir) {
    warn_omega(config);
    fs::create_directories(out_dir);
    std::ofstream transcript_out(fs::path(out_dir) / "transcript.jsonl", std::ios::binary);
    if (!transcript_out) throw std::runtime_error("cannot open transcript output");
    RoundSink sink = [&transcript_out](const RoundRecord& rec) {
        write_transcript_line(transcript_out, rec);
    };

    const Graph grid = grid_graph(config.width, config.depth);
    auto device = device_factory_from_config(config.device)(config.bench.seed);
    Certificate cert;
    switch (config.mode) {
        case BenchMode::Protocol1: {
            const Protocol1Result result =
                run_protocol1(grid, config.bench.trap_dist, config.bench.n, config.bench.omega,
                              *device, config.bench.seed, sink);
            cert = make_protocol1_certificate(result, config.bench, config.width, config.depth);
            break;
        }
        case BenchMode::Generic: {
            const MeasurementPattern pattern = pattern_from_config(config);
            const BenchmarkResult result = run_generic_cicc(pattern, config.bench, *device, sink);
            cert = make_generic_certificate(result, config.bench, config.width, config.depth);
            break;
        }
        case BenchMode::Optimized: {
            const BenchmarkResult result = run_optimized_cicc(grid, config.bench, *device, sink);
            cert = make_optimized_certificate(result, config.bench, config.width, config.depth);
            break;
        }
    }
    transcript_out.flush();
    if (!transcript_out) throw std::runtime_error("transcript write failed");
    write_json_file(fs::path(out_dir) / "certificate.json", certificate_to_json(cert));
    std::cout << "verdict: " << (cert.accepted ? "accept" : "reject") << " (z=" << cert.z
              << ", z_fail=" << cert.z_fail << ")\n";
    return kExitOk;
}

int run_characterize(const RunConfig& config, const std::string& out_dir,
                     const std::string& formats) {
    warn_omega(config);
    if (config.sweep_widths.empty() || config.sweep_depths.empty())
        throw std::invalid_argument("config: characterize needs sweep.widths and sweep.depths");
    fs::create_directories(out_dir);
    const CertificationMap map =
        characterize_device(device_factory_from_config(config.device), config.sweep_widths,
                            config.sweep_depths, config.bench, config.sweep_mode,
                            config.device_label);
    std::stringstream ss(formats);
    std::string fmt;
    while (std::getline(ss, fmt, ',')) {
        if (fmt == "json") emit_map(map, MapFormat::Json, (fs::path(out_dir) / "map.json").string());
        else if (fmt == "csv") emit_map(map, MapFormat::Csv, (fs::path(out_dir) / "map.csv").string());
        else if (fmt == "svg") emit_map(map, MapFormat::SvgHeatmap, (fs::path(out_dir) / "map.svg").string());
        else throw std::invalid_argument("unknown output format: " + fmt);
    }
    std::size_t accepted = 0;
    for (const auto& e : map.entries) accepted += (e.verdict == "accept");
    std::cout << "certified " << accepted << "/" << map.entries.size() << " grids\n";
    return kExitOk;
}

int run_analyze(const RunConfig& config, const std::string& transcript_path,
                const std::optional<std::string>& exponent_override, const std::string& out_dir) {
    BenchmarkConfig bench = config.bench;
    if (exponent_override) bench.exponent_mode = exponent_mode_from_string(*exponent_override);
    const std::vector<RoundRecord> records = read_transcript_file(transcript_path);
    const Certificate cert =
        score_from_records(config.mode, bench, records, config.width, config.depth);
    const nlohmann::ordered_json j = certificate_to_json(cert);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_json_file(fs::path(out_dir) / "certificate.json", j);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blind graph-state device benchmarking"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::string formats = "json,csv";
    std::string transcript_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> mode_override;
    std::optional<std::string> exponent_override;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON run configuration")->required();
        cmd->add_option("--seed", seed_override, "Override the master seed");
        cmd->add_option("--out", out_dir, "Output directory");
    };

    CLI::App* bench = app.add_subcommand("bench", "Run one benchmark and emit a certificate");
    add_common(bench);
    bench->add_option("--mode", mode_override, "protocol1 | generic | optimized");

    CLI::App* characterize = app.add_subcommand("characterize", "Sweep grid sizes and emit a map");
    add_common(characterize);
    characterize->add_option("--format", formats, "Comma-separated: json,csv,svg");

    CLI::App* analyze = app.add_subcommand("analyze", "Re-score a stored transcript");
    add_common(analyze);
    analyze->add_option("--transcript", transcript_path, "JSONL transcript")->required();
    analyze->add_option("--exponent-mode", exponent_override, "paper_n3 | hoeffding_n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        RunConfig config = load_runconfig(config_path);
        if (seed_override) config.bench.seed = *seed_override;
        if (mode_override) config.mode = bench_mode_from_string(*mode_override);
        if (bench->parsed()) return run_bench(config, out_dir);
        if (characterize->parsed()) return run_characterize(config, out_dir, formats);
        return run_analyze(config, transcript_path, exponent_override, out_dir);
    } catch (const ProtocolViolation& e) {
        std::cerr << "protocol violation: " << e.what() << '\n';
        return kExitProtocol;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
