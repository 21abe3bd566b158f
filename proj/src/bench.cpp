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

#include "clusterbench/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace clusterbench {

std::string to_string(ExponentMode mode) {
    return mode == ExponentMode::PaperN3 ? "paper_n3" : "hoeffding_n";
}

ExponentMode exponent_mode_from_string(const std::string& s) {
    if (s == "paper_n3") return ExponentMode::PaperN3;
    if (s == "hoeffding_n") return ExponentMode::HoeffdingN;
    throw std::invalid_argument("unknown exponent mode: " + s);
}

void BenchmarkConfig::validate() const {
    auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
    if (n < 1 || m < 1) throw std::invalid_argument("config: n and m must be >= 1");
    if (!open_unit(beta)) throw std::invalid_argument("config: beta outside (0,1)");
    if (!open_unit(beta_t)) throw std::invalid_argument("config: beta_t outside (0,1)");
    if (!open_unit(c_t)) throw std::invalid_argument("config: c_t outside (0,1)");
    if (!open_unit(omega)) throw std::invalid_argument("config: omega outside (0,1)");
    if (trap_fraction < 0.0 || trap_fraction > 1.0)
        throw std::invalid_argument("config: trap_fraction outside [0,1]");
}

double hoeffding_tail(long trials, double t) {
    if (t < 0.0) throw std::invalid_argument("hoeffding_tail: negative deviation");
    return std::exp(-2.0 * static_cast<double>(trials) * t * t);
}

double gamma_generic(long m, double beta) { return hoeffding_tail(m, beta); }

double gamma_confidence(long m, long n, double beta_t) { return hoeffding_tail(m * n, beta_t); }

double success_lower_bound(double z_t, double c_t, long n, ExponentMode mode) {
    if (z_t >= c_t) throw std::invalid_argument("success_lower_bound: z_t >= c_t");
    const double gap = c_t - z_t;
    const double nd = static_cast<double>(n);
    const double exponent =
        (mode == ExponentMode::PaperN3) ? 2.0 * nd * nd * nd * gap * gap : 2.0 * nd * gap * gap;
    return 1.0 - std::exp(-exponent);
}

double score_generic(long accepted, long m, double beta) {
    return std::max(0.0, static_cast<double>(accepted) / static_cast<double>(m) - beta);
}

namespace {

/// Runs one trap round and reports whether it failed.
bool run_trap_round(const Graph& graph, const Flow& flow, const TrapDistribution& dist,
                    DeviceInterface& device, Rng& rng, const RoundSink& sink,
                    std::uint64_t repetition, std::uint64_t round) {
    const TrapComputation trap = sample_trap(graph, dist, rng);
    const BlindJob job = trap_to_job(trap, flow);
    UbqcResult run = run_ubqc(job, device, rng, round);
    const TrapVerdict verdict = check_trap(trap, run.transcript);
    if (sink) {
        RoundRecord rec;
        rec.repetition = repetition;
        rec.round = round;
        rec.kind = RoundKind::Trap;
        rec.verdict = verdict;
        rec.transcript = std::move(run.transcript);
        rec.trap_subset = trap.subset;
        rec.trap_observable = trap.observable.str();
        rec.trap_expected_parity = trap.expected_parity;
        sink(rec);
    }
    return verdict == TrapVerdict::Fail;
}

}  // namespace

VbqcOutcome run_robust_vbqc(const MeasurementPattern& pattern, const BenchmarkConfig& config,
                            DeviceInterface& device, Rng& rng, const RoundSink& sink,
                            std::uint64_t repetition) {
    config.validate();
    const BlindJob computation_job = pattern_to_job(pattern);
    VbqcOutcome out;
    std::map<std::vector<int>, long> votes;
    for (long i = 0; i < config.n; ++i) {
        const bool is_trap = draw_unit(rng) < config.trap_fraction;
        if (is_trap) {
            ++out.trap_rounds;
            if (run_trap_round(pattern.graph, pattern.flow, config.trap_dist, device, rng, sink,
                               repetition, static_cast<std::uint64_t>(i)))
                ++out.activated;
        } else {
            ++out.computation_rounds;
            UbqcResult run = run_ubqc(computation_job, device, rng, static_cast<std::uint64_t>(i));
            if (!run.transcript.aborted) ++votes[run.output_bits];
            if (sink) {
                RoundRecord rec;
                rec.repetition = repetition;
                rec.round = static_cast<std::uint64_t>(i);
                rec.kind = RoundKind::Computation;
                rec.transcript = std::move(run.transcript);
                sink(rec);
            }
        }
    }
    const bool traps_ok =
        static_cast<double>(out.activated) < config.c_t * static_cast<double>(config.n);
    // Plurality vote over computation-round outputs; a tie for the top
    // count gives the device no usable answer and resolves to rej.
    std::vector<int> winner;
    long best = 0;
    bool tie = true;
    for (const auto& [bits, count] : votes) {
        if (count > best) {
            best = count;
            winner = bits;
            tie = false;
        } else if (count == best) {
            tie = true;
        }
    }
    out.accepted = traps_ok && !tie && best > 0;
    if (out.accepted) out.result = winner;
    return out;
}

BenchmarkResult run_generic_cicc(const MeasurementPattern& pattern, const BenchmarkConfig& config,
                                 DeviceInterface& device, const RoundSink& sink) {
    config.validate();
    BenchmarkResult result;
    result.exponent_mode = config.exponent_mode;
    for (long rep = 0; rep < config.m; ++rep) {
        Rng rng = derive_stream(config.seed, static_cast<std::uint64_t>(rep));
        const VbqcOutcome outcome = run_robust_vbqc(pattern, config, device, rng, sink,
                                                    static_cast<std::uint64_t>(rep));
        if (outcome.accepted) ++result.accepted_count;
        result.activated_count += outcome.activated;
        result.trap_rounds += outcome.trap_rounds;
    }
    result.z = score_generic(result.accepted_count, config.m, config.beta);
    result.gamma = gamma_generic(config.m, config.beta);
    result.z_t = 0.0;
    return result;
}

BenchmarkResult run_optimized_cicc(const Graph& graph, const BenchmarkConfig& config,
                                   DeviceInterface& device, const RoundSink& sink) {
    config.validate();
    const Flow flow = graph.grid_dims ? standard_grid_flow(graph) : trivial_flow(graph);
    BenchmarkResult result;
    result.exponent_mode = config.exponent_mode;
    for (long rep = 0; rep < config.m; ++rep) {
        Rng rng = derive_stream(config.seed, static_cast<std::uint64_t>(rep));
        for (long i = 0; i < config.n; ++i) {
            ++result.trap_rounds;
            if (run_trap_round(graph, flow, config.trap_dist, device, rng, sink,
                               static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(i)))
                ++result.activated_count;
        }
    }
    result.z_t = static_cast<double>(result.activated_count) /
                     static_cast<double>(config.m * config.n) +
                 config.beta_t;
    result.z = (result.z_t < config.c_t)
                   ? success_lower_bound(result.z_t, config.c_t, config.n, config.exponent_mode)
                   : 0.0;
    result.gamma = gamma_confidence(config.m, config.n, config.beta_t);
    return result;
}

Protocol1Result run_protocol1(const Graph& graph, const TrapDistribution& dist, long n, double omega,
                              DeviceInterface& device, std::uint64_t seed, const RoundSink& sink) {
    if (n < 1) throw std::invalid_argument("run_protocol1: n must be >= 1");
    if (omega <= 0.0 || omega >= 1.0) throw std::invalid_argument("run_protocol1: omega outside (0,1)");
    const Flow flow = graph.grid_dims ? standard_grid_flow(graph) : trivial_flow(graph);
    Protocol1Result result;
    result.rounds = n;
    for (long i = 0; i < n; ++i) {
        Rng rng = derive_stream(seed, static_cast<std::uint64_t>(i));
        if (run_trap_round(graph, flow, dist, device, rng, sink, 0, static_cast<std::uint64_t>(i)))
            ++result.failed;
    }
    result.z_fail = static_cast<double>(result.failed) / static_cast<double>(n);
    result.accepted = result.z_fail < omega;
    return result;
}

}  // namespace clusterbench
