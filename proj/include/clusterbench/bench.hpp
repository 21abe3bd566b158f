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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clusterbench/traps.hpp"

namespace clusterbench {

/// Concentration exponent used when converting an observed trap rate
/// into a success lower bound. PaperN3 is the literal published form
/// exp(-2n^3(c_t-z_t)^2); HoeffdingN is the conservative plain Hoeffding
/// form exp(-2n(c_t-z_t)^2) and the default.
enum class ExponentMode : std::uint8_t { PaperN3 = 0, HoeffdingN = 1 };

std::string to_string(ExponentMode mode);
ExponentMode exponent_mode_from_string(const std::string& s);

struct BenchmarkConfig {
    long n = 60;               // rounds per verification run
    long m = 1;                // verification repetitions
    double beta = 0.05;        // generic shift
    double beta_t = 0.02;      // trap-rate shift
    double c_t = 0.2;          // trap threshold
    double omega = 0.2;        // threshold for the trap-only protocol
    double trap_fraction = 0.5;
    ExponentMode exponent_mode = ExponentMode::HoeffdingN;
    std::uint64_t seed = 0;
    TrapDistribution trap_dist;

    void validate() const;  // throws std::invalid_argument
};

// --- statistics -----------------------------------------------------------

/// exp(-2 * trials * t^2).
double hoeffding_tail(long trials, double t);

/// gamma = exp(-2 m beta^2) for the generic benchmark.
double gamma_generic(long m, double beta);

/// gamma = exp(-2 m n beta_t^2) for the optimized benchmark.
double gamma_confidence(long m, long n, double beta_t);

/// Success lower bound from an observed trap-rate bound z_t < c_t.
double success_lower_bound(double z_t, double c_t, long n, ExponentMode mode);

/// max(0, accepted/m - beta).
double score_generic(long accepted, long m, double beta);

// --- runners --------------------------------------------------------------

/// Persisted per-round record: enough to re-derive every certificate
/// value offline, plus the full message transcript for audit.
struct RoundRecord {
    std::uint64_t repetition = 0;
    std::uint64_t round = 0;
    RoundKind kind = RoundKind::Computation;
    std::optional<TrapVerdict> verdict;
    RoundTranscript transcript;
    std::optional<std::vector<std::size_t>> trap_subset;
    std::optional<std::string> trap_observable;
    std::optional<int> trap_expected_parity;
};

using RoundSink = std::function<void(const RoundRecord&)>;

struct VbqcOutcome {
    std::vector<int> result;  // majority-vote output; empty on rej
    bool accepted = false;
    long activated = 0;
    long trap_rounds = 0;
    long computation_rounds = 0;
};

/// n-round verification run: each round is independently a trap (with
/// probability trap_fraction) or a blinded computation on the same
/// graph. Accept iff activated < c_t * n; the result is the plurality
/// output over computation rounds, with ties resolved to rej.
VbqcOutcome run_robust_vbqc(const MeasurementPattern& pattern, const BenchmarkConfig& config,
                            DeviceInterface& device, Rng& rng, const RoundSink& sink = nullptr,
                            std::uint64_t repetition = 0);

struct BenchmarkResult {
    long accepted_count = 0;
    long activated_count = 0;
    long trap_rounds = 0;
    double z = 0.0;
    double z_t = 0.0;
    double gamma = 1.0;
    ExponentMode exponent_mode = ExponentMode::HoeffdingN;
};

/// m verification runs; z = max(0, #acc/m - beta), gamma = exp(-2m beta^2).
BenchmarkResult run_generic_cicc(const MeasurementPattern& pattern, const BenchmarkConfig& config,
                                 DeviceInterface& device, const RoundSink& sink = nullptr);

/// All m*n rounds are traps; z_t = #activated/(mn) + beta_t. Returns the
/// success lower bound when z_t < c_t and 0 otherwise, with
/// gamma = exp(-2mn beta_t^2).
BenchmarkResult run_optimized_cicc(const Graph& graph, const BenchmarkConfig& config,
                                   DeviceInterface& device, const RoundSink& sink = nullptr);

struct Protocol1Result {
    long failed = 0;
    long rounds = 0;
    double z_fail = 0.0;
    bool accepted = false;
};

/// n blinded trap rounds; accept iff failed/n < omega.
Protocol1Result run_protocol1(const Graph& graph, const TrapDistribution& dist, long n, double omega,
                              DeviceInterface& device, std::uint64_t seed,
                              const RoundSink& sink = nullptr);

}  // namespace clusterbench
