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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterbench/graph.hpp"
#include "clusterbench/rng.hpp"

namespace clusterbench {

enum class PrepKind : std::uint8_t { PlusTheta = 0, Dummy = 1 };

/// Classical description of the single-qubit state the client sends:
/// |+_θ⟩ with value = θ-index, or X^value|0⟩ for dummies.
struct Preparation {
    PrepKind kind = PrepKind::PlusTheta;
    std::uint8_t value = 0;
};

/// Thrown by devices on out-of-order or repeated calls; the round is
/// aborted and scored against the device, never crashing the benchmark.
class ProtocolViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One interactive round with a black-box device. The device must
/// implement the same algorithm every round: no cross-round adaptation.
/// Measurements are only legal after entangle_all, and each vertex may
/// be measured at most once.
class DeviceInterface {
  public:
    virtual ~DeviceInterface() = default;
    virtual void begin_round(const Graph& graph, const Flow& flow) = 0;
    virtual void accept_qubit(std::size_t vertex, Preparation prep) = 0;
    virtual void entangle_all() = 0;
    virtual int measure(std::size_t vertex, int delta_index) = 0;
    virtual void end_round() = 0;
};

/// Per-vertex record of a protocol round, including the client secrets
/// needed to re-derive every unblinded value offline.
struct VertexRecord {
    std::size_t vertex = 0;
    Preparation prep;
    std::uint8_t theta = 0;  // blinding angle (PlusTheta preparations)
    std::uint8_t pad = 0;    // r' outcome pad (measured non-dummy vertices)
    std::optional<std::uint8_t> delta;
    std::optional<int> outcome;    // raw bit reported by the device
    std::optional<int> unblinded;  // outcome ^ pad; absent for dummies
};

enum class RoundKind : std::uint8_t { Computation = 0, Trap = 1 };

struct RoundTranscript {
    std::uint64_t round_id = 0;
    RoundKind kind = RoundKind::Computation;
    std::vector<VertexRecord> vertices;
    std::vector<int> result_bits;
    bool aborted = false;
};

/// Role of one vertex in a blinded delegation job.
struct BlindVertex {
    enum class Role : std::uint8_t { Measure = 0, Dummy = 1 } role = Role::Measure;
    std::uint8_t phi = 0;  // target angle index (Measure)
    int dummy_bit = 0;     // r (Dummy)
};

/// Graph, measurement order, and per-vertex roles for one UBQC round.
/// Corrections are present for adaptive (computation) jobs and absent
/// for trap jobs, which are non-adaptive by construction.
struct BlindJob {
    Graph graph;
    Flow flow;
    std::vector<BlindVertex> roles;
    std::optional<CorrectionSets> corrections;
    std::vector<std::size_t> output_vertices;
    RoundKind kind = RoundKind::Computation;
};

BlindJob pattern_to_job(const MeasurementPattern& pattern);

/// (-1)^{sX}·φ + sZ·4 mod 8 — the adaptively corrected angle.
std::uint8_t mbqc_phi_prime(std::uint8_t phi, int s_x, int s_z);

/// (-1)^{sX}·φ + sZ·4 + θ + r·4 mod 8 — the blinded angle.
std::uint8_t ubqc_delta(std::uint8_t phi, int s_x, int s_z, std::uint8_t theta, int r);

struct MbqcResult {
    std::vector<int> output_bits;
    bool aborted = false;
};

/// Protocol-2 driver: plaintext angles, adaptive corrections, result =
/// outcomes of the output vertices.
MbqcResult run_mbqc(const MeasurementPattern& pattern, DeviceInterface& device, Rng& rng);

struct UbqcResult {
    std::vector<int> output_bits;  // unblinded outcomes of output vertices
    RoundTranscript transcript;
};

/// Protocol-3 driver: samples θ per qubit and a pad r' per measured
/// vertex, sends only blinded δ angles, unblinds reported outcomes.
UbqcResult run_ubqc(const BlindJob& job, DeviceInterface& device, Rng& rng, std::uint64_t round_id = 0);

}  // namespace clusterbench
