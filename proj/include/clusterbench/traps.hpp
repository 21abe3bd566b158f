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
#include <vector>

#include "clusterbench/pauli.hpp"
#include "clusterbench/protocol.hpp"

namespace clusterbench {

/// Per-vertex role in a compiled stabilizer trap.
enum class TrapRole : std::uint8_t {
    MeasureX = 0,  // observable has X support: measured at angle index 0
    MeasureY = 1,  // Y support: measured at angle index 2
    Dummy = 2,     // Z support: prepared X^r|0⟩
    Filler = 3,    // no support: measured at a random angle, outcome ignored
};

/// Blinded stabilizer measurement with a deterministic expected parity.
/// observable = ∏_{a∈A} K_a; dummy bits double as the Z-support
/// measurement record, so the parity the X/Y outcomes must satisfy is
/// fixed by the observable phase and the sampled dummy bits.
struct TrapComputation {
    Graph graph;
    std::vector<std::size_t> subset;  // A, sorted, nonempty
    PauliString observable;
    std::vector<TrapRole> plan;
    std::vector<int> dummy_bits;             // r, meaningful for Dummy vertices
    std::vector<std::uint8_t> filler_angles;  // meaningful for Filler vertices
    int expected_parity = 0;

    TrapComputation() : observable(1) {}
};

/// Trap sampler configuration. Default: uniform over nonempty vertex
/// subsets. A fixed subset list restricts sampling to those subsets
/// (uniformly), which the calibration tests use.
struct TrapDistribution {
    std::optional<std::vector<std::vector<std::size_t>>> fixed_subsets;
};

/// Builds the trap for a specific subset A; dummy bits and filler angles
/// are drawn from rng.
TrapComputation make_trap(const Graph& graph, std::vector<std::size_t> subset, Rng& rng);

/// Draws A from the distribution, then compiles it.
TrapComputation sample_trap(const Graph& graph, const TrapDistribution& dist, Rng& rng);

/// Parity the XOR of unblinded X/Y-support outcomes must equal on a
/// noiseless device.
int expected_parity(const TrapComputation& trap);

enum class TrapVerdict : std::uint8_t { Pass = 0, Fail = 1 };

/// Fail iff the observed parity disagrees with the expectation. Aborted
/// rounds and missing outcomes count as failures: a silent device must
/// not score better than a wrong one.
TrapVerdict check_trap(const TrapComputation& trap, const RoundTranscript& transcript);

/// Compiles a trap into a non-adaptive UBQC job over the given flow's
/// measurement order.
BlindJob trap_to_job(const TrapComputation& trap, const Flow& flow);

}  // namespace clusterbench
