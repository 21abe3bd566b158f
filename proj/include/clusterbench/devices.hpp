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
#include <memory>
#include <optional>

#include "clusterbench/pauli.hpp"
#include "clusterbench/protocol.hpp"
#include "clusterbench/statevector.hpp"

namespace clusterbench {

/// Statevector-backed device. With all noise rates zero it realizes the
/// ideal prover: it prepares exactly the described qubits, entangles
/// along the graph edges, and measures in the requested bases.
///
/// Noise hooks: prep_depolarizing after each preparation,
/// cz_depolarizing after each CZ, idle_dephasing on every not yet
/// measured spectator qubit per measurement layer, measure_flip on each
/// reported bit.
class HonestDevice : public DeviceInterface {
  public:
    explicit HonestDevice(NoiseModel noise = {}, std::uint64_t seed = 0);

    void begin_round(const Graph& graph, const Flow& flow) override;
    void accept_qubit(std::size_t vertex, Preparation prep) override;
    void entangle_all() override;
    int measure(std::size_t vertex, int delta_index) override;
    void end_round() override;

    void reseed(std::uint64_t seed);

    /// Applies a Pauli word interpreted in the client's unblinded frame:
    /// each factor acts on the ideal qubit as if no blinding rotation had
    /// been applied, and the word conceptually hits the qubits before the
    /// entangling layer. Seam for adversarial wrappers; legal only after
    /// entangle_all. (A fixed physical Pauli would see its statistics
    /// scrambled by the blinding angles, which is exactly what the
    /// protocol's twirl is for; deviation analysis lives in this frame.)
    void inject_unblinded_pauli(const PauliString& p);

  private:
    enum class Phase { Idle, Preparing, Entangled };

    NoiseModel noise_;
    Rng rng_;
    Phase phase_ = Phase::Idle;
    Graph graph_;
    Statevector state_;
    std::vector<std::optional<Preparation>> preps_;
    std::vector<bool> measured_;
};

enum class AdversaryStrategy {
    FlipAllOutcomes,  // honest noiseless run, every reported bit flipped
    ConstantZero,     // reports 0 for every measurement
    RandomOutcomes,   // reports fresh uniform bits
    TargetedPauli,    // honest run with a fixed unblinded-frame Pauli error
};

/// Deviating device with a strategy fixed across rounds. All strategies
/// follow the message protocol; they only lie about outcomes or corrupt
/// the state.
class AdversarialDevice : public DeviceInterface {
  public:
    AdversarialDevice(AdversaryStrategy strategy, std::uint64_t seed = 0);

    /// TargetedPauli: applies `error` (unblinded frame, see
    /// HonestDevice::inject_unblinded_pauli) with the given probability
    /// each round.
    static std::unique_ptr<AdversarialDevice> targeted(PauliString error, double probability,
                                                       std::uint64_t seed = 0);

    void begin_round(const Graph& graph, const Flow& flow) override;
    void accept_qubit(std::size_t vertex, Preparation prep) override;
    void entangle_all() override;
    int measure(std::size_t vertex, int delta_index) override;
    void end_round() override;

  private:
    AdversaryStrategy strategy_;
    HonestDevice inner_;
    Rng rng_;
    std::optional<PauliString> error_;
    double error_probability_ = 1.0;
    std::size_t round_qubits_ = 0;
};

using DeviceFactory = std::function<std::unique_ptr<DeviceInterface>(std::uint64_t seed)>;

DeviceFactory honest_device_factory(NoiseModel noise = {});
DeviceFactory adversarial_device_factory(AdversaryStrategy strategy);
DeviceFactory targeted_pauli_factory(PauliString error, double probability);

}  // namespace clusterbench
