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

#include "clusterbench/devices.hpp"

#include <stdexcept>

namespace clusterbench {

HonestDevice::HonestDevice(NoiseModel noise, std::uint64_t seed) : noise_(noise), rng_(derive_stream(seed, 0)) {
    if (!noise_.valid()) throw std::invalid_argument("HonestDevice: noise probabilities out of range");
}

void HonestDevice::reseed(std::uint64_t seed) { rng_ = derive_stream(seed, 0); }

void HonestDevice::begin_round(const Graph& graph, const Flow& flow) {
    (void)flow;  // honest devices measure whatever order the client requests
    if (phase_ != Phase::Idle) throw ProtocolViolation("begin_round inside an open round");
    if (graph.n_vertices > Statevector::kMaxQubits)
        throw std::length_error("HonestDevice: graph exceeds qubit limit");
    graph_ = graph;
    state_ = Statevector();
    preps_.assign(graph.n_vertices, std::nullopt);
    measured_.assign(graph.n_vertices, false);
    phase_ = Phase::Preparing;
}

void HonestDevice::accept_qubit(std::size_t vertex, Preparation prep) {
    if (phase_ != Phase::Preparing) throw ProtocolViolation("accept_qubit outside preparation phase");
    if (vertex >= preps_.size()) throw ProtocolViolation("accept_qubit: vertex out of range");
    if (preps_[vertex]) throw ProtocolViolation("accept_qubit: vertex prepared twice");
    preps_[vertex] = prep;
}

void HonestDevice::entangle_all() {
    if (phase_ != Phase::Preparing) throw ProtocolViolation("entangle_all outside preparation phase");
    for (std::size_t v = 0; v < preps_.size(); ++v) {
        if (!preps_[v]) throw ProtocolViolation("entangle_all before all qubits arrived");
        const Preparation p = *preps_[v];
        state_.append(p.kind == PrepKind::Dummy ? prepare_dummy(p.value & 1)
                                                : prepare_plus_theta(p.value & 7));
        apply_depolarizing(state_, static_cast<int>(v), noise_.prep_depolarizing, rng_);
    }
    for (const auto& [a, b] : graph_.edges) {
        state_.apply_cz(static_cast<int>(a), static_cast<int>(b));
        apply_correlated_depolarizing(state_, static_cast<int>(a), static_cast<int>(b),
                                      noise_.cz_depolarizing, rng_);
    }
    phase_ = Phase::Entangled;
}

int HonestDevice::measure(std::size_t vertex, int delta_index) {
    if (phase_ != Phase::Entangled) throw ProtocolViolation("measure before entangle_all");
    if (vertex >= measured_.size()) throw ProtocolViolation("measure: vertex out of range");
    if (measured_[vertex]) throw ProtocolViolation("measure: vertex measured twice");
    if (noise_.idle_dephasing > 0.0) {
        for (std::size_t q = 0; q < measured_.size(); ++q) {
            if (q != vertex && !measured_[q]) apply_dephasing(state_, static_cast<int>(q), noise_.idle_dephasing, rng_);
        }
    }
    measured_[vertex] = true;
    int bit = state_.measure_xy(static_cast<int>(vertex), delta_index, rng_);
    if (noise_.measure_flip > 0.0 && draw_unit(rng_) < noise_.measure_flip) bit ^= 1;
    return bit;
}

void HonestDevice::inject_unblinded_pauli(const PauliString& p) {
    if (phase_ != Phase::Entangled) throw ProtocolViolation("inject_unblinded_pauli outside entangled phase");
    if (p.num_qubits() != static_cast<std::size_t>(state_.num_qubits()))
        throw std::invalid_argument("inject_unblinded_pauli: size mismatch");
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        const bool x = p.x_bit(q);
        const bool z = p.z_bit(q);
        if (!x) {
            if (z) state_.apply_z(static_cast<int>(q));
            continue;
        }
        // X or Y factor. The unblinded X axis of a |+_θ⟩ qubit sits at
        // physical angle θ; on a dummy the factor just flips the bit (the
        // Z part of Y is a global phase on |r⟩). The word acts before the
        // CZ layer, so the factor drags a Z onto every neighbor.
        const Preparation prep = *preps_[q];
        if (prep.kind == PrepKind::Dummy) {
            state_.apply_x(static_cast<int>(q));
        } else {
            state_.apply_xy_pauli(static_cast<int>(q), (prep.value & 7) + (z ? 2 : 0));
        }
        for (std::size_t b : graph_.neighbors(q)) state_.apply_z(static_cast<int>(b));
    }
}

void HonestDevice::end_round() {
    if (phase_ == Phase::Idle) throw ProtocolViolation("end_round without begin_round");
    phase_ = Phase::Idle;
}

AdversarialDevice::AdversarialDevice(AdversaryStrategy strategy, std::uint64_t seed)
    : strategy_(strategy), inner_(NoiseModel{}, seed), rng_(derive_stream(seed, 1)) {}

std::unique_ptr<AdversarialDevice> AdversarialDevice::targeted(PauliString error, double probability,
                                                               std::uint64_t seed) {
    if (probability < 0.0 || probability > 1.0)
        throw std::invalid_argument("AdversarialDevice: probability out of range");
    auto dev = std::make_unique<AdversarialDevice>(AdversaryStrategy::TargetedPauli, seed);
    dev->error_ = std::move(error);
    dev->error_probability_ = probability;
    return dev;
}

void AdversarialDevice::begin_round(const Graph& graph, const Flow& flow) {
    if (strategy_ == AdversaryStrategy::TargetedPauli && error_ &&
        error_->num_qubits() != graph.n_vertices)
        throw std::invalid_argument("AdversarialDevice: error size does not match graph");
    round_qubits_ = graph.n_vertices;
    inner_.begin_round(graph, flow);
}

void AdversarialDevice::accept_qubit(std::size_t vertex, Preparation prep) {
    inner_.accept_qubit(vertex, prep);
}

void AdversarialDevice::entangle_all() {
    inner_.entangle_all();
    if (strategy_ == AdversaryStrategy::TargetedPauli && error_ &&
        draw_unit(rng_) < error_probability_) {
        inner_.inject_unblinded_pauli(*error_);
    }
}

int AdversarialDevice::measure(std::size_t vertex, int delta_index) {
    const int honest = inner_.measure(vertex, delta_index);
    switch (strategy_) {
        case AdversaryStrategy::FlipAllOutcomes: return honest ^ 1;
        case AdversaryStrategy::ConstantZero: return 0;
        case AdversaryStrategy::RandomOutcomes: return draw_bit(rng_);
        case AdversaryStrategy::TargetedPauli: return honest;
    }
    return honest;
}

void AdversarialDevice::end_round() { inner_.end_round(); }

DeviceFactory honest_device_factory(NoiseModel noise) {
    return [noise](std::uint64_t seed) { return std::make_unique<HonestDevice>(noise, seed); };
}

DeviceFactory adversarial_device_factory(AdversaryStrategy strategy) {
    return [strategy](std::uint64_t seed) { return std::make_unique<AdversarialDevice>(strategy, seed); };
}

DeviceFactory targeted_pauli_factory(PauliString error, double probability) {
    return [error, probability](std::uint64_t seed) -> std::unique_ptr<DeviceInterface> {
        return AdversarialDevice::targeted(error, probability, seed);
    };
}

}  // namespace clusterbench
