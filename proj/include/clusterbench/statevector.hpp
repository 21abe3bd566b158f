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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "clusterbench/rng.hpp"

namespace clusterbench {

using Amplitude = std::complex<double>;

/// (|0⟩ + e^{iθ}|1⟩)/√2 with θ = theta_index·π/4, theta_index ∈ 0..7.
Eigen::Vector2cd prepare_plus_theta(int theta_index);

/// X^r |0⟩.
Eigen::Vector2cd prepare_dummy(int r);

/// Dense pure state on up to 22 qubits. Qubit q corresponds to bit q of
/// the amplitude index. Instances are single-owner; run independent
/// copies in parallel, each with its own RNG stream.
class Statevector {
  public:
    static constexpr int kMaxQubits = 22;

    /// Starts empty (zero qubits, scalar amplitude 1); qubits are added
    /// with append().
    Statevector() : amps_(Eigen::VectorXcd::Ones(1)) {}

    int num_qubits() const { return n_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }

    /// Adds one qubit in the given single-qubit state; it becomes qubit
    /// index num_qubits()-1 after the call.
    void append(const Eigen::Vector2cd& qubit);

    void apply_cz(int a, int b);
    void apply_x(int q);
    void apply_y(int q);
    void apply_z(int q);

    /// cos(kπ/4)·X + sin(kπ/4)·Y: the Pauli along angle kπ/4 in the X-Y
    /// plane (k=0 is X, k=2 is Y).
    void apply_xy_pauli(int q, int k);

    /// X-Y-plane measurement in basis |±_δ⟩, δ = delta_index·π/4.
    /// Outcome 0 corresponds to |+_δ⟩. Collapses and renormalizes.
    int measure_xy(int q, int delta_index, Rng& rng);

    /// Computational-basis measurement.
    int measure_z(int q, Rng& rng);

    double norm() const { return amps_.norm(); }

  private:
    void check_qubit(int q) const;

    int n_ = 0;
    Eigen::VectorXcd amps_;
};

/// Stochastic Pauli stand-ins for device imperfections; each rate is an
/// independent per-site event probability.
struct NoiseModel {
    double prep_depolarizing = 0.0;   // per prepared qubit
    double cz_depolarizing = 0.0;     // per CZ, correlated two-qubit Pauli
    double measure_flip = 0.0;        // classical flip per reported outcome
    double idle_dephasing = 0.0;      // Z flip per idle qubit per layer

    bool valid() const;
    bool is_noiseless() const;
};

/// With probability p, applies a uniformly random non-identity Pauli to q.
void apply_depolarizing(Statevector& state, int q, double p, Rng& rng);

/// With probability p, applies a uniformly random non-identity two-qubit
/// Pauli (15 choices) to (a, b).
void apply_correlated_depolarizing(Statevector& state, int a, int b, double p, Rng& rng);

/// With probability p, applies Z to q.
void apply_dephasing(Statevector& state, int q, double p, Rng& rng);

}  // namespace clusterbench
