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

#include "clusterbench/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace clusterbench {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// e^{i k π/4} for k in 0..7, exact at the representable points.
Amplitude unit_phase(int k) {
    static const Amplitude table[8] = {
        {1.0, 0.0},        {kInvSqrt2, kInvSqrt2},   {0.0, 1.0},  {-kInvSqrt2, kInvSqrt2},
        {-1.0, 0.0},       {-kInvSqrt2, -kInvSqrt2}, {0.0, -1.0}, {kInvSqrt2, -kInvSqrt2},
    };
    return table[((k % 8) + 8) % 8];
}

}  // namespace

Eigen::Vector2cd prepare_plus_theta(int theta_index) {
    if (theta_index < 0 || theta_index > 7) throw std::invalid_argument("prepare_plus_theta: index out of range");
    Eigen::Vector2cd v;
    v << Amplitude(kInvSqrt2, 0.0), kInvSqrt2 * unit_phase(theta_index);
    return v;
}

Eigen::Vector2cd prepare_dummy(int r) {
    if (r != 0 && r != 1) throw std::invalid_argument("prepare_dummy: bit expected");
    Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
    v(r) = 1.0;
    return v;
}

void Statevector::check_qubit(int q) const {
    if (q < 0 || q >= n_) throw std::out_of_range("Statevector: qubit index out of range");
}

void Statevector::append(const Eigen::Vector2cd& qubit) {
    if (n_ >= kMaxQubits) throw std::length_error("Statevector: qubit limit exceeded");
    const Eigen::Index dim = amps_.size();
    Eigen::VectorXcd next(dim * 2);
    next.head(dim) = qubit(0) * amps_;
    next.tail(dim) = qubit(1) * amps_;
    amps_ = std::move(next);
    ++n_;
}

void Statevector::apply_cz(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw std::invalid_argument("apply_cz: identical qubits");
    const Eigen::Index mask = (Eigen::Index(1) << a) | (Eigen::Index(1) << b);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) amps_(i) = -amps_(i);
    }
}

void Statevector::apply_x(int q) {
    check_qubit(q);
    const Eigen::Index bit = Eigen::Index(1) << q;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) std::swap(amps_(i), amps_(i | bit));
    }
}

void Statevector::apply_y(int q) {
    check_qubit(q);
    const Eigen::Index bit = Eigen::Index(1) << q;
    const Amplitude im(0.0, 1.0);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) {
            const Amplitude a0 = amps_(i);
            amps_(i) = -im * amps_(i | bit);
            amps_(i | bit) = im * a0;
        }
    }
}

void Statevector::apply_z(int q) {
    check_qubit(q);
    const Eigen::Index bit = Eigen::Index(1) << q;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (i & bit) amps_(i) = -amps_(i);
    }
}

void Statevector::apply_xy_pauli(int q, int k) {
    check_qubit(q);
    // [[0, e^{-ikπ/4}], [e^{ikπ/4}, 0]]
    const Amplitude w = unit_phase(k);
    const Eigen::Index bit = Eigen::Index(1) << q;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amps_(i);
        amps_(i) = std::conj(w) * amps_(i | bit);
        amps_(i | bit) = w * a0;
    }
}

int Statevector::measure_xy(int q, int delta_index, Rng& rng) {
    check_qubit(q);
    if (delta_index < 0 || delta_index > 7) throw std::invalid_argument("measure_xy: delta index out of range");
    const Eigen::Index bit = Eigen::Index(1) << q;
    const Amplitude phase_conj = std::conj(unit_phase(delta_index));
    // ⟨+_δ| = (⟨0| + e^{-iδ}⟨1|)/√2
    double p0 = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        p0 += std::norm((amps_(i) + phase_conj * amps_(i | bit)) * kInvSqrt2);
    }
    const int outcome = (draw_unit(rng) < p0) ? 0 : 1;
    const double sign = (outcome == 0) ? 1.0 : -1.0;
    const double p = (outcome == 0) ? p0 : 1.0 - p0;
    const double scale = 1.0 / std::sqrt(p);
    const Amplitude phase = unit_phase(delta_index);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude overlap = (amps_(i) + sign * phase_conj * amps_(i | bit)) * kInvSqrt2;
        amps_(i) = overlap * kInvSqrt2 * scale;
        amps_(i | bit) = overlap * sign * phase * kInvSqrt2 * scale;
    }
    return outcome;
}

int Statevector::measure_z(int q, Rng& rng) {
    check_qubit(q);
    const Eigen::Index bit = Eigen::Index(1) << q;
    double p0 = 0.0;
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (!(i & bit)) p0 += std::norm(amps_(i));
    }
    const int outcome = (draw_unit(rng) < p0) ? 0 : 1;
    const double p = (outcome == 0) ? p0 : 1.0 - p0;
    const double scale = 1.0 / std::sqrt(p);
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        const bool keep = ((i & bit) != 0) == (outcome == 1);
        amps_(i) = keep ? amps_(i) * scale : Amplitude(0.0, 0.0);
    }
    return outcome;
}

bool NoiseModel::valid() const {
    auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    return ok(prep_depolarizing) && ok(cz_depolarizing) && ok(measure_flip) && ok(idle_dephasing);
}

bool NoiseModel::is_noiseless() const {
    return prep_depolarizing == 0.0 && cz_depolarizing == 0.0 && measure_flip == 0.0 && idle_dephasing == 0.0;
}

namespace {
void apply_single_pauli(Statevector& state, int q, int which) {
    switch (which) {
        case 0: state.apply_x(q); break;
        case 1: state.apply_y(q); break;
        case 2: state.apply_z(q); break;
        default: break;
    }
}
}  // namespace

void apply_depolarizing(Statevector& state, int q, double p, Rng& rng) {
    if (p <= 0.0) return;
    if (draw_unit(rng) >= p) return;
    apply_single_pauli(state, q, static_cast<int>(draw_below(rng, 3)));
}

void apply_correlated_depolarizing(Statevector& state, int a, int b, double p, Rng& rng) {
    if (p <= 0.0) return;
    if (draw_unit(rng) >= p) return;
    // Uniform over the 15 non-identity pairs (Pa, Pb).
    const int pick = static_cast<int>(draw_below(rng, 15)) + 1;
    const int pa = pick / 4;  // 0=I,1=X,2=Y,3=Z
    const int pb = pick % 4;
    if (pa > 0) apply_single_pauli(state, a, pa - 1);
    if (pb > 0) apply_single_pauli(state, b, pb - 1);
}

void apply_dephasing(Statevector& state, int q, double p, Rng& rng) {
    if (p <= 0.0) return;
    if (draw_unit(rng) < p) state.apply_z(q);
}

}  // namespace clusterbench
