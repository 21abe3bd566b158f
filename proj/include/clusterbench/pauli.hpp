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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clusterbench/graph.hpp"

namespace clusterbench {

/// n-qubit Pauli operator in binary symplectic form with exact phase.
/// The operator is phase() * P_0 ⊗ ... ⊗ P_{n-1} where P_q is the
/// Hermitian Pauli decoded from (x_bit, z_bit): (0,0)=I, (1,0)=X,
/// (0,1)=Z, (1,1)=Y. The phase is a power of i, stored as the exponent
/// mod 4, so every value is exact and trap parity predictions never
/// touch floating point.
class PauliString {
  public:
    explicit PauliString(std::size_t n);

    /// Parses strings like "+XZI", "-iYY", "XZ" (implicit +).
    static PauliString from_str(std::string_view s);

    std::size_t num_qubits() const { return x_.size(); }
    bool x_bit(std::size_t q) const { return x_[q] != 0; }
    bool z_bit(std::size_t q) const { return z_[q] != 0; }
    /// Phase as exponent of i mod 4: 0=+1, 1=+i, 2=-1, 3=-i.
    int phase_exponent() const { return phase_; }

    void set_op(std::size_t q, char pauli);  // 'I','X','Y','Z'
    char op_at(std::size_t q) const;
    void set_phase_exponent(int e) { phase_ = ((e % 4) + 4) % 4; }

    bool is_identity() const;  // identity word, any phase
    std::size_t weight() const;

    PauliString operator*(const PauliString& rhs) const;
    bool operator==(const PauliString& rhs) const = default;

    std::string str() const;

  private:
    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
    int phase_ = 0;
};

/// Symplectic commutation test: true iff sum of p.x*q.z + p.z*q.x is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Product of graph-state stabilizer generators K_a = X_a ∏_{b∈N(a)} Z_b
/// over a ∈ subset, with exact phase. Rejects the empty subset (the
/// identity is not a usable trap observable).
PauliString graph_stabilizer(const Graph& graph, const std::vector<std::size_t>& subset);

/// Exact fraction num/den in lowest terms.
struct Fraction {
    long long num = 0;
    long long den = 1;
    bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(long long num, long long den);

/// Fraction of the 2^|V| stabilizer-group elements of |G⟩ that
/// anticommute with `error`. Exactly 0 for stabilizer elements
/// (including identity) and exactly 1/2 otherwise. Graphs are limited
/// to 12 vertices since the full group is enumerated.
Fraction detection_fraction(const Graph& graph, const PauliString& error);

}  // namespace clusterbench
