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

#include "clusterbench/pauli.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace clusterbench {

PauliString::PauliString(std::size_t n) : x_(n, 0), z_(n, 0) {
    if (n == 0) throw std::invalid_argument("PauliString: need at least one qubit");
}

PauliString PauliString::from_str(std::string_view s) {
    int phase = 0;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        phase = (s.front() == '-') ? 2 : 0;
        s.remove_prefix(1);
    }
    if (!s.empty() && s.front() == 'i') {
        phase = (phase + 1) % 4;
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("PauliString: empty operator string");
    PauliString p(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) p.set_op(q, s[q]);
    p.phase_ = phase;
    return p;
}

void PauliString::set_op(std::size_t q, char pauli) {
    switch (pauli) {
        case 'I': x_[q] = 0; z_[q] = 0; break;
        case 'X': x_[q] = 1; z_[q] = 0; break;
        case 'Z': x_[q] = 0; z_[q] = 1; break;
        case 'Y': x_[q] = 1; z_[q] = 1; break;
        default: throw std::invalid_argument("PauliString: bad Pauli character");
    }
}

char PauliString::op_at(std::size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[x_[q] | (z_[q] << 1)];
}

bool PauliString::is_identity() const {
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        if (x_[q] || z_[q]) return false;
    }
    return true;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t q = 0; q < num_qubits(); ++q) w += (x_[q] | z_[q]);
    return w;
}

namespace {
int y_count(const PauliString& p) {
    int c = 0;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) c += (p.x_bit(q) && p.z_bit(q));
    return c;
}
}  // namespace

PauliString PauliString::operator*(const PauliString& rhs) const {
    if (num_qubits() != rhs.num_qubits()) throw std::invalid_argument("PauliString: size mismatch");
    // Work in the X-Z ordered form i^t ∏ X^x Z^z, where t = phase + #Y
    // (each Y = iXZ). Commuting rhs's X past lhs's Z costs (-1) per
    // overlapping position.
    const int t1 = (phase_ + y_count(*this)) % 4;
    const int t2 = (rhs.phase_ + y_count(rhs)) % 4;
    int swaps = 0;
    PauliString out(num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        swaps += (z_[q] & rhs.x_[q]);
        out.x_[q] = x_[q] ^ rhs.x_[q];
        out.z_[q] = z_[q] ^ rhs.z_[q];
    }
    const int t = (t1 + t2 + 2 * (swaps % 2)) % 4;
    out.phase_ = ((t - y_count(out)) % 4 + 4) % 4;
    return out;
}

std::string PauliString::str() const {
    static constexpr const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    for (std::size_t q = 0; q < num_qubits(); ++q) s.push_back(op_at(q));
    return s;
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("commutes: size mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < p.num_qubits(); ++i) {
        acc ^= (p.x_bit(i) & q.z_bit(i)) ^ (p.z_bit(i) & q.x_bit(i));
    }
    return acc == 0;
}

PauliString graph_stabilizer(const Graph& graph, const std::vector<std::size_t>& subset) {
    if (subset.empty()) throw std::invalid_argument("graph_stabilizer: empty subset");
    PauliString acc(graph.n_vertices);
    for (std::size_t a : subset) {
        if (a >= graph.n_vertices) throw std::invalid_argument("graph_stabilizer: vertex out of range");
        // K_a acts on disjoint qubits per factor, so the generator itself
        // carries no phase.
        PauliString gen(graph.n_vertices);
        gen.set_op(a, 'X');
        for (std::size_t b : graph.neighbors(a)) gen.set_op(b, 'Z');
        acc = acc * gen;
    }
    return acc;
}

Fraction make_fraction(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    const long long g = std::gcd(num, den);
    return Fraction{g ? num / g : 0, g ? den / g : 1};
}

Fraction detection_fraction(const Graph& graph, const PauliString& error) {
    const std::size_t n = graph.n_vertices;
    if (n > 12) throw std::invalid_argument("detection_fraction: graph too large for enumeration");
    if (error.num_qubits() != n) throw std::invalid_argument("detection_fraction: size mismatch");
    // Enumerate all 2^n subset products via Gray code so each step is a
    // single generator multiply.
    std::vector<PauliString> generators;
    for (std::size_t a = 0; a < n; ++a) generators.push_back(graph_stabilizer(graph, {a}));
    PauliString element(n);  // identity
    long long anti = 0;
    const std::uint64_t total = 1ull << n;
    std::uint64_t prev_gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t changed = gray ^ prev_gray;
        prev_gray = gray;
        const int bit = std::countr_zero(changed);
        element = element * generators[static_cast<std::size_t>(bit)];
        if (!commutes(element, error)) ++anti;
    }
    return make_fraction(anti, static_cast<long long>(total));
}

}  // namespace clusterbench
