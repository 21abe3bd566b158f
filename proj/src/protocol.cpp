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

#include "clusterbench/protocol.hpp"

namespace clusterbench {

BlindJob pattern_to_job(const MeasurementPattern& pattern) {
    if (pattern.phi.size() != pattern.graph.n_vertices)
        throw std::invalid_argument("pattern_to_job: angle list size mismatch");
    BlindJob job;
    job.graph = pattern.graph;
    job.flow = pattern.flow;
    job.roles.resize(pattern.graph.n_vertices);
    for (std::size_t v = 0; v < pattern.graph.n_vertices; ++v) {
        job.roles[v].role = BlindVertex::Role::Measure;
        job.roles[v].phi = pattern.phi[v];
    }
    job.corrections = correction_sets(pattern.graph, pattern.flow);
    job.output_vertices = pattern.graph.outputs;
    job.kind = RoundKind::Computation;
    return job;
}

std::uint8_t mbqc_phi_prime(std::uint8_t phi, int s_x, int s_z) {
    const int signed_phi = (s_x & 1) ? (8 - phi % 8) % 8 : phi % 8;
    return static_cast<std::uint8_t>((signed_phi + (s_z & 1) * 4) % 8);
}

std::uint8_t ubqc_delta(std::uint8_t phi, int s_x, int s_z, std::uint8_t theta, int r) {
    return static_cast<std::uint8_t>((mbqc_phi_prime(phi, s_x, s_z) + theta + (r & 1) * 4) % 8);
}

namespace {

int parity_over(const std::vector<std::size_t>& vertices, const std::vector<int>& bits) {
    int acc = 0;
    for (std::size_t v : vertices) acc ^= bits[v];
    return acc;
}

}  // namespace

MbqcResult run_mbqc(const MeasurementPattern& pattern, DeviceInterface& device, Rng& rng) {
    (void)rng;  // the plain-MBQC client holds no secrets
    const auto cs = correction_sets(pattern.graph, pattern.flow);
    MbqcResult result;
    std::vector<int> outcome(pattern.graph.n_vertices, 0);
    try {
        device.begin_round(pattern.graph, pattern.flow);
        for (std::size_t v = 0; v < pattern.graph.n_vertices; ++v)
            device.accept_qubit(v, Preparation{PrepKind::PlusTheta, 0});
        device.entangle_all();
        for (std::size_t v : pattern.flow.order) {
            const int s_x = parity_over(cs.s_x[v], outcome);
            const int s_z = parity_over(cs.s_z[v], outcome);
            outcome[v] = device.measure(v, mbqc_phi_prime(pattern.phi[v], s_x, s_z)) & 1;
        }
        device.end_round();
    } catch (const ProtocolViolation&) {
        result.aborted = true;
        return result;
    }
    for (std::size_t v : pattern.graph.outputs) result.output_bits.push_back(outcome[v]);
    return result;
}

UbqcResult run_ubqc(const BlindJob& job, DeviceInterface& device, Rng& rng, std::uint64_t round_id) {
    const std::size_t n = job.graph.n_vertices;
    if (job.roles.size() != n) throw std::invalid_argument("run_ubqc: role list size mismatch");

    UbqcResult result;
    RoundTranscript& tr = result.transcript;
    tr.round_id = round_id;
    tr.kind = job.kind;
    tr.vertices.resize(n);

    // Client secrets are sampled before any message goes out.
    for (std::size_t v = 0; v < n; ++v) {
        VertexRecord& rec = tr.vertices[v];
        rec.vertex = v;
        if (job.roles[v].role == BlindVertex::Role::Dummy) {
            rec.prep = Preparation{PrepKind::Dummy, static_cast<std::uint8_t>(job.roles[v].dummy_bit & 1)};
        } else {
            rec.theta = static_cast<std::uint8_t>(draw_below(rng, 8));
            rec.pad = static_cast<std::uint8_t>(draw_bit(rng));
            rec.prep = Preparation{PrepKind::PlusTheta, rec.theta};
        }
    }

    std::vector<int> unblinded(n, 0);
    try {
        device.begin_round(job.graph, job.flow);
        for (std::size_t v = 0; v < n; ++v) device.accept_qubit(v, tr.vertices[v].prep);
        device.entangle_all();
        for (std::size_t v : job.flow.order) {
            VertexRecord& rec = tr.vertices[v];
            std::uint8_t delta;
            if (job.roles[v].role == BlindVertex::Role::Dummy) {
                // Dummies are measured at a fresh uniform angle so the
                // message stream looks identical for every role.
                delta = static_cast<std::uint8_t>(draw_below(rng, 8));
            } else {
                int s_x = 0, s_z = 0;
                if (job.corrections) {
                    s_x = parity_over(job.corrections->s_x[v], unblinded);
                    s_z = parity_over(job.corrections->s_z[v], unblinded);
                }
                delta = ubqc_delta(job.roles[v].phi, s_x, s_z, rec.theta, rec.pad);
            }
            rec.delta = delta;
            const int bit = device.measure(v, delta) & 1;
            rec.outcome = bit;
            if (job.roles[v].role == BlindVertex::Role::Measure) {
                rec.unblinded = bit ^ rec.pad;
                unblinded[v] = *rec.unblinded;
            }
        }
        device.end_round();
    } catch (const ProtocolViolation&) {
        tr.aborted = true;
        return result;
    }
    for (std::size_t v : job.output_vertices) {
        result.output_bits.push_back(unblinded[v]);
        tr.result_bits.push_back(unblinded[v]);
    }
    return result;
}

}  // namespace clusterbench
