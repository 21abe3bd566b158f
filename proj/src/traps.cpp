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

#include "clusterbench/traps.hpp"

#include <algorithm>
#include <stdexcept>

#include "clusterbench/statevector.hpp"

namespace clusterbench {

TrapComputation make_trap(const Graph& graph, std::vector<std::size_t> subset, Rng& rng) {
    if (subset.empty()) throw std::invalid_argument("make_trap: empty subset is undetectable");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

    TrapComputation trap;
    trap.graph = graph;
    trap.subset = std::move(subset);
    trap.observable = graph_stabilizer(graph, trap.subset);
    trap.plan.assign(graph.n_vertices, TrapRole::Filler);
    trap.dummy_bits.assign(graph.n_vertices, 0);
    trap.filler_angles.assign(graph.n_vertices, 0);
    for (std::size_t v = 0; v < graph.n_vertices; ++v) {
        const bool x = trap.observable.x_bit(v);
        const bool z = trap.observable.z_bit(v);
        if (x && z) {
            trap.plan[v] = TrapRole::MeasureY;
        } else if (x) {
            trap.plan[v] = TrapRole::MeasureX;
        } else if (z) {
            trap.plan[v] = TrapRole::Dummy;
            trap.dummy_bits[v] = draw_bit(rng);
        } else {
            trap.filler_angles[v] = static_cast<std::uint8_t>(draw_below(rng, 8));
        }
    }
    trap.expected_parity = expected_parity(trap);
    return trap;
}

TrapComputation sample_trap(const Graph& graph, const TrapDistribution& dist, Rng& rng) {
    if (graph.n_vertices > Statevector::kMaxQubits)
        throw std::length_error("sample_trap: graph exceeds qubit limit");
    if (dist.fixed_subsets) {
        if (dist.fixed_subsets->empty()) throw std::invalid_argument("sample_trap: empty subset list");
        const auto& subset = (*dist.fixed_subsets)[draw_below(rng, dist.fixed_subsets->size())];
        return make_trap(graph, subset, rng);
    }
    if (graph.n_vertices > 63) throw std::length_error("sample_trap: too many vertices for subset sampling");
    const std::uint64_t mask = draw_below(rng, (1ull << graph.n_vertices) - 1) + 1;  // nonempty
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < graph.n_vertices; ++v) {
        if (mask & (1ull << v)) subset.push_back(v);
    }
    return make_trap(graph, subset, rng);
}

int expected_parity(const TrapComputation& trap) {
    const int phase = trap.observable.phase_exponent();
    if (phase % 2 != 0) throw std::logic_error("expected_parity: non-Hermitian stabilizer phase");
    // Measuring every support factor individually, the outcome product
    // equals the stabilizer eigenvalue +1. Dummy bits are the Z-support
    // outcomes, so the X/Y parity is what remains.
    int parity = phase / 2;
    for (std::size_t v = 0; v < trap.graph.n_vertices; ++v) {
        if (trap.plan[v] == TrapRole::Dummy) parity ^= (trap.dummy_bits[v] & 1);
    }
    return parity;
}

TrapVerdict check_trap(const TrapComputation& trap, const RoundTranscript& transcript) {
    if (transcript.aborted) return TrapVerdict::Fail;
    std::vector<std::optional<int>> unblinded(trap.graph.n_vertices);
    for (const VertexRecord& rec : transcript.vertices) {
        if (rec.vertex < unblinded.size()) unblinded[rec.vertex] = rec.unblinded;
    }
    int parity = 0;
    for (std::size_t v = 0; v < trap.graph.n_vertices; ++v) {
        if (trap.plan[v] != TrapRole::MeasureX && trap.plan[v] != TrapRole::MeasureY) continue;
        if (!unblinded[v]) return TrapVerdict::Fail;  // missing outcome activates the trap
        parity ^= (*unblinded[v] & 1);
    }
    return parity == trap.expected_parity ? TrapVerdict::Pass : TrapVerdict::Fail;
}

BlindJob trap_to_job(const TrapComputation& trap, const Flow& flow) {
    BlindJob job;
    job.graph = trap.graph;
    job.flow = flow;
    job.roles.resize(trap.graph.n_vertices);
    for (std::size_t v = 0; v < trap.graph.n_vertices; ++v) {
        switch (trap.plan[v]) {
            case TrapRole::MeasureX:
                job.roles[v] = BlindVertex{BlindVertex::Role::Measure, 0, 0};
                break;
            case TrapRole::MeasureY:
                job.roles[v] = BlindVertex{BlindVertex::Role::Measure, 2, 0};
                break;
            case TrapRole::Dummy:
                job.roles[v] = BlindVertex{BlindVertex::Role::Dummy, 0, trap.dummy_bits[v]};
                break;
            case TrapRole::Filler:
                job.roles[v] = BlindVertex{BlindVertex::Role::Measure, trap.filler_angles[v], 0};
                break;
        }
    }
    job.corrections = std::nullopt;  // trap measurements are non-adaptive
    job.kind = RoundKind::Trap;
    return job;
}

}  // namespace clusterbench
