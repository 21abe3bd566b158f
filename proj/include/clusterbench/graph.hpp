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
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clusterbench {

/// Undirected graph with designated input/output vertex sets.
/// Edges are stored normalized (a < b) and deduplicated.
struct Graph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
    // Set when the graph was produced by grid_graph; (rows, columns).
    std::optional<std::pair<std::size_t, std::size_t>> grid_dims;

    Graph() = default;
    explicit Graph(std::size_t n) : n_vertices(n) {}

    void add_edge(std::size_t a, std::size_t b);
    bool has_edge(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;
};

/// Flow map: each non-output vertex i has a successor f(i) ∈ N(i).
/// `order` is a total measurement order compatible with the partial
/// order induced by f (i before f(i) and before all of N(f(i))).
struct Flow {
    std::vector<std::optional<std::size_t>> successor;
    std::vector<std::size_t> order;
};

/// Per-vertex correction sets. s_x[i] and s_z[i] list the vertices whose
/// outcomes feed the X / Z correction of vertex i; all of them strictly
/// precede i in the flow order.
struct CorrectionSets {
    std::vector<std::vector<std::size_t>> s_x;
    std::vector<std::vector<std::size_t>> s_z;
};

/// X-Y-plane measurement pattern: graph, flow, and one angle index per
/// vertex in units of pi/4 (Z8). Output bits are read from graph.outputs.
struct MeasurementPattern {
    Graph graph;
    Flow flow;
    std::vector<std::uint8_t> phi;
};

/// width x depth cluster graph, row-major vertex numbering
/// (vertex = row * depth + column). Inputs are the first column,
/// outputs the last.
Graph grid_graph(std::size_t width, std::size_t depth);

inline std::size_t grid_index(std::size_t row, std::size_t col, std::size_t depth) {
    return row * depth + col;
}

/// Flow f(r,c) = (r,c+1) with column-major measurement order.
/// Requires a graph produced by grid_graph.
Flow standard_grid_flow(const Graph& graph);

/// Trivial flow for non-adaptive jobs: no successors, order 0..n-1.
Flow trivial_flow(const Graph& graph);

/// S_X(i) = {f^-1(i)}, S_Z(i) = {j != i : i in N(f(j))}.
CorrectionSets correction_sets(const Graph& graph, const Flow& flow);

bool valid_flow(const Graph& graph, const Flow& flow);

/// True iff some accepted entry (W,D) satisfies width<=W and depth<=D,
/// or the transposed pattern fits when allow_transpose is set.
bool fits_certified(std::pair<std::size_t, std::size_t> pattern_dims,
                    std::span<const std::pair<std::size_t, std::size_t>> accepted_dims,
                    bool allow_transpose = true);

}  // namespace clusterbench
