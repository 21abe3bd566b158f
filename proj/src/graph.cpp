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

#include "clusterbench/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace clusterbench {

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("graph: self-loop");
    if (a >= n_vertices || b >= n_vertices) throw std::invalid_argument("graph: edge vertex out of range");
    if (a > b) std::swap(a, b);
    auto e = std::make_pair(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

Graph grid_graph(std::size_t width, std::size_t depth) {
    if (width == 0 || depth == 0) throw std::invalid_argument("grid_graph: zero dimension");
    Graph g(width * depth);
    for (std::size_t r = 0; r < width; ++r) {
        for (std::size_t c = 0; c < depth; ++c) {
            if (c + 1 < depth) g.add_edge(grid_index(r, c, depth), grid_index(r, c + 1, depth));
            if (r + 1 < width) g.add_edge(grid_index(r, c, depth), grid_index(r + 1, c, depth));
        }
    }
    for (std::size_t r = 0; r < width; ++r) {
        g.inputs.push_back(grid_index(r, 0, depth));
        g.outputs.push_back(grid_index(r, depth - 1, depth));
    }
    g.grid_dims = {width, depth};
    return g;
}

Flow standard_grid_flow(const Graph& graph) {
    if (!graph.grid_dims) throw std::invalid_argument("standard_grid_flow: graph is not a grid");
    const auto [width, depth] = *graph.grid_dims;
    Flow flow;
    flow.successor.assign(graph.n_vertices, std::nullopt);
    for (std::size_t c = 0; c < depth; ++c) {
        for (std::size_t r = 0; r < width; ++r) {
            const std::size_t v = grid_index(r, c, depth);
            if (c + 1 < depth) flow.successor[v] = grid_index(r, c + 1, depth);
            flow.order.push_back(v);
        }
    }
    return flow;
}

Flow trivial_flow(const Graph& graph) {
    Flow flow;
    flow.successor.assign(graph.n_vertices, std::nullopt);
    for (std::size_t v = 0; v < graph.n_vertices; ++v) flow.order.push_back(v);
    return flow;
}

CorrectionSets correction_sets(const Graph& graph, const Flow& flow) {
    if (!valid_flow(graph, flow)) throw std::invalid_argument("correction_sets: invalid flow");
    const std::size_t n = graph.n_vertices;
    CorrectionSets cs;
    cs.s_x.assign(n, {});
    cs.s_z.assign(n, {});
    for (std::size_t j = 0; j < n; ++j) {
        if (!flow.successor[j]) continue;
        const std::size_t fj = *flow.successor[j];
        cs.s_x[fj].push_back(j);
        for (std::size_t i : graph.neighbors(fj)) {
            if (i != j) cs.s_z[i].push_back(j);
        }
    }
    return cs;
}

bool valid_flow(const Graph& graph, const Flow& flow) {
    const std::size_t n = graph.n_vertices;
    if (flow.successor.size() != n || flow.order.size() != n) return false;
    std::vector<std::size_t> position(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t v = flow.order[k];
        if (v >= n || seen[v]) return false;
        seen[v] = true;
        position[v] = k;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!flow.successor[i]) continue;
        const std::size_t fi = *flow.successor[i];
        if (fi >= n || !graph.has_edge(i, fi)) return false;
        if (position[i] >= position[fi]) return false;
        for (std::size_t nb : graph.neighbors(fi)) {
            if (nb != i && position[i] >= position[nb]) return false;
        }
    }
    return true;
}

bool fits_certified(std::pair<std::size_t, std::size_t> pattern_dims,
                    std::span<const std::pair<std::size_t, std::size_t>> accepted_dims,
                    bool allow_transpose) {
    const auto [w, d] = pattern_dims;
    for (const auto& [cw, cd] : accepted_dims) {
        if (w <= cw && d <= cd) return true;
        if (allow_transpose && d <= cw && w <= cd) return true;
    }
    return false;
}

}  // namespace clusterbench
