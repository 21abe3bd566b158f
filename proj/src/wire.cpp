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

#include "clusterbench/wire.hpp"

#include <stdexcept>

namespace clusterbench {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[at + i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[at + i]) << (8 * i);
    return v;
}

}  // namespace

void encode_message(const WireMessage& message, std::vector<std::uint8_t>& out) {
    std::vector<std::uint8_t> body;
    std::uint8_t tag = 0;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, msg::BeginRound>) {
                tag = msg::kBeginRound;
                put_u64(body, m.graph_hash);
                put_u32(body, m.n);
            } else if constexpr (std::is_same_v<T, msg::Prepare>) {
                tag = msg::kPreparation;
                put_u32(body, m.vertex);
                body.push_back(m.kind);
                body.push_back(m.value);
            } else if constexpr (std::is_same_v<T, msg::Entangle>) {
                tag = msg::kEntangle;
            } else if constexpr (std::is_same_v<T, msg::Measure>) {
                tag = msg::kMeasure;
                put_u32(body, m.vertex);
                body.push_back(m.delta);
            } else if constexpr (std::is_same_v<T, msg::Outcome>) {
                tag = msg::kOutcome;
                put_u32(body, m.vertex);
                body.push_back(m.bit);
            } else {
                tag = msg::kEndRound;
            }
        },
        message);
    put_u32(out, static_cast<std::uint32_t>(body.size() + 1));
    out.push_back(tag);
    out.insert(out.end(), body.begin(), body.end());
}

WireMessage decode_message(std::span<const std::uint8_t> buffer, std::size_t& offset) {
    if (buffer.size() - offset < 5) throw std::runtime_error("wire: truncated frame header");
    const std::uint32_t len = get_u32(buffer, offset);
    if (len < 1 || buffer.size() - offset - 4 < len) throw std::runtime_error("wire: truncated frame");
    const std::size_t body = offset + 5;
    const std::uint8_t tag = buffer[offset + 4];
    const std::size_t body_len = len - 1;
    offset += 4 + len;
    auto need = [&](std::size_t want) {
        if (body_len != want) throw std::runtime_error("wire: bad frame length");
    };
    switch (tag) {
        case msg::kBeginRound:
            need(12);
            return msg::BeginRound{get_u64(buffer, body), get_u32(buffer, body + 8)};
        case msg::kPreparation:
            need(6);
            return msg::Prepare{get_u32(buffer, body), buffer[body + 4], buffer[body + 5]};
        case msg::kEntangle:
            need(0);
            return msg::Entangle{};
        case msg::kMeasure:
            need(5);
            return msg::Measure{get_u32(buffer, body), buffer[body + 4]};
        case msg::kOutcome:
            need(5);
            return msg::Outcome{get_u32(buffer, body), buffer[body + 4]};
        case msg::kEndRound:
            need(0);
            return msg::EndRound{};
        default:
            throw std::runtime_error("wire: unknown tag");
    }
}

std::uint64_t graph_hash(const Graph& graph) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(graph.n_vertices);
    for (const auto& [a, b] : graph.edges) {
        mix(a);
        mix(b);
    }
    mix(0x1);
    for (std::size_t v : graph.inputs) mix(v);
    mix(0x2);
    for (std::size_t v : graph.outputs) mix(v);
    return h;
}

FramedDeviceClient::FramedDeviceClient(ByteChannel channel) : channel_(std::move(channel)) {}

std::vector<std::uint8_t> FramedDeviceClient::send(const WireMessage& message) {
    std::vector<std::uint8_t> frame;
    encode_message(message, frame);
    return channel_(frame);
}

void FramedDeviceClient::begin_round(const Graph& graph, const Flow& flow) {
    (void)flow;
    send(msg::BeginRound{graph_hash(graph), static_cast<std::uint32_t>(graph.n_vertices)});
}

void FramedDeviceClient::accept_qubit(std::size_t vertex, Preparation prep) {
    send(msg::Prepare{static_cast<std::uint32_t>(vertex), static_cast<std::uint8_t>(prep.kind),
                      prep.value});
}

void FramedDeviceClient::entangle_all() { send(msg::Entangle{}); }

int FramedDeviceClient::measure(std::size_t vertex, int delta_index) {
    const auto response =
        send(msg::Measure{static_cast<std::uint32_t>(vertex), static_cast<std::uint8_t>(delta_index)});
    std::size_t offset = 0;
    const WireMessage reply = decode_message(response, offset);
    const auto* outcome = std::get_if<msg::Outcome>(&reply);
    if (!outcome || outcome->vertex != vertex) throw ProtocolViolation("wire: bad measurement reply");
    return outcome->bit & 1;
}

void FramedDeviceClient::end_round() { send(msg::EndRound{}); }

FramedDeviceServer::FramedDeviceServer(DeviceInterface& inner, Graph graph, Flow flow)
    : inner_(inner), graph_(std::move(graph)), flow_(std::move(flow)), expected_hash_(graph_hash(graph_)) {}

std::vector<std::uint8_t> FramedDeviceServer::handle(std::span<const std::uint8_t> frame) {
    std::size_t offset = 0;
    const WireMessage message = decode_message(frame, offset);
    std::vector<std::uint8_t> response;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, msg::BeginRound>) {
                if (m.graph_hash != expected_hash_ || m.n != graph_.n_vertices)
                    throw ProtocolViolation("wire: graph hash mismatch");
                inner_.begin_round(graph_, flow_);
            } else if constexpr (std::is_same_v<T, msg::Prepare>) {
                inner_.accept_qubit(m.vertex, Preparation{static_cast<PrepKind>(m.kind), m.value});
            } else if constexpr (std::is_same_v<T, msg::Entangle>) {
                inner_.entangle_all();
            } else if constexpr (std::is_same_v<T, msg::Measure>) {
                const int bit = inner_.measure(m.vertex, m.delta);
                encode_message(msg::Outcome{m.vertex, static_cast<std::uint8_t>(bit)}, response);
            } else if constexpr (std::is_same_v<T, msg::EndRound>) {
                inner_.end_round();
            }
        },
        message);
    return response;
}

ByteChannel FramedDeviceServer::channel() {
    return [this](std::span<const std::uint8_t> frame) { return handle(frame); };
}

}  // namespace clusterbench
