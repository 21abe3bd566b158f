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

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "clusterbench/protocol.hpp"

namespace clusterbench {

// Frame layout: u32 length (little-endian, counts tag + body), u8 tag,
// body. All multi-byte integers little-endian.

namespace msg {

constexpr std::uint8_t kBeginRound = 0x01;
constexpr std::uint8_t kPreparation = 0x02;
constexpr std::uint8_t kEntangle = 0x03;
constexpr std::uint8_t kMeasure = 0x04;
constexpr std::uint8_t kOutcome = 0x05;
constexpr std::uint8_t kEndRound = 0x06;

struct BeginRound {
    std::uint64_t graph_hash = 0;
    std::uint32_t n = 0;
};
struct Prepare {
    std::uint32_t vertex = 0;
    std::uint8_t kind = 0;  // 0 = plus_theta, 1 = dummy
    std::uint8_t value = 0;
};
struct Entangle {};
struct Measure {
    std::uint32_t vertex = 0;
    std::uint8_t delta = 0;
};
struct Outcome {
    std::uint32_t vertex = 0;
    std::uint8_t bit = 0;
};
struct EndRound {};

}  // namespace msg

using WireMessage = std::variant<msg::BeginRound, msg::Prepare, msg::Entangle, msg::Measure,
                                 msg::Outcome, msg::EndRound>;

void encode_message(const WireMessage& message, std::vector<std::uint8_t>& out);

/// Decodes the frame starting at `offset`, advancing it. Throws
/// std::runtime_error on truncated or malformed frames.
WireMessage decode_message(std::span<const std::uint8_t> buffer, std::size_t& offset);

/// Structural FNV-1a hash of vertex count, edges and input/output sets.
std::uint64_t graph_hash(const Graph& graph);

/// Request/response byte channel: one encoded frame in, zero or one
/// encoded frame back.
using ByteChannel = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>;

/// Client end of the framed transport: a DeviceInterface whose calls are
/// serialized over a ByteChannel.
class FramedDeviceClient : public DeviceInterface {
  public:
    explicit FramedDeviceClient(ByteChannel channel);

    void begin_round(const Graph& graph, const Flow& flow) override;
    void accept_qubit(std::size_t vertex, Preparation prep) override;
    void entangle_all() override;
    int measure(std::size_t vertex, int delta_index) override;
    void end_round() override;

  private:
    std::vector<std::uint8_t> send(const WireMessage& message);

    ByteChannel channel_;
};

/// Server end: decodes frames and drives an inner device. Graph and flow
/// are agreed out of band; BeginRound only verifies the hash.
class FramedDeviceServer {
  public:
    FramedDeviceServer(DeviceInterface& inner, Graph graph, Flow flow);

    /// Handles one framed request, returning the encoded response
    /// (empty for one-way commands).
    std::vector<std::uint8_t> handle(std::span<const std::uint8_t> frame);

    ByteChannel channel();

  private:
    DeviceInterface& inner_;
    Graph graph_;
    Flow flow_;
    std::uint64_t expected_hash_;
};

}  // namespace clusterbench
