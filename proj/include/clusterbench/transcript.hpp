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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterbench/bench.hpp"

namespace clusterbench {

/// JSONL transcript: one JSON object per line, one round per line.
/// Keys are emitted in a fixed order so identical runs serialize to
/// identical bytes.

nlohmann::ordered_json round_record_to_json(const RoundRecord& record);
RoundRecord round_record_from_json(const nlohmann::ordered_json& j);

void write_transcript_line(std::ostream& out, const RoundRecord& record);

/// Reads every line of a JSONL transcript stream. Throws
/// std::runtime_error on malformed lines.
std::vector<RoundRecord> read_transcript(std::istream& in);
std::vector<RoundRecord> read_transcript_file(const std::string& path);

}  // namespace clusterbench
