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

#include "clusterbench/transcript.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace clusterbench {

using nlohmann::ordered_json;

namespace {

ordered_json vertex_to_json(const VertexRecord& rec) {
    ordered_json j;
    j["v"] = rec.vertex;
    j["prep"] = (rec.prep.kind == PrepKind::Dummy) ? "dummy" : "plus_theta";
    j["value"] = rec.prep.value;
    j["theta"] = rec.theta;
    j["pad"] = rec.pad;
    if (rec.delta) j["delta"] = *rec.delta;
    if (rec.outcome) j["outcome"] = *rec.outcome;
    if (rec.unblinded) j["unblinded"] = *rec.unblinded;
    return j;
}

VertexRecord vertex_from_json(const ordered_json& j) {
    VertexRecord rec;
    rec.vertex = j.at("v").get<std::size_t>();
    const std::string prep = j.at("prep").get<std::string>();
    if (prep != "dummy" && prep != "plus_theta") throw std::runtime_error("transcript: bad prep kind");
    rec.prep.kind = (prep == "dummy") ? PrepKind::Dummy : PrepKind::PlusTheta;
    rec.prep.value = j.at("value").get<std::uint8_t>();
    rec.theta = j.at("theta").get<std::uint8_t>();
    rec.pad = j.at("pad").get<std::uint8_t>();
    if (j.contains("delta")) rec.delta = j.at("delta").get<std::uint8_t>();
    if (j.contains("outcome")) rec.outcome = j.at("outcome").get<int>();
    if (j.contains("unblinded")) rec.unblinded = j.at("unblinded").get<int>();
    return rec;
}

}  // namespace

ordered_json round_record_to_json(const RoundRecord& record) {
    ordered_json j;
    j["repetition"] = record.repetition;
    j["round"] = record.round;
    j["kind"] = (record.kind == RoundKind::Trap) ? "trap" : "computation";
    if (record.verdict) j["verdict"] = (*record.verdict == TrapVerdict::Pass) ? "pass" : "fail";
    if (record.trap_subset) j["trap_subset"] = *record.trap_subset;
    if (record.trap_observable) j["trap_observable"] = *record.trap_observable;
    if (record.trap_expected_parity) j["expected_parity"] = *record.trap_expected_parity;
    j["aborted"] = record.transcript.aborted;
    j["result_bits"] = record.transcript.result_bits;
    ordered_json vertices = ordered_json::array();
    for (const VertexRecord& v : record.transcript.vertices) vertices.push_back(vertex_to_json(v));
    j["vertices"] = vertices;
    return j;
}

RoundRecord round_record_from_json(const ordered_json& j) {
    RoundRecord record;
    record.repetition = j.at("repetition").get<std::uint64_t>();
    record.round = j.at("round").get<std::uint64_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "trap" && kind != "computation") throw std::runtime_error("transcript: bad round kind");
    record.kind = (kind == "trap") ? RoundKind::Trap : RoundKind::Computation;
    if (j.contains("verdict")) {
        const std::string v = j.at("verdict").get<std::string>();
        if (v != "pass" && v != "fail") throw std::runtime_error("transcript: bad verdict");
        record.verdict = (v == "pass") ? TrapVerdict::Pass : TrapVerdict::Fail;
    }
    if (j.contains("trap_subset")) record.trap_subset = j.at("trap_subset").get<std::vector<std::size_t>>();
    if (j.contains("trap_observable")) record.trap_observable = j.at("trap_observable").get<std::string>();
    if (j.contains("expected_parity")) record.trap_expected_parity = j.at("expected_parity").get<int>();
    record.transcript.round_id = record.round;
    record.transcript.kind = record.kind;
    record.transcript.aborted = j.at("aborted").get<bool>();
    record.transcript.result_bits = j.at("result_bits").get<std::vector<int>>();
    for (const auto& v : j.at("vertices")) record.transcript.vertices.push_back(vertex_from_json(v));
    return record;
}

void write_transcript_line(std::ostream& out, const RoundRecord& record) {
    out << round_record_to_json(record).dump() << '\n';
}

std::vector<RoundRecord> read_transcript(std::istream& in) {
    std::vector<RoundRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
            records.push_back(round_record_from_json(j));
        } catch (const std::exception& e) {
            throw std::runtime_error("transcript line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

std::vector<RoundRecord> read_transcript_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open transcript: " + path);
    return read_transcript(in);
}

}  // namespace clusterbench
