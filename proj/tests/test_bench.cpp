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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "clusterbench/devices.hpp"
#include "clusterbench/report.hpp"
#include "clusterbench/transcript.hpp"

using namespace clusterbench;

namespace {

MeasurementPattern zero_pattern(std::size_t w, std::size_t d) {
    MeasurementPattern p;
    p.graph = grid_graph(w, d);
    p.flow = standard_grid_flow(p.graph);
    p.phi.assign(p.graph.n_vertices, 0);
    return p;
}

BenchmarkConfig small_config() {
    BenchmarkConfig config;
    config.n = 20;
    config.m = 10;
    config.beta = 0.05;
    config.beta_t = 0.02;
    config.c_t = 0.2;
    config.seed = 7;
    return config;
}

}  // namespace

TEST_CASE("closed-form statistics") {
    CHECK(hoeffding_tail(1, 1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(gamma_generic(1000, 0.1) == doctest::Approx(2.0611536e-9).epsilon(1e-6));
    CHECK(gamma_confidence(1, 6250, 0.02) == doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
    CHECK(success_lower_bound(0.05, 0.2, 5, ExponentMode::PaperN3) ==
          doctest::Approx(1.0 - std::exp(-5.625)).epsilon(1e-12));
    CHECK(success_lower_bound(0.05, 0.2, 5, ExponentMode::HoeffdingN) ==
          doctest::Approx(1.0 - std::exp(-0.225)).epsilon(1e-12));
    CHECK(score_generic(8, 10, 0.05) == doctest::Approx(0.75));
    CHECK(score_generic(0, 10, 0.5) == 0.0);
    CHECK(score_generic(2, 10, 0.5) == 0.0);  // clamped at zero
    CHECK_THROWS_AS(success_lower_bound(0.3, 0.2, 5, ExponentMode::HoeffdingN),
                    std::invalid_argument);
    CHECK_THROWS_AS(hoeffding_tail(10, -0.1), std::invalid_argument);
}

TEST_CASE("success bound is monotone in the gap and in n") {
    double prev = 0.0;
    for (double z_t = 0.19; z_t > 0.01; z_t -= 0.01) {
        const double z = success_lower_bound(z_t, 0.2, 50, ExponentMode::HoeffdingN);
        CHECK(z > prev);
        prev = z;
    }
    CHECK(success_lower_bound(0.1, 0.2, 100, ExponentMode::HoeffdingN) >
          success_lower_bound(0.1, 0.2, 50, ExponentMode::HoeffdingN));
    CHECK(success_lower_bound(0.1, 0.2, 10, ExponentMode::PaperN3) >
          success_lower_bound(0.1, 0.2, 10, ExponentMode::HoeffdingN));
}

TEST_CASE("config validation") {
    BenchmarkConfig config = small_config();
    CHECK_NOTHROW(config.validate());
    config.n = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = small_config();
    config.beta = 1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = small_config();
    config.trap_fraction = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("generic benchmark on an honest device reaches z = 1 - beta") {
    const MeasurementPattern pattern = zero_pattern(1, 3);
    BenchmarkConfig config = small_config();
    HonestDevice device({}, 11);
    const BenchmarkResult result = run_generic_cicc(pattern, config, device);
    CHECK(result.accepted_count == config.m);
    CHECK(result.activated_count == 0);
    CHECK(result.z == 1.0 - config.beta);  // exact: 1.0 - 0.05 is representable arithmetic
    CHECK(result.gamma == doctest::Approx(gamma_generic(config.m, config.beta)));
}

TEST_CASE("generic benchmark scores a constant-zero device near zero") {
    // A lying device still slips through a short verification run now and
    // then; z certifies its acceptance rate, which must come out small
    // once n is large enough for the traps to bite.
    const MeasurementPattern pattern = zero_pattern(1, 3);
    BenchmarkConfig config = small_config();
    config.n = 100;
    AdversarialDevice device(AdversaryStrategy::ConstantZero, 13);
    const BenchmarkResult result = run_generic_cicc(pattern, config, device);
    CHECK(result.z <= 0.25);
    CHECK(result.activated_count > result.trap_rounds / 3);
}

TEST_CASE("score_generic concentrates: Pr[p <= z] bounded by gamma") {
    // Synthetic acceptance sampling at p = 0.8: the certified score must
    // not exceed the true rate except with probability gamma.
    const long m = 50;
    const double beta = 0.1, p = 0.8;
    const double gamma = gamma_generic(m, beta);
    Rng rng(17);
    int violations = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        long accepted = 0;
        for (long i = 0; i < m; ++i) accepted += (draw_unit(rng) < p);
        violations += (p <= score_generic(accepted, m, beta));
    }
    CHECK(violations / double(trials) <= gamma + 3 * std::sqrt(gamma / trials) + 1e-4);
}

TEST_CASE("optimized benchmark on an honest device matches the closed form") {
    const Graph grid = grid_graph(2, 2);
    BenchmarkConfig config = small_config();
    config.m = 2;
    config.n = 30;
    for (ExponentMode mode : {ExponentMode::HoeffdingN, ExponentMode::PaperN3}) {
        config.exponent_mode = mode;
        HonestDevice device({}, 19);
        const BenchmarkResult result = run_optimized_cicc(grid, config, device);
        CHECK(result.activated_count == 0);
        CHECK(result.trap_rounds == config.m * config.n);
        CHECK(result.z_t == doctest::Approx(config.beta_t));
        CHECK(result.z ==
              doctest::Approx(success_lower_bound(config.beta_t, config.c_t, config.n, mode)));
        CHECK(result.gamma == doctest::Approx(gamma_confidence(config.m, config.n, config.beta_t)));
    }
}

TEST_CASE("optimized benchmark yields z = 0 once the trap rate crosses c_t") {
    const Graph grid = grid_graph(2, 2);
    BenchmarkConfig config = small_config();
    config.n = 40;
    config.m = 1;
    AdversarialDevice device(AdversaryStrategy::ConstantZero, 23);
    const BenchmarkResult result = run_optimized_cicc(grid, config, device);
    CHECK(result.activated_count > long(config.c_t * double(config.n)));
    CHECK(result.z == 0.0);
}

TEST_CASE("protocol-1 verdicts") {
    const Graph grid = grid_graph(3, 3);
    SUBCASE("honest noiseless: zero failures") {
        HonestDevice device({}, 29);
        const Protocol1Result result = run_protocol1(grid, {}, 50, 0.2, device, 29);
        CHECK(result.failed == 0);
        CHECK(result.z_fail == 0.0);
        CHECK(result.accepted);
    }
    SUBCASE("constant-zero device fails about half the rounds") {
        AdversarialDevice device(AdversaryStrategy::ConstantZero, 31);
        const Protocol1Result result = run_protocol1(grid, {}, 200, 0.2, device, 31);
        CHECK(result.z_fail > 0.35);
        CHECK_FALSE(result.accepted);
    }
    SUBCASE("parameter validation") {
        HonestDevice device({}, 1);
        CHECK_THROWS_AS(run_protocol1(grid, {}, 0, 0.2, device, 1), std::invalid_argument);
        CHECK_THROWS_AS(run_protocol1(grid, {}, 10, 1.0, device, 1), std::invalid_argument);
    }
}

TEST_CASE("robust verification rejects a lying device and keeps honest results") {
    const MeasurementPattern pattern = zero_pattern(1, 3);
    BenchmarkConfig config = small_config();
    config.n = 60;

    SUBCASE("honest device: accepted with the deterministic output") {
        HonestDevice device({}, 37);
        Rng rng(37);
        const VbqcOutcome out = run_robust_vbqc(pattern, config, device, rng);
        CHECK(out.accepted);
        CHECK(out.result == std::vector<int>{0});
        CHECK(out.activated == 0);
        CHECK(out.trap_rounds + out.computation_rounds == config.n);
    }
    SUBCASE("flip-all device: trap activation forces rejection") {
        AdversarialDevice device(AdversaryStrategy::FlipAllOutcomes, 41);
        Rng rng(41);
        const VbqcOutcome out = run_robust_vbqc(pattern, config, device, rng);
        CHECK_FALSE(out.accepted);
        CHECK(out.result.empty());
    }
}

TEST_CASE("round sinks observe every round with coherent labels") {
    const MeasurementPattern pattern = zero_pattern(2, 2);
    BenchmarkConfig config = small_config();
    config.m = 3;
    config.n = 8;
    std::vector<RoundRecord> records;
    RoundSink sink = [&records](const RoundRecord& rec) { records.push_back(rec); };

    HonestDevice device({}, 43);
    run_generic_cicc(pattern, config, device, sink);
    CHECK(long(records.size()) == config.m * config.n);
    long traps = 0;
    for (const RoundRecord& rec : records) {
        CHECK(rec.repetition < std::uint64_t(config.m));
        CHECK(rec.round < std::uint64_t(config.n));
        if (rec.kind == RoundKind::Trap) {
            ++traps;
            CHECK(rec.verdict.has_value());
            CHECK(rec.trap_subset.has_value());
            CHECK(rec.trap_observable.has_value());
            CHECK(rec.trap_expected_parity.has_value());
        } else {
            CHECK_FALSE(rec.verdict.has_value());
        }
    }
    CHECK(traps > 0);
    CHECK(traps < long(records.size()));
}

TEST_CASE("seeded benchmark runs are reproducible") {
    const Graph grid = grid_graph(2, 3);
    BenchmarkConfig config = small_config();
    config.m = 2;
    config.n = 10;
    auto run_once = [&]() {
        std::vector<std::string> lines;
        RoundSink sink = [&lines](const RoundRecord& rec) {
            lines.push_back(round_record_to_json(rec).dump());
        };
        HonestDevice device({}, 47);
        run_optimized_cicc(grid, config, device, sink);
        return lines;
    };
    CHECK(run_once() == run_once());
}

TEST_CASE("round records survive a JSON round trip") {
    const Graph grid = grid_graph(2, 2);
    BenchmarkConfig config = small_config();
    config.m = 1;
    config.n = 6;
    std::vector<RoundRecord> records;
    RoundSink sink = [&records](const RoundRecord& rec) { records.push_back(rec); };
    HonestDevice device({}, 53);
    run_generic_cicc(zero_pattern(2, 2), config, device, sink);

    std::stringstream stream;
    for (const RoundRecord& rec : records) write_transcript_line(stream, rec);
    const std::vector<RoundRecord> back = read_transcript(stream);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(round_record_to_json(back[i]) == round_record_to_json(records[i]));
    }

    std::stringstream bad("{ not json\n");
    CHECK_THROWS_AS(read_transcript(bad), std::runtime_error);
}

TEST_CASE("offline re-scoring reproduces live certificates") {
    const Graph grid = grid_graph(2, 3);
    const MeasurementPattern pattern = zero_pattern(2, 3);
    BenchmarkConfig config = small_config();
    config.m = 4;
    config.n = 12;

    auto collect = [&](auto&& runner) {
        std::vector<RoundRecord> records;
        RoundSink sink = [&records](const RoundRecord& rec) { records.push_back(rec); };
        return std::pair(runner(sink), records);
    };

    SUBCASE("protocol1") {
        std::vector<RoundRecord> records;
        RoundSink sink = [&records](const RoundRecord& rec) { records.push_back(rec); };
        HonestDevice device({}, 59);
        const Protocol1Result live = run_protocol1(grid, {}, config.n, config.omega, device, 59, sink);
        BenchmarkConfig p1 = config;
        p1.m = 1;
        const Certificate cert = make_protocol1_certificate(live, p1, 2, 3);
        const Certificate rescored = score_from_records(BenchMode::Protocol1, p1, records, 2, 3);
        CHECK(certificate_to_json(rescored) == certificate_to_json(cert));
    }
    SUBCASE("generic") {
        auto [live, records] = collect([&](const RoundSink& sink) {
            HonestDevice device({}, 61);
            return run_generic_cicc(pattern, config, device, sink);
        });
        const Certificate cert = make_generic_certificate(live, config, 2, 3);
        const Certificate rescored = score_from_records(BenchMode::Generic, config, records, 2, 3);
        CHECK(certificate_to_json(rescored) == certificate_to_json(cert));
    }
    SUBCASE("optimized, including an exponent-mode override") {
        auto [live, records] = collect([&](const RoundSink& sink) {
            HonestDevice device({}, 67);
            return run_optimized_cicc(grid, config, device, sink);
        });
        const Certificate cert = make_optimized_certificate(live, config, 2, 3);
        const Certificate rescored = score_from_records(BenchMode::Optimized, config, records, 2, 3);
        CHECK(certificate_to_json(rescored) == certificate_to_json(cert));

        BenchmarkConfig alt = config;
        alt.exponent_mode = ExponentMode::PaperN3;
        const Certificate re_alt = score_from_records(BenchMode::Optimized, alt, records, 2, 3);
        CHECK(re_alt.z ==
              doctest::Approx(success_lower_bound(re_alt.z_t, alt.c_t, alt.n, ExponentMode::PaperN3)));
        CHECK(re_alt.z > rescored.z);
    }
    SUBCASE("truncated transcripts are rejected") {
        auto [live, records] = collect([&](const RoundSink& sink) {
            HonestDevice device({}, 71);
            return run_optimized_cicc(grid, config, device, sink);
        });
        (void)live;
        records.pop_back();
        CHECK_THROWS_AS(score_from_records(BenchMode::Optimized, config, records, 2, 3),
                        std::runtime_error);
    }
}

TEST_CASE("certificate JSON round trip and config hashing") {
    BenchmarkConfig config = small_config();
    Certificate cert;
    cert.mode = BenchMode::Optimized;
    cert.width = 3;
    cert.depth = 4;
    cert.config = config;
    cert.rounds = 200;
    cert.trap_rounds = 200;
    cert.activated = 5;
    cert.z = 0.42;
    cert.z_t = 0.045;
    cert.gamma = 0.85;
    cert.accepted = true;
    const Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(certificate_to_json(back) == certificate_to_json(cert));

    BenchmarkConfig other = config;
    other.seed = config.seed + 1;
    CHECK(config_hash(config) != config_hash(other));
    CHECK(config_hash(config) == config_hash(small_config()));

    nlohmann::ordered_json j = config_to_json(config);
    j["surprise"] = 1;
    CHECK_THROWS_AS(config_from_json(j), std::invalid_argument);
}
