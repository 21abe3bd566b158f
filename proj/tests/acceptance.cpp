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

// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL]
// line; the process exits nonzero if any criterion fails.

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "clusterbench/bench.hpp"
#include "clusterbench/characterize.hpp"
#include "clusterbench/devices.hpp"
#include "clusterbench/report.hpp"
#include "clusterbench/transcript.hpp"
#include "clusterbench/traps.hpp"

using namespace clusterbench;
namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int g_failures = 0;

struct Criterion {
    int number;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(int n) : number(n) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    void finish(double time_limit_s = 0.0) {
        if (time_limit_s > 0.0 && elapsed_s() >= time_limit_s) {
            std::ostringstream ss;
            ss << "runtime " << elapsed_s() << "s exceeds " << time_limit_s << "s";
            problems.push_back(ss.str());
        }
        if (problems.empty()) {
            std::cout << "[PASS] criterion " << number << " (" << elapsed_s() << "s)\n";
        } else {
            std::cout << "[FAIL] criterion " << number << "\n";
            for (const std::string& p : problems) std::cout << "       " << p << "\n";
            ++g_failures;
        }
    }
};

// --- shared helpers -------------------------------------------------------

TrapVerdict run_trap(const TrapComputation& trap, DeviceInterface& device, Rng& rng,
                     std::uint64_t round_id = 0) {
    const BlindJob job = trap_to_job(trap, trivial_flow(trap.graph));
    return check_trap(trap, run_ubqc(job, device, rng, round_id).transcript);
}

// Deterministic zero-angle path pattern: odd depth leaves the logical
// |+> intact, so the single output bit is always 0.
MeasurementPattern zero_path_pattern(std::size_t depth) {
    MeasurementPattern p;
    p.graph = grid_graph(1, depth);
    p.flow = standard_grid_flow(p.graph);
    p.phi.assign(depth, 0);
    return p;
}

MeasurementPattern random_grid_pattern(std::size_t w, std::size_t d, Rng& rng) {
    MeasurementPattern p;
    p.graph = grid_graph(w, d);
    p.flow = standard_grid_flow(p.graph);
    p.phi.resize(p.graph.n_vertices);
    for (auto& a : p.phi) a = std::uint8_t(draw_below(rng, 8));
    return p;
}

// Exact MBQC output distribution by branch enumeration, independent of
// the Statevector class: plain complex vectors, double-precision angles.
using Dist = std::map<std::vector<int>, double>;

Eigen::VectorXcd cluster_state(const Graph& g) {
    const Eigen::Index dim = Eigen::Index(1) << g.n_vertices;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(double(dim)));
    for (const auto& [a, b] : g.edges) {
        const Eigen::Index mask = (Eigen::Index(1) << a) | (Eigen::Index(1) << b);
        for (Eigen::Index i = 0; i < dim; ++i) {
            if ((i & mask) == mask) psi(i) = -psi(i);
        }
    }
    return psi;
}

Eigen::VectorXcd project_xy(const Eigen::VectorXcd& psi, std::size_t v, double delta, int b) {
    const Eigen::Index bit = Eigen::Index(1) << v;
    const std::complex<double> phase = std::polar(1.0, delta);
    const double sign = (b == 0) ? 1.0 : -1.0;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (i & bit) continue;
        const std::complex<double> overlap =
            (psi(i) + sign * std::conj(phase) * psi(i | bit)) / std::sqrt(2.0);
        out(i) = overlap / std::sqrt(2.0);
        out(i | bit) = overlap * sign * phase / std::sqrt(2.0);
    }
    return out;
}

void enumerate_branches(const MeasurementPattern& pattern, const CorrectionSets& cs,
                        const Eigen::VectorXcd& psi, std::size_t step, std::vector<int>& outcome,
                        Dist& dist) {
    if (step == pattern.flow.order.size()) {
        std::vector<int> bits;
        for (std::size_t v : pattern.graph.outputs) bits.push_back(outcome[v]);
        dist[bits] += psi.squaredNorm();
        return;
    }
    const std::size_t v = pattern.flow.order[step];
    int s_x = 0, s_z = 0;
    for (std::size_t j : cs.s_x[v]) s_x ^= outcome[j];
    for (std::size_t j : cs.s_z[v]) s_z ^= outcome[j];
    const double delta = (s_x ? -1.0 : 1.0) * pattern.phi[v] * M_PI / 4.0 + s_z * M_PI;
    for (int b = 0; b < 2; ++b) {
        Eigen::VectorXcd branch = project_xy(psi, v, delta, b);
        if (branch.squaredNorm() < 1e-15) continue;
        outcome[v] = b;
        enumerate_branches(pattern, cs, branch, step + 1, outcome, dist);
    }
    outcome[v] = 0;
}

Dist exact_output_distribution(const MeasurementPattern& pattern) {
    Dist dist;
    std::vector<int> outcome(pattern.graph.n_vertices, 0);
    enumerate_branches(pattern, correction_sets(pattern.graph, pattern.flow),
                       cluster_state(pattern.graph), 0, outcome, dist);
    return dist;
}

double total_variation(const Dist& a, const Dist& b) {
    Dist merged = a;
    for (const auto& [k, v] : b) merged[k] += 0;
    double tv = 0.0;
    for (const auto& [k, v] : merged) {
        const double pa = a.count(k) ? a.at(k) : 0.0;
        const double pb = b.count(k) ? b.at(k) : 0.0;
        tv += std::abs(pa - pb);
    }
    return tv / 2.0;
}

double chi_squared_p_value(const std::vector<std::size_t>& counts, double expected) {
    double stat = 0.0;
    for (std::size_t c : counts) stat += (c - expected) * (c - expected) / expected;
    boost::math::chi_squared dist(double(counts.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- criteria -------------------------------------------------------------

// Noiseless correctness: zero failed traps over 10^3 Protocol-1 rounds
// on a 3x3 grid, exact generic score 1 - beta, and the exact optimized
// closed form in paper mode.
void criterion_1() {
    Criterion c(1);

    HonestDevice device({}, 101);
    const Protocol1Result p1 = run_protocol1(grid_graph(3, 3), {}, 1000, 0.2, device, 102);
    c.require(p1.failed == 0, "protocol 1 saw failed traps on the ideal device");
    c.require(p1.accepted && p1.z_fail == 0.0, "protocol 1 did not accept with z_fail = 0");

    BenchmarkConfig generic;
    generic.n = 20;
    generic.m = 20;
    generic.beta = 0.05;
    generic.seed = 103;
    HonestDevice gdev({}, 104);
    const BenchmarkResult g = run_generic_cicc(zero_path_pattern(3), generic, gdev);
    c.require(g.accepted_count == generic.m, "generic run rejected an ideal repetition");
    c.require(g.z == 1.0 - generic.beta, "generic z is not exactly 1 - beta");

    BenchmarkConfig opt;
    opt.n = 30;
    opt.m = 2;
    opt.beta_t = 0.02;
    opt.c_t = 0.2;
    opt.exponent_mode = ExponentMode::PaperN3;
    opt.seed = 105;
    HonestDevice odev({}, 106);
    const BenchmarkResult o = run_optimized_cicc(grid_graph(2, 2), opt, odev);
    c.require(o.activated_count == 0, "optimized run activated a trap on the ideal device");
    const double nd = double(opt.n);
    const double gap = opt.c_t - opt.beta_t;
    const double expected = 1.0 - std::exp(-(2.0 * nd * nd * nd * gap * gap));
    c.require(o.z_t == opt.beta_t, "optimized z_t is not exactly beta_t");
    c.require(o.z == expected, "optimized z does not match the closed form in paper mode");

    c.finish(120.0);
}

// Trap determinism: every nonempty subset of every grid up to 3x3
// yields the predicted parity in all of 10 seeded runs.
void criterion_2() {
    Criterion c(2);
    long checked = 0;
    long wrong = 0;
    for (std::size_t w = 1; w <= 3 && wrong == 0; ++w) {
        for (std::size_t d = 1; d <= 3 && wrong == 0; ++d) {
            const Graph grid = grid_graph(w, d);
            const std::size_t n = grid.n_vertices;
            for (std::uint64_t mask = 1; mask < (1ull << n) && wrong == 0; ++mask) {
                std::vector<std::size_t> subset;
                for (std::size_t v = 0; v < n; ++v) {
                    if (mask & (1ull << v)) subset.push_back(v);
                }
                for (std::uint64_t run = 0; run < 10; ++run) {
                    const std::uint64_t seed = (w * 100 + d * 10) * 1000 + mask * 16 + run;
                    Rng rng = derive_stream(seed, 0);
                    const TrapComputation trap = make_trap(grid, subset, rng);
                    HonestDevice device({}, seed + 1);
                    ++checked;
                    if (run_trap(trap, device, rng) != TrapVerdict::Pass) {
                        ++wrong;
                        std::ostringstream ss;
                        ss << "trap parity mismatch on " << w << "x" << d << " subset mask " << mask
                           << " run " << run;
                        c.problems.push_back(ss.str());
                        break;
                    }
                }
            }
        }
    }
    c.require(checked == 6730 || wrong > 0, "unexpected trap count");
    c.finish(600.0);
}

// Detection rate: exactly 1/2 for non-stabilizer errors by exhaustive
// stabilizer-group enumeration, and the live trap protocol reproduces
// it against an injected fixed error.
void criterion_3() {
    Criterion c(3);

    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
        {1, 2}, {1, 4}, {2, 2}, {2, 3}, {2, 4}};
    Rng rng(301);
    int found = 0;
    while (found < 50) {
        const auto& [w, d] = shapes[found % shapes.size()];
        const Graph grid = grid_graph(w, d);
        PauliString error(grid.n_vertices);
        for (std::size_t q = 0; q < grid.n_vertices; ++q)
            error.set_op(q, "IXYZ"[draw_below(rng, 4)]);
        const Fraction frac = detection_fraction(grid, error);
        if (frac.num == 0) continue;  // stabilizer element (incl. identity): undetectable
        ++found;
        if (!(frac == Fraction{1, 2})) {
            c.problems.push_back("detection fraction of non-stabilizer " + error.str() +
                                 " is not exactly 1/2");
            break;
        }
    }

    // Fixed single-qubit error each round; uniform nonempty trap subsets.
    const Graph grid = grid_graph(2, 4);
    PauliString error(grid.n_vertices);
    error.set_op(0, 'Z');
    auto device = AdversarialDevice::targeted(error, 1.0, 303);
    Rng live_rng(304);
    const int rounds = 10000;
    int failures = 0;
    for (int i = 0; i < rounds; ++i) {
        const TrapComputation trap = sample_trap(grid, {}, live_rng);
        failures += (run_trap(trap, *device, live_rng, std::uint64_t(i)) == TrapVerdict::Fail);
    }
    const double rate = failures / double(rounds);
    std::ostringstream ss;
    ss << "live fail rate " << rate << " outside 0.5 +/- 0.02";
    c.require(std::abs(rate - 0.5) <= 0.02, ss.str());

    c.finish();
}

// Blindness: per-vertex delta indices are chi-square uniform over Z8
// for two distinct jobs on the same graph, and the two delta streams
// are indistinguishable by a two-sample test.
void criterion_4() {
    Criterion c(4);
    const int rounds = 10000;

    auto collect = [&](const std::vector<std::uint8_t>& phi, std::uint64_t seed) {
        MeasurementPattern p;
        p.graph = grid_graph(2, 3);
        p.flow = standard_grid_flow(p.graph);
        p.phi = phi;
        const BlindJob job = pattern_to_job(p);
        HonestDevice device({}, seed);
        Rng rng(seed);
        std::vector<std::vector<std::size_t>> counts(p.graph.n_vertices,
                                                     std::vector<std::size_t>(8, 0));
        for (int i = 0; i < rounds; ++i) {
            const UbqcResult r = run_ubqc(job, device, rng, std::uint64_t(i));
            for (const auto& rec : r.transcript.vertices) ++counts[rec.vertex][*rec.delta];
        }
        return counts;
    };

    const auto ca = collect({0, 0, 0, 0, 0, 0}, 401);
    const auto cb = collect({3, 6, 1, 5, 2, 7}, 402);
    for (const auto* counts : {&ca, &cb}) {
        for (const auto& per_vertex : *counts) {
            const double p = chi_squared_p_value(per_vertex, rounds / 8.0);
            c.require(p > 0.001, "delta uniformity rejected (p = " + std::to_string(p) + ")");
        }
    }
    boost::math::chi_squared dof7(7.0);
    for (std::size_t v = 0; v < ca.size(); ++v) {
        double stat = 0.0;
        for (int k = 0; k < 8; ++k) {
            const double c1 = double(ca[v][k]), c2 = double(cb[v][k]);
            stat += (c1 - c2) * (c1 - c2) / (c1 + c2);
        }
        const double p = boost::math::cdf(boost::math::complement(dof7, stat));
        c.require(p > 0.001, "two-sample test distinguishes the jobs (p = " + std::to_string(p) + ")");
    }
    c.finish();
}

// Hoeffding calibration over p x m x beta: the generic score exceeds
// the true acceptance rate with frequency at most exp(-2 m beta^2).
void criterion_5() {
    Criterion c(5);
    const double ps[] = {0.5, 0.7, 0.9};
    const long ms[] = {50, 200, 1000};
    const double betas[] = {0.02, 0.05, 0.1};
    const int trials = 10000;
    Rng rng(501);
    for (double p : ps) {
        for (long m : ms) {
            for (double beta : betas) {
                int violations = 0;
                for (int t = 0; t < trials; ++t) {
                    long accepted = 0;
                    for (long i = 0; i < m; ++i) accepted += draw_unit(rng) < p;
                    if (p <= score_generic(accepted, m, beta)) ++violations;
                }
                const double freq = violations / double(trials);
                const double bound = hoeffding_tail(m, beta);
                if (freq > bound) {
                    std::ostringstream ss;
                    ss << "cell p=" << p << " m=" << m << " beta=" << beta << ": violation rate "
                       << freq << " > " << bound;
                    c.problems.push_back(ss.str());
                }
            }
        }
    }
    c.finish(300.0);
}

// Soundness: lying devices never produce an accepted wrong result, and
// the constant-zero device is rejected nearly always.
void criterion_6() {
    Criterion c(6);

    const MeasurementPattern pattern = zero_path_pattern(3);
    const std::vector<int> correct = {0};

    BenchmarkConfig config;
    config.n = 60;
    config.c_t = 0.2;
    config.trap_fraction = 0.9;  // enough traps that a 1/2 fail rate always clears c_t * n

    auto run_many = [&](AdversaryStrategy strategy, const TrapDistribution& dist,
                        std::uint64_t seed) {
        BenchmarkConfig cfg = config;
        cfg.trap_dist = dist;
        long accepted_wrong = 0;
        long rejected = 0;
        for (std::uint64_t run = 0; run < 1000; ++run) {
            AdversarialDevice device(strategy, seed + run);
            Rng rng = derive_stream(seed, run);
            const VbqcOutcome out = run_robust_vbqc(pattern, cfg, device, rng);
            if (!out.accepted)
                ++rejected;
            else if (out.result != correct)
                ++accepted_wrong;
        }
        return std::pair<long, long>{accepted_wrong, rejected};
    };

    // Odd-support subsets: a flip-all device activates every such trap.
    TrapDistribution odd;
    odd.fixed_subsets = {{0}, {1}, {2}, {0, 1, 2}};
    const auto [flip_wrong, flip_rej] = run_many(AdversaryStrategy::FlipAllOutcomes, odd, 601);
    c.require(flip_wrong == 0, "flip-all adversary produced accepted wrong results");

    const auto [rand_wrong, rand_rej] = run_many(AdversaryStrategy::RandomOutcomes, {}, 602);
    c.require(rand_wrong == 0, "random-outcome adversary produced accepted wrong results");

    const auto [zero_wrong, zero_rej] = run_many(AdversaryStrategy::ConstantZero, {}, 603);
    std::ostringstream ss;
    ss << "constant-zero rejected only " << zero_rej << "/1000 times";
    c.require(zero_rej > 990, ss.str());
    c.require(zero_wrong == 0, "constant-zero adversary produced accepted wrong results");

    c.finish();
}

// Delegation equivalence: direct enumeration, MBQC, and UBQC output
// distributions agree pairwise for random patterns.
void criterion_7() {
    Criterion c(7);
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{1, 2}, {1, 3}, {2, 2}, {2, 3}};
    Rng pattern_rng(701);
    const int shots = 10000;
    for (int trial = 0; trial < 20; ++trial) {
        const auto& [w, d] = shapes[trial % shapes.size()];
        const MeasurementPattern p = random_grid_pattern(w, d, pattern_rng);
        const Dist exact = exact_output_distribution(p);

        HonestDevice mdev({}, 702 + std::uint64_t(trial));
        Rng mrng = derive_stream(703, std::uint64_t(trial));
        Dist mbqc;
        for (int shot = 0; shot < shots; ++shot) {
            const MbqcResult r = run_mbqc(p, mdev, mrng);
            if (r.aborted) {
                c.problems.push_back("MBQC round aborted");
                break;
            }
            mbqc[r.output_bits] += 1.0 / shots;
        }

        const BlindJob job = pattern_to_job(p);
        HonestDevice udev({}, 704 + std::uint64_t(trial));
        Rng urng = derive_stream(705, std::uint64_t(trial));
        Dist ubqc;
        for (int shot = 0; shot < shots; ++shot) {
            const UbqcResult r = run_ubqc(job, udev, urng, std::uint64_t(shot));
            if (r.transcript.aborted) {
                c.problems.push_back("UBQC round aborted");
                break;
            }
            ubqc[r.output_bits] += 1.0 / shots;
        }

        const double tv_em = total_variation(exact, mbqc);
        const double tv_eu = total_variation(exact, ubqc);
        const double tv_mu = total_variation(mbqc, ubqc);
        if (tv_em >= 0.05 || tv_eu >= 0.05 || tv_mu >= 0.05) {
            std::ostringstream ss;
            ss << "pattern " << trial << " (" << w << "x" << d << "): TV distances " << tv_em << ", "
               << tv_eu << ", " << tv_mu;
            c.problems.push_back(ss.str());
        }
        if (!c.problems.empty()) break;
    }
    c.finish();
}

// Characterization sweep: the ideal device certifies every grid up to
// width*depth = 12, a heavily flipping device certifies none, and the
// emitted map is byte-stable under reruns.
void criterion_8() {
    Criterion c(8);
    BenchmarkConfig config;
    config.n = 100;
    config.m = 1;
    config.omega = 0.2;
    config.seed = 801;
    const std::vector<std::size_t> widths = {1, 2, 3};
    const std::vector<std::size_t> depths = {1, 2, 3, 4};

    const CertificationMap ideal =
        characterize_device(honest_device_factory(), widths, depths, config, SweepMode::Protocol1);
    for (const CertEntry& e : ideal.entries) {
        if (e.width * e.depth <= 12 && e.verdict != "accept") {
            std::ostringstream ss;
            ss << "ideal device not certified on " << e.width << "x" << e.depth;
            c.problems.push_back(ss.str());
        }
    }

    NoiseModel broken;
    broken.measure_flip = 0.4;
    const CertificationMap noisy = characterize_device(honest_device_factory(broken), widths, depths,
                                                       config, SweepMode::Protocol1);
    for (const CertEntry& e : noisy.entries) {
        if (e.verdict == "accept") {
            std::ostringstream ss;
            ss << "measure_flip=0.4 device certified on " << e.width << "x" << e.depth;
            c.problems.push_back(ss.str());
        }
    }

    const std::string rerun =
        map_to_json(characterize_device(honest_device_factory(), widths, depths, config,
                                        SweepMode::Protocol1))
            .dump();
    c.require(rerun == map_to_json(ideal).dump(), "repeated seeded sweep is not byte-identical");
    c.finish();
}

// Offline re-scoring through the CLI: analyze reproduces every live
// certificate byte for byte, and the alternate exponent mode matches an
// independent in-process re-score of the stored transcript.
void criterion_9(const std::string& cli) {
    Criterion c(9);
    const fs::path work = "acceptance_work";
    fs::remove_all(work);
    fs::create_directories(work);

    auto run_cli = [&](const std::string& args) {
        const std::string cmd = cli + " " + args + " > " + (work / "cli.out").string() + " 2> " +
                                (work / "cli.err").string();
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto write_config = [&](const std::string& name, const ordered_json& j) {
        std::ofstream out(work / name);
        out << j.dump(2);
    };

    const std::vector<std::pair<std::string, ordered_json>> modes = {
        {"protocol1", {{"n", 40}, {"omega", 0.2}, {"seed", 901}}},
        {"generic", {{"n", 10}, {"m", 5}, {"seed", 902}}},
        {"optimized", {{"n", 30}, {"seed", 903}}},
    };
    for (const auto& [mode, bench] : modes) {
        const ordered_json config = {
            {"mode", mode},
            {"graph", {{"width", 2}, {"depth", 2}}},
            {"bench", bench},
            {"device", {{"kind", "honest"}}},
        };
        write_config(mode + ".json", config);
        const fs::path live = work / (mode + "_live");
        const fs::path re = work / (mode + "_re");
        if (run_cli("bench --config " + (work / (mode + ".json")).string() + " --out " +
                    live.string()) != 0) {
            c.problems.push_back("bench failed in mode " + mode);
            continue;
        }
        if (run_cli("analyze --config " + (work / (mode + ".json")).string() + " --transcript " +
                    (live / "transcript.jsonl").string() + " --out " + re.string()) != 0) {
            c.problems.push_back("analyze failed in mode " + mode);
            continue;
        }
        c.require(slurp(re / "certificate.json") == slurp(live / "certificate.json"),
                  "analyze output differs from the live certificate in mode " + mode);
    }

    // Alternate exponent mode on the optimized transcript, checked
    // against an independent in-process re-score.
    const fs::path live = work / "optimized_live";
    const fs::path re3 = work / "optimized_re3";
    if (run_cli("analyze --config " + (work / "optimized.json").string() + " --transcript " +
                (live / "transcript.jsonl").string() + " --exponent-mode paper_n3 --out " +
                re3.string()) != 0) {
        c.problems.push_back("analyze with exponent override failed");
    } else {
        Certificate cert =
            certificate_from_json(ordered_json::parse(slurp(live / "certificate.json")));
        cert.config.exponent_mode = ExponentMode::PaperN3;
        const std::vector<RoundRecord> records =
            read_transcript_file((live / "transcript.jsonl").string());
        const Certificate rescored =
            score_from_records(cert.mode, cert.config, records, cert.width, cert.depth);
        const std::string expected = certificate_to_json(rescored).dump(2) + "\n";
        c.require(slurp(re3 / "certificate.json") == expected,
                  "re-scored paper-mode certificate does not match the in-process value");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(CLI_BINARY);
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
