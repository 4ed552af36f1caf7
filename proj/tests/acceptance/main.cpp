// Acceptance suite: one numbered check per release criterion, each printing a
// single PASS/FAIL line. Run with no arguments for the full battery or with
// --only K for one criterion. --cli PATH points at the command-line binary
// for the determinism checks.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamcube/fixtures.hpp"
#include "hamcube/graycode.hpp"
#include "hamcube/markov.hpp"
#include "hamcube/metric.hpp"
#include "hamcube/prng.hpp"
#include "hamcube/stats.hpp"
#include "hamcube/stoptime.hpp"

namespace {

using namespace hamcube;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. Canonical extension reproduces the two golden transition sequences.
Outcome criterion_golden_codes() {
    Outcome out;
    const auto start = Clock::now();
    const std::vector<int> golden3 = {1, 2, 1, 3, 1, 2, 1, 3};
    const std::vector<int> golden4 = {2, 3, 4, 1, 4, 3, 2, 3, 1, 4, 1, 3, 2, 1, 2, 4};
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        out.require(build_balanced_code(3, seed).seq == golden3, "3-bit sequence mismatch");
        out.require(build_balanced_code(4, seed).seq == golden4, "4-bit sequence mismatch");
    }
    out.require(to_line(build_balanced_code(3, 0)) == "1,2,1,3,1,2,1,3", "serialized form mismatch");
    const double elapsed = seconds_since(start);
    out.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + "s exceeds 1s");
    return out;
}

// 2. Every generated code is cyclic with counts in {a, a+2} matching the
//    target multiset; exact table multisets for 3..7.
Outcome criterion_balance_at_scale() {
    Outcome out;
    const auto start = Clock::now();
    for (int n = 3; n <= 12; ++n) {
        const auto targets = balance_targets(n);
        const std::multiset<int> expected(targets.targets.begin(), targets.targets.end());
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto s = build_balanced_code(n, seed);
            const std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            if (!is_cyclic_gray(s)) {
                out.require(false, tag + ": not cyclic");
                continue;
            }
            const auto tc = transition_counts(s);
            bool in_pair = true;
            for (int c : tc) in_pair = in_pair && (c == targets.a || c == targets.a + 2);
            out.require(in_pair, tag + ": count outside {a, a+2}");
            out.require(std::multiset<int>(tc.begin(), tc.end()) == expected,
                        tag + ": count multiset mismatch");
        }
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + "s exceeds 30s");
    out.detail += out.detail.empty() ? "" : "; ";
    out.detail += "elapsed " + std::to_string(elapsed) + "s";
    return out;
}

// 3. The lazy matrix of the three-bit reference map equals the published
//    8x8 matrix entry for entry, in exact integers.
Outcome criterion_reference_matrix() {
    Outcome out;
    constexpr std::array<std::array<int, 8>, 8> reference = {{
        {4, 1, 1, 0, 0, 0, 0, 0},
        {1, 4, 0, 0, 0, 1, 0, 0},
        {0, 0, 4, 1, 0, 0, 1, 0},
        {0, 1, 1, 4, 0, 0, 0, 0},
        {1, 0, 0, 0, 4, 0, 1, 0},
        {0, 0, 0, 0, 1, 4, 0, 1},
        {0, 0, 0, 0, 1, 0, 4, 1},
        {0, 0, 0, 1, 0, 1, 0, 4},
    }};
    const auto f = function_from_cycle({3, {3, 1, 3, 2, 3, 1, 3, 2}});
    const auto m = lazy_walk_matrix(f);
    out.require(m.denom == 6, "denominator is not 6");
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            out.require(m.at(r, c) == reference[r][c],
                        "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs");
    return out;
}

// 4. Generated maps: strongly connected iteration graph and exactly doubly
//    stochastic matrices, for every width up to 10.
Outcome criterion_structure() {
    Outcome out;
    for (int n = 3; n <= 10; ++n) {
        const unsigned seeds = n <= 8 ? 10 : 4;
        for (std::uint64_t seed = 0; seed < seeds; ++seed) {
            const auto f = function_from_cycle(build_balanced_code(n, seed));
            const std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            out.require(is_strongly_connected(gamma(f)), tag + ": not strongly connected");
            out.require(is_doubly_stochastic(uniform_walk_matrix(f)),
                        tag + ": uniform matrix not doubly stochastic");
            out.require(is_doubly_stochastic(lazy_walk_matrix(f)),
                        tag + ": lazy matrix not doubly stochastic");
        }
    }
    return out;
}

// 5. Practical mixing times of the five reference maps match the published
//    walk lengths within one step.
Outcome criterion_practical_mixing() {
    Outcome out;
    const auto start = Clock::now();
    std::string measured = "measured";
    for (const auto& fx : all_fixtures()) {
        const auto m = lazy_walk_matrix(fixture_map(fx.tag));
        const int b = practical_mixing_time(m, 1e-6);
        const int tv = mixing_time(m, 1e-6);
        measured += " " + std::string(1, fx.tag) + ":" + std::to_string(b) +
                    "(tv:" + std::to_string(tv) + ")";
        out.require(std::abs(b - fx.practical_b) <= 1,
                    std::string(1, fx.tag) + ": got " + std::to_string(b) + ", expected " +
                        std::to_string(fx.practical_b) + " +-1");
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 120.0, "runtime exceeds 2min");
    out.detail += out.detail.empty() ? measured : "; " + measured;
    return out;
}

// 6. t_mix(eps) <= ceil(log2(1/eps)) * t_mix(1/4) on every reference map.
Outcome criterion_mixing_bound() {
    Outcome out;
    for (const auto& fx : all_fixtures()) {
        const auto m = lazy_walk_matrix(fixture_map(fx.tag));
        const int base = mixing_time(m, 0.25);
        const std::pair<double, int> cases[] = {{1e-2, 7}, {1e-4, 14}, {1e-6, 20}};
        for (const auto& [eps, ceil_log] : cases) {
            const int t = mixing_time(m, eps);
            out.require(t <= ceil_log * base,
                        std::string(1, fx.tag) + ": t_mix(" + std::to_string(eps) + ")=" +
                            std::to_string(t) + " > " + std::to_string(ceil_log) + "*" +
                            std::to_string(base));
        }
    }
    return out;
}

// 7. Stopping-time estimates stay at least five standard errors below the
//    proven bound and within a factor band of the reference curve.
Outcome criterion_stopping_time() {
    Outcome out;
    const auto start = Clock::now();
    for (int n : {4, 6, 8, 12, 16}) {
        const auto f = function_from_cycle(build_balanced_code(n, 1));
        const auto s = estimate_stopping_time(f, 10000, 42, 4);
        const std::string tag = "n=" + std::to_string(n);
        out.require(s.mean + 5.0 * s.std_error <= s.bound, tag + ": mean too close to the bound");
        out.require(s.mean >= 0.5 * s.curve && s.mean <= 2.0 * s.curve,
                    tag + ": mean " + std::to_string(s.mean) + " outside [0.5, 2.0] * curve " +
                        std::to_string(s.curve));
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 120.0, "runtime exceeds 2min");
    out.detail += out.detail.empty() ? "" : "; ";
    out.detail += "elapsed " + std::to_string(elapsed) + "s";
    return out;
}

// 8. The two worked distance examples print their published digit prefixes
//    byte for byte.
Outcome criterion_metric_goldens() {
    Outcome out;
    {
        const ExtendedPoint x{13, 0, {6, 11, 5}, {1, 2}, {1, 2, 11}};
        const ExtendedPoint y{13, 0, {6, 4, 1}, {2, 1}, {1, 2, 11}};
        const std::string got = distance(x, y, 2).to_string();
        const std::string expected = "0.01 0004000000000000000000 01 1005";
        out.require(got.starts_with(expected),
                    "first example printed \"" + got + "\", expected prefix \"" + expected + "\"");
    }
    {
        const ExtendedPoint x{9, 0, {6, 7, 4, 2}, {2, 2}, {2, 7}};
        const ExtendedPoint y{9, 0, {4, 9, 6, 3, 6, 6, 7, 9, 8}, {7, 2}, {2, 7}};
        const std::string got = distance(x, y, 2).to_string();
        const std::string expected = "0.5 2263667 1 5600000";
        out.require(got.starts_with(expected),
                    "second example printed \"" + got + "\", expected prefix \"" + expected + "\"");
    }
    return out;
}

// 9. The negation map's length-b iteration graphs are never strongly
//    connected for b in 1..6 (widths 2 and 3).
Outcome criterion_negation_not_connected() {
    Outcome out;
    for (int n : {2, 3}) {
        const BooleanMap neg = BooleanMap::negation(n);
        for (int b = 1; b <= 6; ++b) {
            const bool connected = is_strongly_connected(gamma_p(neg, {b}));
            out.require(!connected, "n=" + std::to_string(n) + " b=" + std::to_string(b) +
                                        ": strongly connected");
        }
    }
    return out;
}

// 10. Both generator variants on the first reference map pass the built-in
//     uniformity and frequency tests at the 1e-3 level over 1e6 outputs.
Outcome criterion_generator_quality() {
    Outcome out;
    for (WalkVariant variant : {WalkVariant::Gated, WalkVariant::Plain}) {
        Generator gen(fixture_map('a'), 64, 0, variant, 2016);
        constexpr std::size_t kOutputs = 1000000;
        std::vector<Word> words;
        words.reserve(kOutputs);
        std::vector<std::uint8_t> bits;
        bits.reserve(kOutputs * 4);
        for (std::size_t k = 0; k < kOutputs; ++k) {
            const Word w = gen.next();
            words.push_back(w);
            for (int i = 3; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((w >> i) & 1));
        }
        const auto chi = chi_square_uniformity(words, 4, 1e-3);
        const auto mono = monobit_test(bits, 1e-3);
        const std::string tag = to_string(variant);
        out.require(chi.pass, tag + ": chi-square p=" + std::to_string(chi.p_value));
        out.require(mono.pass, tag + ": monobit p=" + std::to_string(mono.p_value));
        out.detail += out.detail.empty() ? "" : "; ";
        out.detail += tag + " chi2_p=" + std::to_string(chi.p_value) +
                      " monobit_p=" + std::to_string(mono.p_value);
    }
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 11. Re-running the command line with identical flags yields bit-identical
//     artifacts.
Outcome criterion_cli_determinism(const std::string& cli_arg) {
    Outcome out;
    if (cli_arg.empty()) {
        out.require(false, "no --cli path given");
        return out;
    }
    const std::string cli = std::filesystem::absolute(cli_arg).string();
    const auto dir = std::filesystem::temp_directory_path() / "hamcube-acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
        {"gen-code", {"--n", "8", "--seed", "5", "--out", "code.txt"}},
        {"gen-fun", {"--n", "6", "--seed", "9", "--out", "fun.txt"}},
        {"analyze", {"--fixture", "a", "--csv", "series.csv"}},
        {"stoptime", {"--n", "4", "--trials", "500", "--seed", "3", "--out", "stop.csv"}},
        {"bits",
         {"--fixture", "a", "--b", "64", "--count", "20000", "--seed", "11", "--format",
          "packed", "--out", "bits.bin"}},
    };

    for (const auto& [sub, args] : runs) {
        std::vector<std::string> artifacts;
        for (std::size_t k = 0; k + 1 < args.size(); ++k)
            if (args[k] == "--out" || args[k] == "--csv") artifacts.push_back(args[k + 1]);
        std::vector<std::string> first;
        for (int round = 0; round < 2; ++round) {
            std::string cmd = "cd " + dir.string() + " && " + cli + " " + sub;
            for (const auto& a : args) cmd += " " + a;
            cmd += " > stdout_" + std::to_string(round) + ".txt 2>&1";
            const int rc = std::system(cmd.c_str());
            out.require(rc == 0, sub + ": exit status " + std::to_string(rc));
            if (round == 0) {
                for (const auto& a : artifacts) first.push_back(read_file(dir / a));
            } else {
                for (std::size_t k = 0; k < artifacts.size(); ++k)
                    out.require(read_file(dir / artifacts[k]) == first[k],
                                sub + ": " + artifacts[k] + " differs between runs");
            }
        }
        // the printed report is part of the reproducible surface
        out.require(read_file(dir / "stdout_0.txt") == read_file(dir / "stdout_1.txt"),
                    sub + ": stdout differs between runs");
    }
    std::filesystem::remove_all(dir);
    return out;
}

struct Criterion {
    int number;
    const char* name;
    Outcome (*run)();
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    std::string cli;
    for (int k = 1; k < argc; ++k) {
        const std::string arg = argv[k];
        if (arg == "--only" && k + 1 < argc) only = std::atoi(argv[++k]);
        else if (arg == "--cli" && k + 1 < argc) cli = argv[++k];
    }

    const Criterion criteria[] = {
        {1, "golden-gray-codes", criterion_golden_codes},
        {2, "balance-at-scale", criterion_balance_at_scale},
        {3, "reference-lazy-matrix", criterion_reference_matrix},
        {4, "structure-theorems", criterion_structure},
        {5, "practical-mixing-times", criterion_practical_mixing},
        {6, "mixing-time-bound", criterion_mixing_bound},
        {7, "stopping-time-bound", criterion_stopping_time},
        {8, "metric-golden-strings", criterion_metric_goldens},
        {9, "negation-not-connected", criterion_negation_not_connected},
        {10, "generator-quality", criterion_generator_quality},
        {11, "cli-determinism", nullptr},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.number != only) continue;
        const Outcome outcome = c.run ? c.run() : criterion_cli_determinism(cli);
        all_pass = all_pass && outcome.pass;
        std::cout << "criterion " << (c.number < 10 ? "0" : "") << c.number << ' ' << c.name
                  << ": " << (outcome.pass ? "PASS" : "FAIL");
        if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
        std::cout << std::endl;
    }
    return all_pass ? 0 : 1;
}
