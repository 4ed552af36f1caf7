// Command-line front end: generate balanced codes and walk maps, analyze the
// induced chains, estimate stopping times, and emit seeded bit streams.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamcube/fixtures.hpp"
#include "hamcube/graycode.hpp"
#include "hamcube/markov.hpp"
#include "hamcube/metric.hpp"
#include "hamcube/prng.hpp"
#include "hamcube/random.hpp"
#include "hamcube/stats.hpp"
#include "hamcube/stoptime.hpp"

namespace {

using namespace hamcube;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::string read_first_line(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    std::getline(in, line);
    return line;
}

std::string format_counts(const std::vector<int>& counts) {
    std::string out = "[";
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(counts[k]);
    }
    return out + "]";
}

struct MapChoice {
    std::string fixture;
    std::string file;
    int n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

// Resolve the analyzed/driven map from --fixture, --file, or --n/--seed.
// Tables from files get the blocked-direction record when it is derivable;
// other maps (the negation, say) are analyzed without it.
BooleanMap resolve_map(const MapChoice& choice, std::string& described) {
    if (!choice.fixture.empty()) {
        described = "fixture " + choice.fixture;
        return fixture_map(choice.fixture[0]);
    }
    if (!choice.file.empty()) {
        described = "file " + choice.file;
        BooleanMap plain = BooleanMap::from_table_line(read_first_line(choice.file));
        try {
            return BooleanMap::with_derived_h(plain.n_bits(), plain.images());
        } catch (const std::invalid_argument&) {
            return plain;
        }
    }
    if (choice.n == 0) throw CLI::ValidationError("one of --fixture, --file, --n is required");
    if (!choice.seed_given) throw CLI::ValidationError("--seed is required with --n");
    described = "generated n=" + std::to_string(choice.n) + " seed=" + std::to_string(choice.seed);
    return function_from_cycle(build_balanced_code(choice.n, choice.seed));
}

void add_map_options(CLI::App* cmd, MapChoice& choice, bool with_n = true, bool with_seed = true) {
    cmd->add_option("--fixture", choice.fixture, "built-in reference map (a..e)")
        ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
    cmd->add_option("--file", choice.file, "function table file (one line of 2^n images)");
    if (with_n) cmd->add_option("--n", choice.n, "bit width for a generated map");
    if (with_seed)
        cmd->add_option("--seed", choice.seed, "seed for a generated map")
            ->each([&choice](const std::string&) { choice.seed_given = true; });
}

int cmd_gen_code(int n, std::uint64_t seed, const std::string& out_path,
                 const std::string& codewords_path) {
    std::cout << "# gen-code --n " << n << " --seed " << seed << "\n";
    const TransitionSequence s = build_balanced_code(n, seed);
    std::cout << "balance: " << to_string(balance_class(s)) << "\n";
    std::cout << "transition_counts: " << format_counts(transition_counts(s)) << "\n";
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << to_line(s) << "\n";
    } else {
        std::cout << to_line(s) << "\n";
    }
    if (!codewords_path.empty()) {
        auto out = open_out(codewords_path);
        for (Word w : codewords(s)) out << to_bit_string(n, w) << "\n";
    }
    return 0;
}

int cmd_gen_fun(const MapChoice& choice, const std::string& code_path,
                const std::string& out_path) {
    std::cout << "# gen-fun\n";
    BooleanMap map = [&] {
        if (!code_path.empty())
            return function_from_cycle(sequence_from_line(read_first_line(code_path)));
        std::string described;
        return resolve_map(choice, described);
    }();
    std::cout << "n: " << map.n_bits() << "\n";
    std::cout << map.table_line() << "\n";
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << map.table_line() << "\n";
    }
    return 0;
}

int cmd_analyze(const MapChoice& choice, double eps, int max_n, const std::vector<int>& p_set,
                const std::string& csv_path) {
    std::string described;
    const BooleanMap map = resolve_map(choice, described);
    std::cout << "# analyze " << described << " --eps " << eps << "\n";
    if (map.n_bits() > max_n)
        throw std::runtime_error("analysis cap exceeded: n=" + std::to_string(map.n_bits()) +
                                 " > " + std::to_string(max_n) + " (raise --max-n to override)");

    const bool connected = is_strongly_connected(gamma(map));
    const bool ds_uniform = is_doubly_stochastic(uniform_walk_matrix(map));
    const auto complete = completeness_b(map);

    std::cout << std::boolalpha;
    std::cout << "n: " << map.n_bits() << "\n";
    std::cout << "strongly_connected: " << connected << "\n";
    if (!p_set.empty()) {
        std::string counts;
        for (int p : p_set) counts += (counts.empty() ? "" : ",") + std::to_string(p);
        std::cout << "strongly_connected_p{" << counts
                  << "}: " << is_strongly_connected(gamma_p(map, p_set)) << "\n";
    }
    std::cout << "doubly_stochastic_uniform: " << ds_uniform << "\n";

    bool ds_lazy = true;
    if (map.has_h()) {
        const auto lazy = lazy_walk_matrix(map);
        ds_lazy = is_doubly_stochastic(lazy);
        const auto sq = square_free_report(map);
        std::cout << "doubly_stochastic_lazy: " << ds_lazy << "\n";
        std::cout << "square_free: " << sq.square_free << "\n";
        std::cout << "hbar_bijective: " << sq.hbar_bijective << "\n";
    } else {
        std::cout << "blocked_direction: none (lazy-walk analysis skipped)\n";
    }
    if (complete)
        std::cout << "completeness_b: " << *complete << "\n";
    else
        std::cout << "completeness_b: none\n";

    if (map.has_h()) {
        const double eps_list[] = {eps};
        const MixingReport report = analyze_mixing(lazy_walk_matrix(map), eps_list);
        std::cout << "practical_b: " << report.practical_b << "\n";
        std::cout << "tv_mixing_time: " << report.t_mix.front().second << "\n";
        if (!csv_path.empty()) {
            auto out = open_out(csv_path);
            write_d_series_csv(out, report);
        }
    }
    return (connected && ds_uniform && ds_lazy) ? 0 : 1;
}

int cmd_stoptime(std::vector<int> n_values, const MapChoice& choice, int trials,
                 std::uint64_t seed, int threads, const std::string& out_path) {
    std::cout << "# stoptime --trials " << trials << " --seed " << seed << "\n";
    std::vector<StopSummary> rows;
    if (!choice.fixture.empty() || !choice.file.empty()) {
        std::string described;
        const BooleanMap map = resolve_map(choice, described);
        rows.push_back(estimate_stopping_time(map, trials, seed, threads));
    }
    for (int n : n_values) {
        const BooleanMap map = function_from_cycle(build_balanced_code(n, seed));
        rows.push_back(estimate_stopping_time(map, trials, seed, threads));
    }
    if (rows.empty()) throw CLI::ValidationError("nothing to do: pass --n values or --fixture/--file");

    std::ostringstream csv;
    csv << std::setprecision(10);
    write_summaries_csv(csv, rows);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << csv.str();
    }
    std::cout << csv.str();

    bool ok = true;
    for (const auto& r : rows) ok = ok && r.mean <= r.bound;
    std::cout << "means_below_bound: " << std::boolalpha << ok << "\n";
    return ok ? 0 : 1;
}

int cmd_bits(MapChoice choice, int b, std::size_t count, std::uint64_t seed,
             const std::string& variant_name, const std::string& format_name,
             const std::string& out_path) {
    choice.seed = seed;
    choice.seed_given = true;
    std::string described;
    const BooleanMap map = resolve_map(choice, described);
    const WalkVariant variant = walk_variant_from_string(variant_name);
    const BitFormat format = bit_format_from_string(format_name);
    if (b <= 0) {
        if (!map.has_h())
            throw std::runtime_error("--b is required for maps without a blocked-direction table");
        b = practical_mixing_time(lazy_walk_matrix(map), 1e-6);
    }
    std::cout << "# bits " << described << " --b " << b << " --count " << count << " --seed "
              << seed << " --variant " << variant_name << " --format " << format_name << "\n";

    Generator gen(map, b, 0, variant, seed);
    const int n = map.n_bits();
    const std::size_t outputs = (count + static_cast<std::size_t>(n) - 1) / n;
    std::vector<Word> words;
    words.reserve(outputs);
    std::vector<std::uint8_t> bits;
    bits.reserve(count);
    for (std::size_t k = 0; k < outputs; ++k) {
        const Word w = gen.next();
        words.push_back(w);
        for (int i = 0; i < n && bits.size() < count; ++i)
            bits.push_back(static_cast<std::uint8_t>((w >> (n - 1 - i)) & 1));
    }
    const std::size_t bytes = export_bits(bits, format, out_path);
    std::cout << "bytes_written: " << bytes << "\n";

    bool ok = true;
    if (bits.size() >= 100) {
        const auto mono = monobit_test(bits, 1e-3);
        std::cout << "monobit_p: " << mono.p_value << " pass: " << std::boolalpha << mono.pass
                  << "\n";
        ok = ok && mono.pass;
    }
    if (words.size() >= 10 * map.n_states()) {
        const auto chi = chi_square_uniformity(words, n, 1e-3);
        std::cout << "chi_square_p: " << chi.p_value << " pass: " << std::boolalpha << chi.pass
                  << "\n";
        ok = ok && chi.pass;
    }
    return ok ? 0 : 1;
}

int cmd_metric_demo() {
    std::cout << "# metric-demo\n";
    {
        ExtendedPoint x{13, 0, {6, 11, 5}, {1, 2}, {1, 2, 11}};
        ExtendedPoint y{13, 0, {6, 4, 1}, {2, 1}, {1, 2, 11}};
        std::cout << "d13: " << distance(x, y, 2).to_string() << "\n";
    }
    {
        ExtendedPoint x{9, 0, {6, 7, 4, 2}, {2, 2}, {2, 7}};
        ExtendedPoint y{9, 0, {4, 9, 6, 3, 6, 6, 7, 9, 8}, {7, 2}, {2, 7}};
        std::cout << "d9:  " << distance(x, y, 2).to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced Gray codes, cube walks, chain analysis and bit streams"};
    app.require_subcommand(1);

    // gen-code
    int gc_n = 0;
    std::uint64_t gc_seed = 0;
    std::string gc_out, gc_words;
    auto* gen_code = app.add_subcommand("gen-code", "build a balanced cyclic Gray code");
    gen_code->add_option("--n", gc_n, "bit width")->required()->check(CLI::Range(3, 20));
    gen_code->add_option("--seed", gc_seed, "construction seed")->required();
    gen_code->add_option("--out", gc_out, "transition sequence output file");
    gen_code->add_option("--codewords-out", gc_words, "codeword listing output file");

    // gen-fun
    MapChoice gf_choice;
    std::string gf_code, gf_out;
    auto* gen_fun = app.add_subcommand("gen-fun", "build or echo a walk map table");
    add_map_options(gen_fun, gf_choice);
    gen_fun->add_option("--code", gf_code, "derive the map from a transition sequence file");
    gen_fun->add_option("--out", gf_out, "table output file");

    // analyze
    MapChoice an_choice;
    double an_eps = 1e-6;
    int an_max_n = 10;
    std::vector<int> an_p;
    std::string an_csv;
    auto* analyze = app.add_subcommand("analyze", "connectivity, stochasticity and mixing report");
    add_map_options(analyze, an_choice);
    analyze->add_option("--eps", an_eps, "mixing threshold")->check(CLI::Range(1e-12, 0.5));
    analyze->add_option("--max-n", an_max_n, "largest bit width to analyze");
    analyze->add_option("--p", an_p, "also report connectivity of the multi-step graph")
        ->check(CLI::Range(1, 12));
    analyze->add_option("--csv", an_csv, "write the (t, d(t)) series to a CSV file");

    // stoptime
    MapChoice st_choice;
    std::vector<int> st_n;
    int st_trials = 10000;
    std::uint64_t st_seed = 0;
    int st_threads = 1;
    std::string st_out;
    auto* stoptime = app.add_subcommand("stoptime", "Monte-Carlo stopping time estimates");
    stoptime->add_option("--n", st_n, "bit widths of generated maps")->check(CLI::Range(3, 20));
    add_map_options(stoptime, st_choice, false, false);
    stoptime->add_option("--trials", st_trials, "trials per map")->check(CLI::PositiveNumber);
    stoptime->add_option("--seed", st_seed, "master seed")->required();
    stoptime->add_option("--threads", st_threads, "trial-level parallelism")
        ->check(CLI::Range(1, 64));
    stoptime->add_option("--out", st_out, "CSV output file");

    // bits
    MapChoice bi_choice;
    int bi_b = 0;
    std::size_t bi_count = 0;
    std::uint64_t bi_seed = 0;
    std::string bi_variant = "gated", bi_format = "ascii", bi_out;
    auto* bits = app.add_subcommand("bits", "emit a seeded output bit stream");
    add_map_options(bits, bi_choice, true, false);
    bits->add_option("--b", bi_b, "walk length per output (default: measured)");
    bits->add_option("--count", bi_count, "number of bits")->required()
        ->check(CLI::Range(std::size_t{100}, std::size_t{1} << 40));
    bits->add_option("--seed", bi_seed, "seed for map generation and the stream")->required();
    bits->add_option("--variant", bi_variant, "walk variant: plain or gated")
        ->check(CLI::IsMember({"plain", "gated"}));
    bits->add_option("--format", bi_format, "output format: ascii or packed")
        ->check(CLI::IsMember({"ascii", "packed"}));
    bits->add_option("--out", bi_out, "bit stream output file")->required();

    auto* metric_demo = app.add_subcommand("metric-demo", "print sequence-distance digit examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_code->parsed()) return cmd_gen_code(gc_n, gc_seed, gc_out, gc_words);
        if (gen_fun->parsed()) return cmd_gen_fun(gf_choice, gf_code, gf_out);
        if (analyze->parsed()) return cmd_analyze(an_choice, an_eps, an_max_n, an_p, an_csv);
        if (stoptime->parsed())
            return cmd_stoptime(st_n, st_choice, st_trials, st_seed, st_threads, st_out);
        if (bits->parsed())
            return cmd_bits(bi_choice, bi_b, bi_count, bi_seed, bi_variant, bi_format, bi_out);
        if (metric_demo->parsed()) return cmd_metric_demo();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
