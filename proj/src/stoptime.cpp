#include "hamcube/stoptime.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <stdexcept>

namespace hamcube {

double stopping_time_bound(int n) {
    if (n < 1) throw std::invalid_argument("stopping_time_bound: n must be positive");
    const double nd = n;
    return 8.0 * nd * nd + 4.0 * nd * std::log(nd + 1.0);
}

double conjecture_curve(int n) {
    if (n < 1) throw std::invalid_argument("conjecture_curve: n must be positive");
    const double nd = n;
    return 2.0 * nd * std::log(2.0 * nd + 8.0);
}

StopTrial simulate_stopping_time(const BooleanMap& f, Word x0, RandomSource& src,
                                 std::uint64_t seed_label) {
    if (!f.has_h()) throw std::logic_error("simulate_stopping_time: h is absent");
    const int n = f.n_bits();
    StopTrial trial{0, seed_label, x0};
    Word x = x0;
    Word fair = 0;
    const Word all_fair = (n == 32) ? ~Word{0} : (Word{1} << n) - 1;
    while (fair != all_fair) {
        const int s = src.uniform_index(n);
        const int coin = src.uniform_bit();
        const Word mask = component_mask(n, s);
        if (coin != 0 && ((x ^ f.image(x)) & mask)) {
            fair |= Word{1} << (s - 1);
            x ^= mask;
        }
        ++trial.steps;
    }
    return trial;
}

StopTrial simulate_stopping_time(const BooleanMap& f, Word x0, std::uint64_t seed) {
    XorShiftSource src(seed);
    return simulate_stopping_time(f, x0, src, seed);
}

namespace {

StopTrial run_one(const BooleanMap& f, std::uint64_t master, int index) {
    const std::uint64_t seed = derive_seed(master, static_cast<std::uint64_t>(index));
    XorShiftSource src(seed);
    Word start = 0;
    for (int i = 0; i < f.n_bits(); ++i)
        start = (start << 1) | static_cast<Word>(src.uniform_bit());
    return simulate_stopping_time(f, start, src, seed);
}

} // namespace

StopSummary estimate_stopping_time(const BooleanMap& f, int trials, std::uint64_t seed,
                                   int threads) {
    if (trials < 1) throw std::invalid_argument("estimate_stopping_time: trials must be positive");
    std::vector<std::int64_t> steps(static_cast<std::size_t>(trials));

    if (threads <= 1) {
        for (int k = 0; k < trials; ++k) steps[k] = run_one(f, seed, k).steps;
    } else {
        std::vector<std::future<void>> jobs;
        const int chunk = (trials + threads - 1) / threads;
        for (int begin = 0; begin < trials; begin += chunk) {
            const int end = std::min(trials, begin + chunk);
            jobs.push_back(std::async(std::launch::async, [&, begin, end] {
                for (int k = begin; k < end; ++k) steps[k] = run_one(f, seed, k).steps;
            }));
        }
        for (auto& j : jobs) j.get();
    }

    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t v : steps) {
        sum += static_cast<double>(v);
        sum2 += static_cast<double>(v) * static_cast<double>(v);
    }
    const double mean = sum / trials;
    const double variance = trials > 1 ? (sum2 - trials * mean * mean) / (trials - 1) : 0.0;

    StopSummary summary;
    summary.n_bits = f.n_bits();
    summary.trials = trials;
    summary.mean = mean;
    summary.std_error = std::sqrt(std::max(variance, 0.0) / trials);
    summary.bound = stopping_time_bound(f.n_bits());
    summary.curve = conjecture_curve(f.n_bits());
    return summary;
}

void write_summaries_csv(std::ostream& out, std::span<const StopSummary> rows) {
    out << "n,mean,std_error,bound,curve\n";
    for (const auto& r : rows)
        out << r.n_bits << ',' << r.mean << ',' << r.std_error << ',' << r.bound << ','
            << r.curve << '\n';
}

} // namespace hamcube
