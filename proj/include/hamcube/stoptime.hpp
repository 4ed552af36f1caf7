#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hamcube/ncube.hpp"
#include "hamcube/random.hpp"

namespace hamcube {

struct StopTrial {
    std::int64_t steps = 0;
    std::uint64_t seed = 0;
    Word start = 0;
};

struct StopSummary {
    int n_bits = 0;
    int trials = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double bound = 0.0;
    double curve = 0.0;
};

// 8n^2 + 4n ln(n+1), the proven ceiling on the expected stopping time.
double stopping_time_bound(int n);

// 2n ln(2n+8), the curve the measured averages track.
double conjecture_curve(int n);

// Runs the fair-bit walk until every component has been drawn at a moment it
// was switchable: per pass, draw a component s and a coin; when the coin is
// 1 and component s of f(x) differs from x, mark s fair and update that
// component. Returns the number of passes. Deterministic given the seed.
StopTrial simulate_stopping_time(const BooleanMap& f, Word x0, std::uint64_t seed);
StopTrial simulate_stopping_time(const BooleanMap& f, Word x0, RandomSource& src,
                                 std::uint64_t seed_label = 0);

// Mean and standard error over independent trials; starts are drawn
// uniformly from each trial's own derived-seed source. threads > 1 splits
// the trial range; per-trial seeds keep the result identical either way.
StopSummary estimate_stopping_time(const BooleanMap& f, int trials, std::uint64_t seed,
                                   int threads = 1);

void write_summaries_csv(std::ostream& out, std::span<const StopSummary> rows);

} // namespace hamcube
