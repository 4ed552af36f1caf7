#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "hamcube/ncube.hpp"

namespace hamcube {

// Exact transition matrix over the 2^n configurations: integer numerators
// over one common denominator. Row index is the integer encoding of the
// configuration.
struct StochasticMatrix {
    int n_bits = 0;
    std::int64_t denom = 1;
    std::vector<std::int64_t> num; // row-major, 2^n x 2^n

    std::size_t n_states() const { return std::size_t{1} << n_bits; }
    std::int64_t at(std::size_t row, std::size_t col) const { return num[row * n_states() + col]; }
    std::int64_t& at(std::size_t row, std::size_t col) { return num[row * n_states() + col]; }

    std::vector<double> to_doubles() const;
};

// Entry (x, y) = #{components i with F_f(x, i) = y} / n.
StochasticMatrix uniform_walk_matrix(const BooleanMap& f);

// The lazy walk on the cube with the removed direction blocked: diagonal
// 1/2 + 1/(2n), each of the n-1 permitted neighbor directions 1/(2n).
// Requires h.
StochasticMatrix lazy_walk_matrix(const BooleanMap& f);

// Every row and every column sums to exactly 1, in integer arithmetic.
bool is_doubly_stochastic(const StochasticMatrix& m);

// Half the L1 distance between two distributions.
double tv_distance(std::span<const double> p, std::span<const double> q);

// d(t): worst-case total-variation distance between a t-step row and the
// uniform distribution.
double distance_to_uniform(const StochasticMatrix& m, int t);

// Smallest t with d(t) <= eps, by doubling and binary search on cached
// double-precision matrix powers. eps must lie in (0, 1).
int mixing_time(const StochasticMatrix& m, double eps);

// Smallest t whose worst row deviates from uniform by at most eps in
// Euclidean norm. This is the walk-length figure the analysis reports
// alongside the total-variation mixing time.
int practical_mixing_time(const StochasticMatrix& m, double eps);

struct MixingReport {
    std::vector<std::pair<int, double>> d_series;        // (t, d(t))
    std::vector<std::pair<double, int>> t_mix;           // (eps, t)
    int practical_b = 0;                                 // Euclidean criterion at 1e-6
};

MixingReport analyze_mixing(const StochasticMatrix& m,
                            std::span<const double> eps_list,
                            int series_length = 0);

void write_d_series_csv(std::ostream& out, const MixingReport& report);

// Double-precision powers of a stochastic matrix, cached by squaring.
class PowerCache {
public:
    explicit PowerCache(const StochasticMatrix& m);

    // P^t as a dense row-major matrix; t >= 0.
    std::vector<double> power(int t);
    std::size_t size() const { return size_; }

private:
    std::size_t size_;
    std::vector<std::vector<double>> squares_; // squares_[k] = P^(2^k)

    const std::vector<double>& square(std::size_t k);
};

} // namespace hamcube
