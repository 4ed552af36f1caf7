#include "hamcube/markov.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hamcube {

namespace {

std::vector<double> multiply(std::size_t n, const std::vector<double>& a,
                             const std::vector<double>& b) {
    std::vector<double> c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = &a[i * n];
        double* crow = &c[i * n];
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = &b[k * n];
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

double max_row_tv_to_uniform(std::size_t n, const std::vector<double>& m) {
    const double u = 1.0 / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += std::abs(m[i * n + j] - u);
        worst = std::max(worst, 0.5 * sum);
    }
    return worst;
}

double max_row_euclid_to_uniform(std::size_t n, const std::vector<double>& m) {
    const double u = 1.0 / static_cast<double>(n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = m[i * n + j] - u;
            sum += d * d;
        }
        worst = std::max(worst, sum);
    }
    return std::sqrt(worst);
}

// Smallest t with deviation(P^t) <= eps; the deviation is non-increasing in t.
template <typename Deviation>
int search_first_below(PowerCache& cache, double eps, Deviation deviation) {
    const std::size_t n = cache.size();
    if (deviation(n, cache.power(0)) <= eps) return 0;
    int hi = 1;
    while (deviation(n, cache.power(hi)) > eps) {
        if (hi > (1 << 24)) throw std::runtime_error("mixing search did not converge");
        hi *= 2;
    }
    int lo = hi / 2; // deviation(lo) > eps or lo == 0
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (deviation(n, cache.power(mid)) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace

std::vector<double> StochasticMatrix::to_doubles() const {
    std::vector<double> out(num.size());
    const double d = static_cast<double>(denom);
    for (std::size_t k = 0; k < num.size(); ++k) out[k] = static_cast<double>(num[k]) / d;
    return out;
}

StochasticMatrix uniform_walk_matrix(const BooleanMap& f) {
    StochasticMatrix m;
    m.n_bits = f.n_bits();
    m.denom = f.n_bits();
    m.num.assign(f.n_states() * f.n_states(), 0);
    for (Word x = 0; x < f.n_states(); ++x)
        for (int i = 1; i <= f.n_bits(); ++i) ++m.at(x, apply_component(f, x, i));
    return m;
}

StochasticMatrix lazy_walk_matrix(const BooleanMap& f) {
    if (!f.has_h()) throw std::logic_error("lazy_walk_matrix: h is absent");
    const int n = f.n_bits();
    StochasticMatrix m;
    m.n_bits = n;
    m.denom = 2 * n;
    m.num.assign(f.n_states() * f.n_states(), 0);
    for (Word x = 0; x < f.n_states(); ++x) {
        m.at(x, x) = n + 1; // 1/2 + 1/(2n)
        for (int i = 1; i <= n; ++i) {
            if (i == f.h(x)) continue;
            m.at(x, x ^ component_mask(n, i)) = 1;
        }
    }
    return m;
}

bool is_doubly_stochastic(const StochasticMatrix& m) {
    const std::size_t n = m.n_states();
    std::vector<std::int64_t> col(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        std::int64_t row = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const std::int64_t v = m.at(r, c);
            if (v < 0) return false;
            row += v;
            col[c] += v;
        }
        if (row != m.denom) return false;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (col[c] != m.denom) return false;
    return true;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: dimension mismatch");
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) sum += std::abs(p[k] - q[k]);
    return 0.5 * sum;
}

PowerCache::PowerCache(const StochasticMatrix& m) : size_(m.n_states()) {
    squares_.push_back(m.to_doubles());
}

const std::vector<double>& PowerCache::square(std::size_t k) {
    while (squares_.size() <= k)
        squares_.push_back(multiply(size_, squares_.back(), squares_.back()));
    return squares_[k];
}

std::vector<double> PowerCache::power(int t) {
    if (t < 0) throw std::invalid_argument("PowerCache: negative exponent");
    std::vector<double> result;
    std::size_t bit = 0;
    for (unsigned rest = static_cast<unsigned>(t); rest != 0; rest >>= 1, ++bit) {
        if (rest & 1u) {
            const auto& sq = square(bit);
            result = result.empty() ? sq : multiply(size_, result, sq);
        }
    }
    if (result.empty()) { // t == 0
        result.assign(size_ * size_, 0.0);
        for (std::size_t i = 0; i < size_; ++i) result[i * size_ + i] = 1.0;
    }
    return result;
}

double distance_to_uniform(const StochasticMatrix& m, int t) {
    if (t < 0) throw std::invalid_argument("distance_to_uniform: t must be non-negative");
    PowerCache cache(m);
    return max_row_tv_to_uniform(m.n_states(), cache.power(t));
}

int mixing_time(const StochasticMatrix& m, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("mixing_time: eps must be in (0, 1)");
    PowerCache cache(m);
    return search_first_below(cache, eps, max_row_tv_to_uniform);
}

int practical_mixing_time(const StochasticMatrix& m, double eps) {
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("practical_mixing_time: eps must be in (0, 1)");
    PowerCache cache(m);
    return search_first_below(cache, eps, max_row_euclid_to_uniform);
}

MixingReport analyze_mixing(const StochasticMatrix& m,
                            std::span<const double> eps_list,
                            int series_length) {
    MixingReport report;
    PowerCache cache(m);
    for (double eps : eps_list)
        report.t_mix.emplace_back(eps, search_first_below(cache, eps, max_row_tv_to_uniform));
    report.practical_b = search_first_below(cache, 1e-6, max_row_euclid_to_uniform);
    if (series_length <= 0)
        series_length = report.practical_b;
    std::vector<double> pt = cache.power(1);
    const auto& step = cache.power(1);
    for (int t = 1; t <= series_length; ++t) {
        report.d_series.emplace_back(t, max_row_tv_to_uniform(m.n_states(), pt));
        if (t < series_length) pt = multiply(m.n_states(), pt, step);
    }
    return report;
}

void write_d_series_csv(std::ostream& out, const MixingReport& report) {
    out << "t,d\n";
    for (const auto& [t, d] : report.d_series) out << t << ',' << d << '\n';
}

} // namespace hamcube
