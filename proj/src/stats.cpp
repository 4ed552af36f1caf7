#include "hamcube/stats.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace hamcube {

namespace {

// Regularized upper incomplete gamma Q(a, x), series for x < a+1 and
// continued fraction otherwise.
double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int k = 0; k < 1000; ++k) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        const double p = sum * std::exp(-x + a * std::log(x) - lg);
        return 1.0 - p;
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k < 1000; ++k) {
        const double an = -k * (k - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - lg) * h;
}

void require_bits(std::span<const std::uint8_t> bits) {
    if (bits.size() < 100) throw std::invalid_argument("bit test: need at least 100 bits");
    for (std::uint8_t b : bits)
        if (b > 1) throw std::invalid_argument("bit test: entries must be 0 or 1");
}

} // namespace

double chi_square_tail(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi_square_tail: dof must be positive");
    if (statistic <= 0.0) return 1.0;
    return gamma_q(dof / 2.0, statistic / 2.0);
}

TestReport monobit_test(std::span<const std::uint8_t> bits, double threshold) {
    require_bits(bits);
    std::int64_t sum = 0;
    for (std::uint8_t b : bits) sum += b ? 1 : -1;
    const double s_obs = std::abs(static_cast<double>(sum)) / std::sqrt(static_cast<double>(bits.size()));
    TestReport report{"monobit", s_obs, std::erfc(s_obs / std::sqrt(2.0)), threshold, false};
    report.pass = report.p_value >= threshold;
    return report;
}

TestReport runs_test(std::span<const std::uint8_t> bits, double threshold) {
    require_bits(bits);
    const double n = static_cast<double>(bits.size());
    double ones = 0.0;
    for (std::uint8_t b : bits) ones += b;
    const double pi = ones / n;

    TestReport report{"runs", 0.0, 0.0, threshold, false};
    if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
        // frequency precondition failed; the runs statistic is meaningless
        report.p_value = 0.0;
        return report;
    }
    double v = 1.0;
    for (std::size_t k = 1; k < bits.size(); ++k)
        if (bits[k] != bits[k - 1]) v += 1.0;
    const double expected = 2.0 * n * pi * (1.0 - pi);
    report.statistic = v;
    report.p_value = std::erfc(std::abs(v - expected) / (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
    report.pass = report.p_value >= threshold;
    return report;
}

TestReport chi_square_uniformity(std::span<const Word> samples, int n_bits, double threshold) {
    if (n_bits < 1 || n_bits > 24) throw std::invalid_argument("chi_square_uniformity: n_bits out of range");
    const std::size_t cells = std::size_t{1} << n_bits;
    if (samples.size() < 10 * cells)
        throw std::invalid_argument("chi_square_uniformity: need at least 10 * 2^n samples");
    std::vector<std::int64_t> counts(cells, 0);
    for (Word s : samples) {
        if (s >= cells) throw std::invalid_argument("chi_square_uniformity: sample out of range");
        ++counts[s];
    }
    const double expected = static_cast<double>(samples.size()) / static_cast<double>(cells);
    double stat = 0.0;
    for (std::int64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    TestReport report{"chi_square_uniformity", stat,
                      chi_square_tail(stat, static_cast<int>(cells) - 1), threshold, false};
    report.pass = report.p_value >= threshold;
    return report;
}

BitFormat bit_format_from_string(const std::string& name) {
    if (name == "ascii") return BitFormat::Ascii;
    if (name == "packed") return BitFormat::Packed;
    throw std::invalid_argument("unknown bit format: " + name);
}

const char* to_string(BitFormat f) { return f == BitFormat::Ascii ? "ascii" : "packed"; }

std::size_t export_bits(std::span<const std::uint8_t> bits, BitFormat format,
                        const std::filesystem::path& destination) {
    std::ofstream out(destination, std::ios::binary);
    if (!out) throw std::runtime_error("export_bits: cannot open " + destination.string());
    std::size_t written = 0;
    if (format == BitFormat::Ascii) {
        std::string line;
        line.reserve(bits.size() + 1);
        for (std::uint8_t b : bits) line += b ? '1' : '0';
        line += '\n';
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
        written = line.size();
    } else {
        std::vector<char> bytes((bits.size() + 7) / 8, 0);
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (bits[k]) bytes[k / 8] |= static_cast<char>(0x80u >> (k % 8));
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        written = bytes.size();
    }
    if (!out) throw std::runtime_error("export_bits: write failed for " + destination.string());
    return written;
}

std::vector<std::uint8_t> import_bits(const std::filesystem::path& source, BitFormat format,
                                      std::size_t bit_count) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("import_bits: cannot open " + source.string());
    std::vector<std::uint8_t> bits;
    if (format == BitFormat::Ascii) {
        for (char c; in.get(c);) {
            if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
            else if (c != '\n' && c != '\r' && c != ' ')
                throw std::runtime_error("import_bits: unexpected character");
        }
    } else {
        for (char byte; in.get(byte);)
            for (int k = 7; k >= 0; --k)
                bits.push_back(static_cast<std::uint8_t>((static_cast<unsigned char>(byte) >> k) & 1));
    }
    if (bit_count != SIZE_MAX && bits.size() > bit_count) bits.resize(bit_count);
    return bits;
}

} // namespace hamcube
