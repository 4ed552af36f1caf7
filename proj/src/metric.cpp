#include "hamcube/metric.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hamcube {

namespace {

int digit_width(int value) {
    int width = 1;
    while (value >= 10) {
        value /= 10;
        ++width;
    }
    return width;
}

void append_padded(std::string& out, int value, int width) {
    const std::string s = std::to_string(value);
    out.append(static_cast<std::size_t>(width) - s.size(), '0');
    out += s;
}

} // namespace

void validate(const ExtendedPoint& x) {
    if (x.n_bits < 1 || x.n_bits > 24) throw std::invalid_argument("ExtendedPoint: n_bits out of range");
    if (x.e >= (Word{1} << x.n_bits)) throw std::invalid_argument("ExtendedPoint: configuration out of range");
    if (x.p_set.empty() || !std::is_sorted(x.p_set.begin(), x.p_set.end()) || x.p_set.front() < 1)
        throw std::invalid_argument("ExtendedPoint: allowed counts must be sorted positive integers");
    for (int c : x.u)
        if (c < 1 || c > x.n_bits) throw std::invalid_argument("ExtendedPoint: strategy entry out of range");
    for (int c : x.v)
        if (!std::binary_search(x.p_set.begin(), x.p_set.end(), c))
            throw std::invalid_argument("ExtendedPoint: count entry not in the allowed set");
}

ExtendedPoint shift_sigma(const ExtendedPoint& x) {
    validate(x);
    if (x.v.empty()) throw std::out_of_range("shift_sigma: count prefix exhausted");
    const std::size_t drop = static_cast<std::size_t>(x.v.front());
    if (x.u.size() < drop) throw std::out_of_range("shift_sigma: strategy prefix too short");
    ExtendedPoint out = x;
    out.u.erase(out.u.begin(), out.u.begin() + static_cast<std::ptrdiff_t>(drop));
    out.v.erase(out.v.begin());
    return out;
}

ExtendedPoint gf_step(const BooleanMap& f, const ExtendedPoint& x) {
    validate(x);
    if (f.n_bits() != x.n_bits) throw std::invalid_argument("gf_step: bit-width mismatch");
    if (x.v.empty()) throw std::out_of_range("gf_step: count prefix exhausted");
    const std::size_t take = static_cast<std::size_t>(x.v.front());
    if (x.u.size() < take) throw std::out_of_range("gf_step: strategy prefix too short");
    ExtendedPoint out = shift_sigma(x);
    out.e = compose(f, x.e, std::span<const int>(x.u.data(), take));
    return out;
}

std::string DigitDistance::to_string(bool spaced) const {
    std::string out = std::to_string(integral);
    out += '.';
    if (!spaced) {
        out += digits;
        return out;
    }
    const int chunk = n_digits * max_p;
    std::size_t pos = 0;
    for (int k = 0; k < blocks; ++k) {
        if (k > 0) out += ' ';
        out.append(digits, pos, static_cast<std::size_t>(p_digits));
        pos += static_cast<std::size_t>(p_digits);
        out += ' ';
        out.append(digits, pos, static_cast<std::size_t>(chunk));
        pos += static_cast<std::size_t>(chunk);
    }
    return out;
}

DigitDistance distance(const ExtendedPoint& x, const ExtendedPoint& y, int depth) {
    validate(x);
    validate(y);
    if (x.n_bits != y.n_bits || x.p_set != y.p_set)
        throw std::invalid_argument("distance: points live in different spaces");
    if (depth < 0) throw std::invalid_argument("distance: depth must be non-negative");
    if (x.v.size() < static_cast<std::size_t>(depth) || y.v.size() < static_cast<std::size_t>(depth))
        throw std::out_of_range("distance: count prefixes shorter than the requested depth");

    DigitDistance d;
    d.integral = std::popcount(x.e ^ y.e);
    d.max_p = x.p_set.back();
    d.p_digits = digit_width(d.max_p);
    d.n_digits = digit_width(x.n_bits);
    d.blocks = depth;

    std::size_t off_x = 0, off_y = 0;
    for (int k = 0; k < depth; ++k) {
        const std::size_t vx = static_cast<std::size_t>(x.v[k]);
        const std::size_t vy = static_cast<std::size_t>(y.v[k]);
        if (x.u.size() < off_x + vx || y.u.size() < off_y + vy)
            throw std::out_of_range("distance: strategy prefixes shorter than the requested depth");

        append_padded(d.digits, std::abs(x.v[k] - y.v[k]), d.p_digits);

        const std::size_t common = std::min(vx, vy);
        std::size_t written = 0;
        for (std::size_t j = 0; j < common; ++j, ++written)
            append_padded(d.digits, std::abs(x.u[off_x + j] - y.u[off_y + j]), d.n_digits);
        for (std::size_t j = common; j < vx; ++j, ++written)
            append_padded(d.digits, x.u[off_x + j], d.n_digits);
        for (std::size_t j = common; j < vy; ++j, ++written)
            append_padded(d.digits, y.u[off_y + j], d.n_digits);
        d.digits.append(static_cast<std::size_t>(d.n_digits) *
                            (static_cast<std::size_t>(d.max_p) - written),
                        '0');

        off_x += vx;
        off_y += vy;
    }
    return d;
}

} // namespace hamcube
