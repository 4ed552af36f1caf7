#pragma once

#include <string>
#include <vector>

#include "hamcube/ncube.hpp"

namespace hamcube {

// A point of the iteration space: a configuration plus finite prefixes of
// the strategy sequence u (component indices) and the iteration-count
// sequence v (values from the allowed set P). Operations consume the
// prefixes explicitly and refuse to run past them.
struct ExtendedPoint {
    int n_bits = 0;
    Word e = 0;
    std::vector<int> u;
    std::vector<int> v;
    std::vector<int> p_set; // sorted allowed counts
};

void validate(const ExtendedPoint& x);

// Drops v[0] leading strategy entries and one leading count.
ExtendedPoint shift_sigma(const ExtendedPoint& x);

// Applies the first v[0] strategy entries to the configuration, then shifts.
ExtendedPoint gf_step(const BooleanMap& f, const ExtendedPoint& x);

// Distance between two points, kept as exact decimal digits. The integral
// part is the Hamming distance of the configurations. The fraction is built
// per block k: p digits of |v^k - v'^k| followed by n*max(P) digits
// comparing the k-th strategy chunks term by term (absolute differences over
// the common length, then the longer side's raw entries, zero-padded), where
// p and n are the digit widths of max(P) and the bit count.
struct DigitDistance {
    int integral = 0;
    std::string digits;
    int p_digits = 0;
    int n_digits = 0;
    int max_p = 0;
    int blocks = 0;

    int block_width() const { return p_digits + n_digits * max_p; }

    // "1.01 0004000000000000000000 01 1005..." with one space between fields;
    // unspaced variant concatenates the digits after the point.
    std::string to_string(bool spaced = true) const;
};

DigitDistance distance(const ExtendedPoint& x, const ExtendedPoint& y, int depth);

} // namespace hamcube
