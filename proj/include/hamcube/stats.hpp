#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hamcube/ncube.hpp"

namespace hamcube {

struct TestReport {
    std::string name;
    double statistic = 0.0;
    double p_value = 0.0;
    double threshold = 1e-4;
    bool pass = false;
};

// Frequency test: |#ones - #zeros| / sqrt(n) against the half-normal tail.
// Needs at least 100 bits.
TestReport monobit_test(std::span<const std::uint8_t> bits, double threshold = 1e-4);

// Runs test: total number of maximal constant runs against its expectation
// under independence. Needs at least 100 bits.
TestReport runs_test(std::span<const std::uint8_t> bits, double threshold = 1e-4);

// Chi-square goodness of fit of configuration samples against the uniform
// distribution on 2^n cells. Needs at least 10 * 2^n samples.
TestReport chi_square_uniformity(std::span<const Word> samples, int n_bits,
                                 double threshold = 1e-4);

// Upper tail of the chi-square distribution with dof degrees of freedom.
double chi_square_tail(double statistic, int dof);

enum class BitFormat { Ascii, Packed };

BitFormat bit_format_from_string(const std::string& name);
const char* to_string(BitFormat f);

// Ascii: one '0'/'1' character per bit plus a trailing newline. Packed: bits
// packed most significant first into bytes, the last byte zero-padded.
// Returns the number of bytes written.
std::size_t export_bits(std::span<const std::uint8_t> bits, BitFormat format,
                        const std::filesystem::path& destination);

// Reads bits back; bit_count trims packed padding (pass SIZE_MAX for all).
std::vector<std::uint8_t> import_bits(const std::filesystem::path& source, BitFormat format,
                                      std::size_t bit_count = SIZE_MAX);

} // namespace hamcube
