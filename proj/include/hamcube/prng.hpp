#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hamcube/ncube.hpp"
#include "hamcube/random.hpp"

namespace hamcube {

// Plain: every pass draws a component and applies it (b applications per
// output). Gated: every pass first draws a coin and applies a drawn
// component only when the coin is 1, so each pass applies with probability
// one half; b counts passes either way.
enum class WalkVariant { Plain, Gated };

WalkVariant walk_variant_from_string(const std::string& name);
const char* to_string(WalkVariant v);

// Streaming generator: a walk of fixed length b through the iteration graph
// per output, with the configuration carried across outputs. Fully
// determined by (map, b, x0, variant, seed or source).
class Generator {
public:
    Generator(BooleanMap f, int b, Word x0, WalkVariant variant, std::uint64_t seed);
    Generator(BooleanMap f, int b, Word x0, WalkVariant variant,
              std::unique_ptr<RandomSource> source);

    // Runs one walk of b passes and returns (and retains) the configuration.
    Word next();

    // The next `count` output bits, one byte per bit, each output's n bits
    // emitted most significant first.
    std::vector<std::uint8_t> bits(std::size_t count);

    int n_bits() const { return f_.n_bits(); }
    int walk_length() const { return b_; }
    Word state() const { return x_; }

private:
    BooleanMap f_;
    int b_;
    Word x_;
    WalkVariant variant_;
    std::unique_ptr<RandomSource> source_;
};

} // namespace hamcube
