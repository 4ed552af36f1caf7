#include "hamcube/prng.hpp"

#include <stdexcept>
#include <string>

namespace hamcube {

WalkVariant walk_variant_from_string(const std::string& name) {
    if (name == "plain") return WalkVariant::Plain;
    if (name == "gated") return WalkVariant::Gated;
    throw std::invalid_argument("unknown walk variant: " + name);
}

const char* to_string(WalkVariant v) {
    return v == WalkVariant::Plain ? "plain" : "gated";
}

Generator::Generator(BooleanMap f, int b, Word x0, WalkVariant variant,
                     std::unique_ptr<RandomSource> source)
    : f_(std::move(f)), b_(b), x_(x0), variant_(variant), source_(std::move(source)) {
    if (b_ < 1) throw std::invalid_argument("Generator: walk length must be positive");
    if (x_ >= f_.n_states()) throw std::invalid_argument("Generator: start out of range");
    if (!source_) throw std::invalid_argument("Generator: null random source");
}

Generator::Generator(BooleanMap f, int b, Word x0, WalkVariant variant, std::uint64_t seed)
    : Generator(std::move(f), b, x0, variant, std::make_unique<XorShiftSource>(seed)) {}

Word Generator::next() {
    const int n = f_.n_bits();
    if (variant_ == WalkVariant::Plain) {
        for (int pass = 0; pass < b_; ++pass)
            x_ = apply_component(f_, x_, source_->uniform_index(n));
    } else {
        for (int pass = 0; pass < b_; ++pass)
            if (source_->uniform_bit() != 0)
                x_ = apply_component(f_, x_, source_->uniform_index(n));
    }
    return x_;
}

std::vector<std::uint8_t> Generator::bits(std::size_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(count);
    const int n = f_.n_bits();
    while (out.size() < count) {
        const Word w = next();
        for (int i = 0; i < n && out.size() < count; ++i)
            out.push_back(static_cast<std::uint8_t>((w >> (n - 1 - i)) & 1));
    }
    return out;
}

} // namespace hamcube
