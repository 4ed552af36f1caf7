#include "hamcube/random.hpp"

#include <limits>
#include <stdexcept>

namespace hamcube {

namespace {

std::uint64_t splitmix_finalize(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

XorShiftSource::XorShiftSource(std::uint64_t seed) : state_(splitmix_finalize(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL; // xorshift state must be nonzero
}

std::uint64_t XorShiftSource::next_word() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

int XorShiftSource::uniform_index(int n) {
    if (n < 1) throw std::invalid_argument("uniform_index: n must be positive");
    const auto un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() / un * un;
    std::uint64_t r;
    do {
        r = next_word();
    } while (r >= bound);
    return static_cast<int>(r % un) + 1;
}

int XorShiftSource::uniform_bit() {
    return static_cast<int>(next_word() >> 63);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix_finalize(master ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

ScriptedSource::ScriptedSource(std::vector<int> draws) : draws_(std::move(draws)) {}

int ScriptedSource::uniform_index(int n) {
    if (pos_ >= draws_.size()) throw std::out_of_range("ScriptedSource: script exhausted");
    const int v = draws_[pos_++];
    if (v < 1 || v > n) throw std::out_of_range("ScriptedSource: scripted index out of range");
    return v;
}

int ScriptedSource::uniform_bit() {
    if (pos_ >= draws_.size()) throw std::out_of_range("ScriptedSource: script exhausted");
    const int v = draws_[pos_++];
    if (v != 0 && v != 1) throw std::out_of_range("ScriptedSource: scripted bit not 0/1");
    return v;
}

} // namespace hamcube
