#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hamcube {

// Seedable source of the two primitive draws used across the toolkit.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    // Uniform integer in [1, n].
    virtual int uniform_index(int n) = 0;

    // Fair bit in {0, 1}.
    virtual int uniform_bit() = 0;
};

// xorshift64* stream. The state advances with 12/25/27 xor-shifts and the
// output word is state * 0x2545F4914F6CDD1D. Seeds run through a splitmix64
// finalizer so that every 64-bit value, including 0, is a usable seed.
// uniform_index rejects out-of-range words, so draws are exactly uniform.
class XorShiftSource final : public RandomSource {
public:
    explicit XorShiftSource(std::uint64_t seed);

    int uniform_index(int n) override;
    int uniform_bit() override;
    std::uint64_t next_word();

private:
    std::uint64_t state_;
};

// Independent child seed derived from a master seed by index. Used to keep
// batch runs reproducible regardless of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Replays a fixed list of draws in order; uniform_index and uniform_bit both
// pop the next entry. Throws std::out_of_range when the script runs dry.
class ScriptedSource final : public RandomSource {
public:
    explicit ScriptedSource(std::vector<int> draws);

    int uniform_index(int n) override;
    int uniform_bit() override;
    std::size_t consumed() const { return pos_; }

private:
    std::vector<int> draws_;
    std::size_t pos_ = 0;
};

} // namespace hamcube
