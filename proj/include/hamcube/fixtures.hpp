#pragma once

#include <array>

#include "hamcube/ncube.hpp"

namespace hamcube {

// Reference maps a..e: one per bit width 4..8, each the published function
// with the smallest practical mixing time for its width, shipped with that
// walk length.
struct Fixture {
    char tag;
    int n_bits;
    int practical_b;
    std::vector<Word> images;
};

const std::array<Fixture, 5>& all_fixtures();
const Fixture& fixture(char tag); // throws std::invalid_argument for unknown tags

// The fixture as a BooleanMap with the per-vertex blocked direction derived
// from the table.
BooleanMap fixture_map(char tag);

} // namespace hamcube
