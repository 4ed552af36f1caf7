#include "hamcube/fixtures.hpp"

#include <stdexcept>

namespace hamcube {

const std::array<Fixture, 5>& all_fixtures() {
    static const std::array<Fixture, 5> fixtures = {{
    Fixture{'a',
             4,
             64,
             {
                 13, 10, 9, 14, 3, 11, 1, 12, 15, 4, 7, 5, 2, 6, 0, 8
             }},
    Fixture{'b',
             5,
             78,
             {
                 29, 22, 25, 30, 19, 27, 24, 16, 21, 6, 5, 28, 23, 26, 1, 17, 31, 12, 15, 8,
                 10, 14, 13, 9, 3, 2, 7, 20, 11, 18, 0, 4
             }},
    Fixture{'c',
             6,
             88,
             {
                 55, 60, 45, 44, 58, 62, 61, 48, 53, 50, 52, 36, 59, 34, 33, 49, 15, 42, 47,
                 46, 35, 10, 57, 56, 7, 54, 39, 37, 51, 2, 1, 40, 63, 26, 25, 30, 19, 27, 17,
                 28, 31, 20, 23, 21, 18, 22, 16, 24, 13, 12, 29, 8, 43, 14, 41, 0, 5, 38, 4, 6,
                 11, 3, 9, 32
             }},
    Fixture{'d',
             7,
             99,
             {
                 111, 124, 93, 120, 122, 114, 89, 121, 87, 126, 125, 84, 123, 82, 112, 80, 79,
                 106, 105, 110, 75, 107, 73, 108, 119, 100, 117, 116, 103, 102, 101, 97, 31,
                 86, 95, 94, 83, 26, 88, 24, 71, 118, 69, 68, 115, 90, 113, 16, 15, 76, 109,
                 72, 74, 10, 9, 104, 7, 6, 65, 70, 99, 98, 64, 96, 127, 54, 53, 62, 51, 59, 56,
                 60, 39, 52, 37, 36, 55, 58, 57, 49, 63, 44, 47, 40, 42, 46, 45, 41, 35, 34,
                 33, 38, 43, 50, 32, 48, 29, 28, 61, 92, 91, 18, 17, 25, 19, 30, 85, 22, 27, 2,
                 81, 0, 13, 78, 77, 14, 3, 11, 8, 12, 23, 4, 21, 20, 67, 66, 5, 1
             }},
    Fixture{'e',
             8,
             109,
             {
                 223, 238, 249, 254, 243, 251, 233, 252, 183, 244, 229, 245, 227, 246, 240,
                 176, 175, 174, 253, 204, 203, 170, 169, 248, 247, 226, 228, 164, 163, 162,
                 161, 192, 215, 220, 205, 216, 155, 222, 221, 208, 213, 150, 212, 214, 219,
                 211, 145, 209, 239, 202, 207, 140, 195, 234, 193, 136, 231, 230, 199, 197,
                 131, 198, 225, 200, 63, 188, 173, 184, 186, 250, 57, 168, 191, 178, 180, 52,
                 187, 242, 241, 48, 143, 46, 237, 236, 235, 138, 185, 232, 135, 38, 181, 165,
                 35, 166, 33, 224, 31, 30, 153, 158, 147, 218, 217, 156, 159, 148, 151, 149,
                 19, 210, 144, 152, 141, 206, 13, 12, 171, 10, 201, 128, 133, 130, 132, 196, 3,
                 194, 137, 0, 255, 124, 109, 120, 122, 106, 125, 104, 103, 114, 116, 118, 123,
                 98, 97, 113, 79, 126, 111, 110, 99, 74, 121, 72, 71, 70, 117, 101, 115, 102,
                 65, 112, 127, 90, 89, 94, 83, 91, 81, 92, 95, 84, 87, 85, 82, 86, 80, 88, 77,
                 76, 93, 108, 107, 78, 105, 64, 69, 66, 68, 100, 75, 67, 73, 96, 55, 190, 189,
                 62, 51, 59, 41, 60, 119, 182, 37, 53, 179, 54, 177, 32, 45, 44, 61, 172, 11,
                 58, 9, 56, 167, 34, 36, 4, 43, 50, 49, 160, 23, 28, 157, 24, 26, 154, 29, 16,
                 21, 18, 20, 22, 27, 146, 25, 17, 47, 142, 15, 14, 139, 42, 1, 40, 39, 134, 7,
                 5, 2, 6, 129, 8
             }},
}};
    return fixtures;
}

const Fixture& fixture(char tag) {
    for (const auto& f : all_fixtures())
        if (f.tag == tag) return f;
    throw std::invalid_argument(std::string("unknown fixture: ") + tag);
}

BooleanMap fixture_map(char tag) {
    const Fixture& f = fixture(tag);
    return BooleanMap::with_derived_h(f.n_bits, f.images);
}

} // namespace hamcube
