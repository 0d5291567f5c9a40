#pragma once

// Published counts of cyclic self-orthogonal and self-dual codes over Z_8 for
// odd n <= 99, transcribed verbatim (including its misprints). Used only as a
// comparison fixture by `table --diff-paper`.

#include <array>
#include <cstdint>

namespace zpm::detail {

struct PublishedRow {
    std::uint64_t n;
    std::uint64_t gamma;
    std::uint64_t delta;
    std::uint64_t trivial;
    std::uint64_t nontrivial;
    std::uint64_t self_dual;
};

inline constexpr std::uint64_t published_p = 2;
inline constexpr unsigned published_m = 3;

inline constexpr std::array<PublishedRow, 50> published_table{{
    {1, 1, 0, 2, 0, 1},
    {3, 2, 0, 4, 0, 1},
    {5, 2, 0, 4, 0, 1},
    {7, 1, 1, 8, 12, 4},
    {9, 3, 0, 8, 0, 1},
    {11, 2, 0, 4, 0, 1},
    {13, 2, 0, 4, 0, 1},
    {15, 3, 1, 32, 48, 4},
    {17, 3, 0, 8, 0, 1},
    {19, 2, 0, 4, 0, 1},
    {21, 2, 2, 64, 336, 16},
    {23, 1, 1, 8, 12, 4},
    {25, 3, 0, 8, 0, 1},
    {27, 2, 0, 16, 0, 1},
    {29, 2, 0, 4, 0, 1},
    {31, 1, 3, 128, 1872, 64},
    {33, 5, 0, 32, 0, 1},
    {35, 2, 2, 64, 336, 16},
    {37, 2, 0, 4, 0, 1},
    {39, 3, 1, 32, 48, 4},
    {41, 3, 0, 8, 0, 1},
    {43, 4, 0, 16, 0, 1},
    {45, 4, 2, 256, 1344, 16},
    {47, 1, 1, 8, 12, 4},
    {49, 1, 2, 32, 168, 16},
    {51, 4, 2, 256, 1344, 16},
    {53, 2, 0, 4, 0, 1},
    {55, 3, 1, 32, 48, 4},
    {57, 5, 0, 32, 0, 1},
    {59, 2, 0, 4, 0, 1},
    {61, 2, 0, 4, 0, 1},
    {63, 3, 5, 8192, 791808, 1024},
    {65, 7, 0, 128, 0, 1},
    {67, 2, 0, 4, 0, 1},
    {69, 2, 2, 64, 336, 16},
    {71, 1, 1, 8, 12, 4},
    {73, 1, 4, 512, 19488, 256},
    {75, 4, 2, 256, 1344, 16},
    {77, 2, 2, 64, 336, 16},
    {79, 1, 1, 8, 12, 4},
    {81, 5, 0, 32, 0, 1},
    {83, 2, 0, 4, 0, 1},
    {85, 4, 4, 4096, 155904, 256},
    {87, 3, 1, 32, 48, 4},
    {89, 1, 4, 512, 19488, 256},
    {91, 2, 4, 1024, 38976, 256},
    {93, 2, 6, 16384, 170240, 729},
    {95, 3, 1, 32, 48, 4},
    {97, 3, 0, 8, 0, 1},
    {99, 8, 0, 256, 0, 1},
}};

} // namespace zpm::detail
