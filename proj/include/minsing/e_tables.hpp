#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace minsing::tables {

// One row of the non-integrable E-type tables. Coordinates are doubled
// (1 means 1/2) in the R^8 realization.
struct ERow {
  int p;
  int d_p;
  int count;
  std::array<std::array<std::int8_t, 8>, 2> weights;
};

inline constexpr std::array<ERow, 10> kE6{{
    {2, 12, 1, {{{0, 0, 2, 2, 2, -2, -2, 2}}}},
    {3, 4, 1, {{{1, 1, 1, 1, 1, -1, -1, 1}}}},
    {4, 12, 1, {{{2, 2, 2, 2, 4, -4, -4, 4}}}},
    {5, 6, 2, {{{0, 0, 0, 0, 0, -4, -4, 4}, {0, 0, 0, 0, 6, -2, -2, 2}}}},
    {6, 3, 1, {{{0, 0, 0, 0, 2, -2, -2, 2}}}},
    {7, 8, 1, {{{1, 1, 1, 1, 5, -5, -5, 5}}}},
    {8, 3, 1, {{{0, 0, 0, 0, 2, -2, -2, 2}}}},
    {9, 2, 1, {{{0, 0, 0, 0, 2, -2, -2, 2}}}},
    {10, 4, 1, {{{0, 0, 0, 0, 4, -4, -4, 4}}}},
    {11, 6, 1, {{{0, 0, 0, 0, 6, -6, -6, 6}}}},
}};

inline constexpr std::array<ERow, 16> kE7{{
    {2, 9, 1, {{{0, 0, 0, 0, 0, 0, -2, 2}}}},
    {3, 14, 1, {{{1, 1, 1, 1, 1, 3, -3, 3}}}},
    {4, 15, 1, {{{0, 0, 0, 0, 0, 0, -6, 6}}}},
    {5, 14, 1, {{{0, 0, 0, 0, 2, 2, -6, 6}}}},
    {6, 5, 1, {{{0, 0, 0, 0, 0, 4, -2, 2}}}},
    {7, 4, 1, {{{0, 0, 0, 0, 2, 2, -2, 2}}}},
    {8, 7, 1, {{{2, 2, 2, 2, 2, 2, -4, 4}}}},
    {9, 6, 1, {{{0, 0, 2, 2, 2, 2, -4, 4}}}},
    {10, 3, 1, {{{0, 0, 0, 0, 0, 4, -2, 2}}}},
    {11, 6, 1, {{{0, 0, 0, 0, 0, 8, -4, 4}}}},
    {12, 3, 1, {{{-1, 1, 1, 1, 1, 1, -3, 3}}}},
    {13, 6, 1, {{{-2, 2, 2, 2, 2, 2, -6, 6}}}},
    {14, 2, 1, {{{0, 0, 0, 0, 2, 2, -2, 2}}}},
    {15, 4, 1, {{{0, 0, 0, 0, 4, 4, -4, 4}}}},
    {16, 6, 1, {{{0, 0, 0, 0, 6, 6, -6, 6}}}},
    {17, 8, 1, {{{0, 0, 0, 0, 8, 8, -8, 8}}}},
}};

inline constexpr std::array<ERow, 28> kE8{{
    {2, 30, 1, {{{0, 0, 0, 0, 0, 2, 2, 4}}}},
    {3, 31, 1, {{{0, 0, 0, 0, 0, 2, 4, 6}}}},
    {4, 12, 1, {{{0, 0, 0, 0, 0, 0, 0, 4}}}},
    {5, 18, 1, {{{0, 0, 0, 0, 2, 2, 2, 6}}}},
    {6, 22, 1, {{{0, 0, 0, 0, 0, 0, 8, 8}}}},
    {7, 15, 1, {{{1, 1, 1, 1, 1, 1, 3, 7}}}},
    {8, 6, 1, {{{0, 0, 0, 0, 0, 0, 0, 4}}}},
    {9, 19, 1, {{{1, 1, 1, 1, 3, 3, 3, 11}}}},
    {10, 10, 1, {{{0, 0, 0, 0, 0, 0, 0, 8}}}},
    {11, 24, 1, {{{0, 0, 0, 0, 2, 2, 2, 18}}}},
    {12, 5, 1, {{{0, 0, 0, 0, 0, 2, 2, 4}}}},
    {13, 14, 1, {{{0, 0, 0, 0, 0, 4, 4, 12}}}},
    {14, 7, 1, {{{-1, 1, 1, 1, 1, 1, 1, 7}}}},
    {15, 6, 1, {{{0, 0, 0, 0, 2, 2, 2, 6}}}},
    {16, 12, 1, {{{0, 0, 0, 0, 4, 4, 4, 12}}}},
    {17, 18, 1, {{{0, 0, 0, 0, 6, 6, 6, 18}}}},
    {18, 4, 1, {{{1, 1, 1, 1, 1, 1, 1, 5}}}},
    {19, 8, 1, {{{2, 2, 2, 2, 2, 2, 2, 10}}}},
    {20, 3, 1, {{{0, 0, 0, 0, 0, 2, 2, 4}}}},
    {21, 6, 1, {{{0, 0, 0, 0, 0, 4, 4, 8}}}},
    {22, 9, 1, {{{0, 0, 0, 0, 0, 6, 6, 12}}}},
    {23, 12, 1, {{{0, 0, 0, 0, 0, 8, 8, 16}}}},
    {24, 2, 1, {{{0, 0, 0, 0, 0, 0, 0, 4}}}},
    {25, 4, 1, {{{0, 0, 0, 0, 0, 0, 0, 8}}}},
    {26, 6, 1, {{{0, 0, 0, 0, 0, 0, 0, 12}}}},
    {27, 8, 1, {{{0, 0, 0, 0, 0, 0, 0, 16}}}},
    {28, 10, 1, {{{0, 0, 0, 0, 0, 0, 0, 20}}}},
    {29, 12, 1, {{{0, 0, 0, 0, 0, 0, 0, 24}}}},
}};

// FNV-1a over every field of every row, in table order.
constexpr std::uint64_t checksum(std::span<const ERow> rows, std::uint64_t h = 14695981039346656037ull) {
  auto mix = [&h](std::int64_t v) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  };
  for (const auto& r : rows) {
    mix(r.p);
    mix(r.d_p);
    mix(r.count);
    for (const auto& w : r.weights)
      for (auto c : w) mix(c);
  }
  return h;
}

constexpr std::uint64_t all_tables_checksum() {
  return checksum(kE8, checksum(kE7, checksum(kE6)));
}

inline constexpr std::uint64_t kTablesChecksum = 9851263004116820226ull;

}  // namespace minsing::tables
