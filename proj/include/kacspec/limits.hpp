#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace kacspec {

/// Size caps for the exponential oracles. The polynomial-time routes ignore them.
struct Limits {
  std::size_t enumeration_max_n = 25;
  std::size_t determinant_max_n = 12;
  std::size_t pyramid_max_n = 6;
  /// Search nodes a single pyramid count may visit.
  std::uint64_t pyramid_budget = 5'000'000;

  static Limits unlimited() {
    constexpr auto big = std::numeric_limits<std::size_t>::max();
    return {big, big, big, std::numeric_limits<std::uint64_t>::max()};
  }
};

}  // namespace kacspec
