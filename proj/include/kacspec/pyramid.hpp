#pragma once

// A stepped pyramid of unit cubes: square horizontal layers whose sides shrink
// by 2 per level (a one-cube ledge all round). For height parameter n the
// layers are the j x j squares with 1 <= j <= n and j == n (mod 2); an odd n
// ends in a 1x1 apex, an even n in a 2x2 one. These are the only layer sizes
// for which the two counts below reproduce the two sides of the identity.
//
// Cubes are sliced vertically, parallel to one edge: a cube in column `col` of
// layer j sits in slice col + (n - j)/2, so slices run 1..n and slice s holds
// s(n+1-s) cubes.

#include "kacspec/limits.hpp"
#include "kacspec/number.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

namespace kacspec {

struct Cube {
  std::size_t layer;  // side length of the cube's layer
  std::size_t row;    // 1..layer
  std::size_t col;    // 1..layer
  std::size_t slice;  // col + (n - layer)/2

  friend bool operator==(const Cube&, const Cube&) = default;
};

enum class SliceAxis { Column, Row };

class PyramidModel {
 public:
  explicit PyramidModel(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  std::size_t total_cubes() const { return cubes_.size(); }
  /// Side length j -> cubes in that layer (counted, not computed from j).
  const std::map<std::size_t, std::size_t>& layer_sizes() const { return layer_sizes_; }
  /// Slice s -> cubes in that slice (counted along the column axis).
  const std::map<std::size_t, std::size_t>& slice_sizes() const { return slice_sizes_; }

  /// Slice index of a cube along the given axis.
  std::size_t slice_of(const Cube& cube, SliceAxis axis) const;

 private:
  std::size_t n_;
  std::vector<Cube> cubes_;
  std::map<std::size_t, std::size_t> layer_sizes_;
  std::map<std::size_t, std::size_t> slice_sizes_;
};

/// Throws std::invalid_argument for n == 0.
PyramidModel build_pyramid(std::size_t n);

/// Number of k-subsets of cubes with pairwise distinct layers, counted one
/// subset at a time. Throws CapExceeded once more than `budget` search nodes
/// have been visited.
Integer count_layer_distinct(const PyramidModel& p, std::int64_t k,
                             std::uint64_t budget = Limits{}.pyramid_budget);

/// Number of k-subsets of cubes whose slice indices pairwise differ by at least 2.
Integer count_slice_separated(const PyramidModel& p, std::int64_t k,
                              std::uint64_t budget = Limits{}.pyramid_budget,
                              SliceAxis axis = SliceAxis::Column);

/// CSV with header "layer,row,col,slice", one row per cube.
void write_cube_table(std::ostream& out, const PyramidModel& p);

}  // namespace kacspec
