#include "kacspec/pyramid.hpp"

#include <algorithm>
#include <string>

namespace kacspec {

PyramidModel::PyramidModel(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("build_pyramid: n must be positive");
  for (std::size_t j = (n % 2 == 0) ? 2 : 1; j <= n; j += 2) {
    const std::size_t offset = (n - j) / 2;
    for (std::size_t row = 1; row <= j; ++row) {
      for (std::size_t col = 1; col <= j; ++col) {
        cubes_.push_back({j, row, col, col + offset});
        ++layer_sizes_[j];
        ++slice_sizes_[col + offset];
      }
    }
  }
}

std::size_t PyramidModel::slice_of(const Cube& cube, SliceAxis axis) const {
  return axis == SliceAxis::Column ? cube.slice : cube.row + (n_ - cube.layer) / 2;
}

PyramidModel build_pyramid(std::size_t n) { return PyramidModel(n); }

namespace {

// Counts k-subsets of items whose keys, once sorted, increase by at least
// `gap` at every step. Every qualifying subset is reached individually; the
// only pruning is jumping straight to the first admissible key.
class SelectionCounter {
 public:
  SelectionCounter(std::vector<std::size_t> keys, std::size_t gap, std::uint64_t budget)
      : keys_(std::move(keys)), gap_(gap), budget_(budget) {
    std::sort(keys_.begin(), keys_.end());
  }

  Integer count(std::size_t k) {
    if (k == 0) return Integer(1);
    return Integer(walk(0, k));
  }

 private:
  std::uint64_t walk(std::size_t from, std::size_t remaining) {
    std::uint64_t total = 0;
    for (std::size_t i = from; i < keys_.size(); ++i) {
      if (++visited_ > budget_) {
        throw CapExceeded("pyramid brute force exceeded its budget of " + std::to_string(budget_) +
                          " nodes");
      }
      if (remaining == 1) {
        ++total;
        continue;
      }
      const auto next = std::lower_bound(keys_.begin() + static_cast<std::ptrdiff_t>(i) + 1, keys_.end(),
                                         keys_[i] + gap_);
      if (next == keys_.end()) continue;
      total += walk(static_cast<std::size_t>(next - keys_.begin()), remaining - 1);
    }
    return total;
  }

  std::vector<std::size_t> keys_;
  std::size_t gap_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
};

}  // namespace

Integer count_layer_distinct(const PyramidModel& p, std::int64_t k, std::uint64_t budget) {
  if (k < 0) return Integer(0);
  std::vector<std::size_t> layers;
  layers.reserve(p.total_cubes());
  for (const auto& cube : p.cubes()) layers.push_back(cube.layer);
  return SelectionCounter(std::move(layers), 1, budget).count(static_cast<std::size_t>(k));
}

Integer count_slice_separated(const PyramidModel& p, std::int64_t k, std::uint64_t budget,
                              SliceAxis axis) {
  if (k < 0) return Integer(0);
  std::vector<std::size_t> slices;
  slices.reserve(p.total_cubes());
  for (const auto& cube : p.cubes()) slices.push_back(p.slice_of(cube, axis));
  return SelectionCounter(std::move(slices), 2, budget).count(static_cast<std::size_t>(k));
}

void write_cube_table(std::ostream& out, const PyramidModel& p) {
  out << "layer,row,col,slice\n";
  for (const auto& c : p.cubes()) out << c.layer << ',' << c.row << ',' << c.col << ',' << c.slice << '\n';
}

}  // namespace kacspec
