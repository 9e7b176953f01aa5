#include "percolip/grid_index.hpp"

#include <algorithm>
#include <cmath>

namespace percolip {

GridIndex::GridIndex(std::span<const double> coords, int dim, double cell_size)
    : coords_(coords.begin(), coords.end()), dim_(dim), cell_size_(cell_size) {
  if (dim < 1) throw InvalidArgument("grid index: dimension must be positive");
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw InvalidArgument("grid index: cell size must be positive");
  }
  if (coords.size() % dim != 0) {
    throw InvalidArgument("grid index: coordinate array not a multiple of dim");
  }
  n_points_ = coords.size() / dim;

  origin_.assign(dim_, 0.0);
  extents_.assign(dim_, 1);
  if (n_points_ > 0) {
    for (int i = 0; i < dim_; ++i) {
      double mn = coords_[i], mx = coords_[i];
      for (std::size_t p = 1; p < n_points_; ++p) {
        const double v = coords_[p * dim_ + i];
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
      origin_[i] = mn;
      extents_[i] = static_cast<std::int64_t>(std::floor((mx - mn) / cell_size_)) + 1;
    }
  }

  std::int64_t total = 1;
  for (int i = 0; i < dim_; ++i) {
    if (total > (1LL << 27) / extents_[i]) {
      throw SizeError("grid index: too many cells for this cell size");
    }
    total *= extents_[i];
  }
  strides_.assign(dim_, 1);
  for (int i = dim_ - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * extents_[i + 1];

  // Counting sort of point indices by linear cell id.
  std::vector<std::int64_t> cell_ids(n_points_);
  std::vector<std::size_t> counts(static_cast<std::size_t>(total) + 1, 0);
  for (std::size_t p = 0; p < n_points_; ++p) {
    std::int64_t lin = 0;
    for (int i = 0; i < dim_; ++i) {
      lin += clamp_cell(coord_cell(coords_[p * dim_ + i], i), i) * strides_[i];
    }
    cell_ids[p] = lin;
    ++counts[static_cast<std::size_t>(lin) + 1];
  }
  for (std::size_t b = 1; b < counts.size(); ++b) counts[b] += counts[b - 1];
  cell_start_ = counts;
  order_.resize(n_points_);
  std::vector<std::size_t> cursor(cell_start_.begin(), cell_start_.end() - 1);
  for (std::size_t p = 0; p < n_points_; ++p) {
    order_[cursor[static_cast<std::size_t>(cell_ids[p])]++] = static_cast<int>(p);
  }
}

std::int64_t GridIndex::coord_cell(double x, int axis) const {
  return static_cast<std::int64_t>(std::floor((x - origin_[axis]) / cell_size_));
}

std::int64_t GridIndex::clamp_cell(std::int64_t c, int axis) const {
  return std::clamp<std::int64_t>(c, 0, extents_[axis] - 1);
}

std::vector<std::int64_t> GridIndex::cell_of(PointView p) const {
  std::vector<std::int64_t> cell(dim_);
  for (int i = 0; i < dim_; ++i) cell[i] = coord_cell(p[i], i);
  return cell;
}

std::size_t GridIndex::nonempty_bucket_count() const {
  std::size_t n = 0;
  for (std::size_t b = 0; b + 1 < cell_start_.size(); ++b) {
    if (cell_start_[b + 1] > cell_start_[b]) ++n;
  }
  return n;
}

std::span<const int> GridIndex::bucket(const std::vector<std::int64_t>& cell) const {
  std::int64_t lin = 0;
  for (int i = 0; i < dim_; ++i) {
    if (cell[i] < 0 || cell[i] >= extents_[i]) return {};
    lin += cell[i] * strides_[i];
  }
  const std::size_t b = static_cast<std::size_t>(lin);
  return {order_.data() + cell_start_[b], cell_start_[b + 1] - cell_start_[b]};
}

std::vector<int> GridIndex::neighbors_within(PointView q, double radius) const {
  if (!(radius > 0.0)) throw InvalidArgument("neighbors_within: radius must be positive");
  std::vector<int> out;
  for_each_within(q, radius, [&out](int idx, PointView) { out.push_back(idx); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace percolip
