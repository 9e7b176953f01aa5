#pragma once

#include <cstdint>
#include <vector>

#include "percolip/errors.hpp"
#include "percolip/point_cloud.hpp"

namespace percolip {

// Uniform-grid bucket structure for fixed-radius neighbor queries.
// The cell of a point p is floor((p - origin)/cell_size) componentwise,
// with origin the componentwise minimum of the input points. Buckets are
// stored CSR-style over the (bounded) occupied grid; building twice from
// the same input yields identical bucket contents. Immutable after build;
// concurrent read-only queries are safe.
class GridIndex {
 public:
  GridIndex(std::span<const double> coords, int dim, double cell_size);

  int dim() const { return dim_; }
  double cell_size() const { return cell_size_; }
  std::size_t size() const { return n_points_; }

  std::vector<std::int64_t> cell_of(PointView p) const;
  std::size_t nonempty_bucket_count() const;
  // Point indices in the given cell, ascending.
  std::span<const int> bucket(const std::vector<std::int64_t>& cell) const;

  // Indices i with |p_i - q| <= radius (closed ball), ascending. Ties at
  // the boundary resolve by exact comparison of squared distances.
  std::vector<int> neighbors_within(PointView q, double radius) const;

  // Visits the same indices without materializing a vector; order is
  // ascending within each visited cell. Hot path for distance queries.
  template <typename F>
  void for_each_within(PointView q, double radius, F&& fn) const {
    if (n_points_ == 0) return;
    const double r_sq = radius * radius;
    std::vector<std::int64_t> lo(dim_), hi(dim_), c(dim_);
    for (int i = 0; i < dim_; ++i) {
      lo[i] = clamp_cell(coord_cell(q[i] - radius, i), i);
      hi[i] = clamp_cell(coord_cell(q[i] + radius, i), i);
      c[i] = lo[i];
    }
    for (;;) {
      std::int64_t lin = 0;
      for (int i = 0; i < dim_; ++i) lin += c[i] * strides_[i];
      const std::size_t b = static_cast<std::size_t>(lin);
      for (std::size_t k = cell_start_[b]; k < cell_start_[b + 1]; ++k) {
        const int idx = order_[k];
        PointView p{coords_.data() + static_cast<std::size_t>(idx) * dim_,
                    static_cast<std::size_t>(dim_)};
        if (dist_sq(p, q) <= r_sq) fn(idx, p);
      }
      int axis = dim_ - 1;
      for (; axis >= 0; --axis) {
        if (++c[axis] <= hi[axis]) break;
        c[axis] = lo[axis];
      }
      if (axis < 0) break;
    }
  }

  PointView point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }

 private:
  std::int64_t coord_cell(double x, int axis) const;
  std::int64_t clamp_cell(std::int64_t c, int axis) const;

  std::vector<double> coords_;
  int dim_ = 0;
  double cell_size_ = 0.0;
  std::size_t n_points_ = 0;
  std::vector<double> origin_;
  std::vector<std::int64_t> extents_;  // cells per axis covering the data
  std::vector<std::int64_t> strides_;
  std::vector<std::size_t> cell_start_;  // CSR offsets, size = total cells + 1
  std::vector<int> order_;               // point indices sorted by cell
};

}  // namespace percolip
