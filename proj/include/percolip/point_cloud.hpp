#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "percolip/errors.hpp"

namespace percolip {

using PointView = std::span<const double>;

inline double dist_sq(PointView a, PointView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(PointView a, PointView b) { return std::sqrt(dist_sq(a, b)); }

// Axis-aligned box domain [lo_1,hi_1] x ... x [lo_d,hi_d].
struct BoxDomain {
  std::vector<double> lo;
  std::vector<double> hi;

  BoxDomain(std::vector<double> lo_, std::vector<double> hi_);

  int dim() const { return static_cast<int>(lo.size()); }
  double side(int i) const { return hi[i] - lo[i]; }
  double volume() const;
  double diameter() const;
  bool contains(PointView p) const;
  // Distance to the box boundary (0 on the boundary, positive inside).
  double boundary_distance(PointView p) const;
};

// Finite point set together with the domain it was sampled on. Points are
// stored row-major as a flat coordinate array. Immutable after
// construction; safe to share read-only across threads.
struct PointCloud {
  int dim = 0;
  BoxDomain domain;
  std::uint64_t seed = 0;  // 0 when constructed manually
  std::vector<double> coords;

  PointCloud(int d, BoxDomain dom, std::uint64_t s)
      : dim(d), domain(std::move(dom)), seed(s) {}

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  PointView point(std::size_t i) const { return {coords.data() + i * dim, static_cast<std::size_t>(dim)}; }
};

// Step factor: 2*sqrt(d). Side length b of the enrichment boxes is chosen
// so that any two points in touching boxes are at most step_factor*b apart.
inline double step_factor(int d) { return 2.0 * std::sqrt(static_cast<double>(d)); }

// Radius multiplier of the ball that contains optimal paths; any value
// above 1 + step_factor(d) works, fixed here as step_factor(d) + 2.
inline double localization_factor(int d) { return step_factor(d) + 2.0; }

// Box scale for the enriched process at distance scale s > 1:
// step_factor(d) * (k * ln(2 * step_factor * localization_factor * s))^(1/d).
double enrichment_scale(double s, double k, int d);

// Step size at distance scale s > 1: a * ln(s)^(1/d).
double step_scale(double s, double a, int d);

// Point cloud augmented with one fill point (the center of the clipped
// box) for every grid box that contains no cloud point. The grid has side
// box_side, is anchored at domain.lo, and its last row of boxes is
// clipped to the domain.
struct EnrichedCloud {
  PointCloud base;
  double box_side = 0.0;
  std::vector<double> grid_origin;
  std::vector<double> added;  // fill points, row-major

  std::size_t added_count() const {
    return base.dim == 0 ? 0 : added.size() / base.dim;
  }
  std::size_t total_size() const { return base.size() + added_count(); }
  // Base points followed by added points; index offsets are stable.
  std::vector<double> all_coords() const;
};

// Poisson point process with the given intensity: the count is
// Poisson(intensity * volume), positions i.i.d. uniform. Deterministic
// for a fixed seed.
PointCloud sample_poisson(const BoxDomain& domain, double intensity, std::uint64_t seed);

// Exactly n i.i.d. uniform points (binomial point process).
PointCloud sample_binomial(const BoxDomain& domain, std::size_t n, std::uint64_t seed);

// Fill every empty grid box of side delta/step_factor(d) with its center.
EnrichedCloud enrich(const PointCloud& cloud, double delta);

}  // namespace percolip
