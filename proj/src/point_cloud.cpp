#include "percolip/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "percolip/rng.hpp"

namespace percolip {

BoxDomain::BoxDomain(std::vector<double> lo_, std::vector<double> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.empty() || lo.size() != hi.size()) {
    throw InvalidArgument("domain: lo and hi must be nonempty and of equal dimension");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!std::isfinite(lo[i]) || !std::isfinite(hi[i]) || !(hi[i] > lo[i])) {
      throw InvalidArgument("domain: requires hi[i] > lo[i] on every axis");
    }
  }
}

double BoxDomain::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim(); ++i) v *= side(i);
  return v;
}

double BoxDomain::diameter() const {
  double s = 0.0;
  for (int i = 0; i < dim(); ++i) s += side(i) * side(i);
  return std::sqrt(s);
}

bool BoxDomain::contains(PointView p) const {
  for (int i = 0; i < dim(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

double BoxDomain::boundary_distance(PointView p) const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dim(); ++i) {
    m = std::min(m, std::min(p[i] - lo[i], hi[i] - p[i]));
  }
  return m;
}

double enrichment_scale(double s, double k, int d) {
  if (d < 1) throw InvalidArgument("enrichment_scale: dimension must be positive");
  if (k <= 0.0) throw InvalidArgument("enrichment_scale: k must be positive");
  if (!(s > 1.0)) throw InvalidArgument("enrichment_scale: requires s > 1");
  const double cd = step_factor(d);
  const double arg = 2.0 * cd * localization_factor(d) * s;
  const double lg = std::log(arg);
  if (!(lg > 0.0)) throw InvalidArgument("enrichment_scale: log argument must exceed 1");
  return cd * std::pow(k * lg, 1.0 / d);
}

double step_scale(double s, double a, int d) {
  if (d < 1) throw InvalidArgument("step_scale: dimension must be positive");
  if (a <= 0.0) throw InvalidArgument("step_scale: a must be positive");
  if (!(s > 1.0)) throw InvalidArgument("step_scale: requires s > 1");
  return a * std::pow(std::log(s), 1.0 / d);
}

namespace {

constexpr double kMaxPoints = 1e8;

PointCloud sample_uniform(const BoxDomain& domain, std::size_t count,
                          std::uint64_t seed, rng::Stream& stream) {
  PointCloud cloud(domain.dim(), domain, seed);
  cloud.coords.resize(count * domain.dim());
  for (std::size_t i = 0; i < count; ++i) {
    for (int j = 0; j < domain.dim(); ++j) {
      cloud.coords[i * domain.dim() + j] = stream.next_in(domain.lo[j], domain.hi[j]);
    }
  }
  return cloud;
}

}  // namespace

PointCloud sample_poisson(const BoxDomain& domain, double intensity, std::uint64_t seed) {
  if (intensity < 0.0 || !std::isfinite(intensity)) {
    throw InvalidArgument("sample_poisson: intensity must be finite and nonnegative");
  }
  const double mean = intensity * domain.volume();
  if (mean > kMaxPoints) {
    throw SizeError("sample_poisson: expected count " + std::to_string(mean) +
                    " exceeds capacity");
  }
  rng::Stream stream(rng::stream_seed(seed, {0x706f69}));
  const std::uint64_t count = rng::poisson_count(stream, mean);
  return sample_uniform(domain, count, seed, stream);
}

PointCloud sample_binomial(const BoxDomain& domain, std::size_t n, std::uint64_t seed) {
  if (static_cast<double>(n) > kMaxPoints) {
    throw SizeError("sample_binomial: count exceeds capacity");
  }
  rng::Stream stream(rng::stream_seed(seed, {0x62696e}));
  return sample_uniform(domain, n, seed, stream);
}

std::vector<double> EnrichedCloud::all_coords() const {
  std::vector<double> out;
  out.reserve(base.coords.size() + added.size());
  out.insert(out.end(), base.coords.begin(), base.coords.end());
  out.insert(out.end(), added.begin(), added.end());
  return out;
}

EnrichedCloud enrich(const PointCloud& cloud, double delta) {
  const int d = cloud.dim;
  if (d < 1) throw InvalidArgument("enrich: cloud has no dimension");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidArgument("enrich: delta must be positive and finite");
  }
  const double box_side = delta / step_factor(d);
  const BoxDomain& dom = cloud.domain;

  // Number of grid boxes per axis; the last one is clipped to the domain.
  std::vector<std::int64_t> cells(d);
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) {
    if (box_side > dom.side(i)) {
      throw InvalidArgument("enrich: box side exceeds a domain side, grid degenerate");
    }
    const double ratio = dom.side(i) / box_side;
    std::int64_t n = static_cast<std::int64_t>(std::ceil(ratio));
    // Sides that are an exact multiple of the box side get no sliver box.
    if (static_cast<double>(n - 1) >= ratio) n -= 1;
    cells[i] = std::max<std::int64_t>(n, 1);
    if (total > (1LL << 31) / cells[i]) {
      throw SizeError("enrich: grid has too many boxes");
    }
    total *= cells[i];
  }

  std::vector<char> occupied(static_cast<std::size_t>(total), 0);
  std::vector<std::int64_t> strides(d);
  strides[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) strides[i] = strides[i + 1] * cells[i + 1];

  const std::size_t n_pts = cloud.size();
  for (std::size_t p = 0; p < n_pts; ++p) {
    PointView pt = cloud.point(p);
    std::int64_t idx = 0;
    for (int i = 0; i < d; ++i) {
      std::int64_t c = static_cast<std::int64_t>(std::floor((pt[i] - dom.lo[i]) / box_side));
      c = std::clamp<std::int64_t>(c, 0, cells[i] - 1);
      idx += c * strides[i];
    }
    occupied[static_cast<std::size_t>(idx)] = 1;
  }

  EnrichedCloud out{cloud, box_side, dom.lo, {}};
  std::vector<std::int64_t> c(d, 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    if (!occupied[static_cast<std::size_t>(idx)]) {
      for (int i = 0; i < d; ++i) {
        const double cell_lo = dom.lo[i] + static_cast<double>(c[i]) * box_side;
        const double cell_hi = std::min(cell_lo + box_side, dom.hi[i]);
        out.added.push_back(0.5 * (cell_lo + cell_hi));
      }
    }
    for (int i = d - 1; i >= 0; --i) {
      if (++c[i] < cells[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

}  // namespace percolip
