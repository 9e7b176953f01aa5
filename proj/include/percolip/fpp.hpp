#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "percolip/grid_index.hpp"
#include "percolip/point_cloud.hpp"

namespace percolip {

inline constexpr double kInfiniteLength = std::numeric_limits<double>::infinity();

// One distance query: endpoints x, y and the maximal step size h. A path
// p_1..p_m is feasible when |x-p_1| <= h/2, |y-p_m| <= h/2 and every hop
// |p_i - p_{i+1}| <= h; its length is the sum of the hop lengths (the
// endpoint halos are not counted).
struct PathQuery {
  std::vector<double> x;
  std::vector<double> y;
  double h = 0.0;
};

struct DistanceResult {
  double length = kInfiniteLength;  // +inf when no feasible path exists
  std::vector<int> path;            // point indices, empty iff infinite
  int hops = 0;                     // path.size() - 1 when finite
  std::size_t explored = 0;         // settled nodes, diagnostic

  bool finite() const { return length < kInfiniteLength; }
};

struct SearchOptions {
  // Pre-filter candidate points to B(x, localization_factor(d)*|x-y|).
  // When the clipped run is infeasible or its path touches the clip
  // boundary, the query is rerun unclipped and that answer wins.
  bool clip_to_localization_ball = true;
};

// Exact infimum over feasible paths, realized as a shortest path via a
// label-setting search with virtual endpoint nodes. Among equal-length
// shortest paths the lexicographically smallest index sequence is
// returned, so results are reproducible across platforms.
DistanceResult graph_distance(std::span<const double> coords, int dim,
                              const GridIndex& index, const PathQuery& query,
                              const SearchOptions& options = {});

// Same semantics over base + added points of the enriched cloud. Requires
// h >= step_factor(d) * box_side (i.e. h >= delta); the result is then
// always finite and bounded by step_factor(d)*|x-y| whenever |x-y| >= h.
DistanceResult distance_on_enriched(const EnrichedCloud& enriched, const PathQuery& query,
                                    const SearchOptions& options = {});
DistanceResult distance_on_enriched(const EnrichedCloud& enriched, const GridIndex& index,
                                    const PathQuery& query, const SearchOptions& options = {});

// Distances from a continuum source point (halo h/2) to every vertex.
// Entry i is the length of the cheapest feasible path ending exactly at
// point i; +inf where unreachable.
std::vector<double> distances_from_point(std::span<const double> coords, int dim,
                                         const GridIndex& index, PointView x, double h);

// Vertex-to-vertex variant with zero endpoint halos: plain shortest paths
// in the graph whose edges join points at distance <= h.
std::vector<double> distances_from_vertex(std::span<const double> coords, int dim,
                                          const GridIndex& index, int source, double h);

// d_{h3}(x,y) <= d_{h1}(x,z) + d_{h2}(z,y) with infinity-absorbing
// arithmetic; requires h3 >= max(h1, h2).
bool triangle_check(std::span<const double> coords, int dim, const GridIndex& index,
                    PointView x, PointView y, PointView z, double h1, double h2, double h3);

// Every path point lies in the closed ball B(x, localization_factor(d)*|x-y|).
bool localization_check(const DistanceResult& result, std::span<const double> coords,
                        int dim, PointView x, PointView y);

// Whether the plain and enriched searches return equal lengths (exact
// comparison). Requires enriched.base to be the given cloud and
// delta <= h <= |x-y|/2.
bool distances_match(const PointCloud& cloud, const EnrichedCloud& enriched,
                     const PathQuery& query);

}  // namespace percolip
