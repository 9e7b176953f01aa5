#include "percolip/fpp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace percolip {

namespace {

constexpr int kPredNone = -1;
constexpr int kPredSource = -2;

struct Search {
  const GridIndex& index;
  double h;
  bool clipped = false;
  std::vector<double> clip_center;
  double clip_radius_sq = 0.0;

  std::vector<double> label;
  std::vector<int> pred;
  std::size_t explored = 0;

  Search(const GridIndex& idx, double step) : index(idx), h(step) {
    label.assign(idx.size(), kInfiniteLength);
    pred.assign(idx.size(), kPredNone);
  }

  bool in_clip(PointView p) const {
    return !clipped ||
           dist_sq(p, {clip_center.data(), clip_center.size()}) <= clip_radius_sq;
  }

  // Index sequence from the source to v; walked only on exact length ties.
  std::vector<int> chain(int v) const {
    std::vector<int> seq;
    for (int u = v; u != kPredSource; u = pred[u]) seq.push_back(u);
    std::reverse(seq.begin(), seq.end());
    return seq;
  }

  bool chain_less(int a, int b) const { return chain(a) < chain(b); }

  // Label-setting run over the implicit step graph. With `track_ties`,
  // bitwise-equal labels keep the lexicographically smallest predecessor
  // chain; a corrected node is re-queued so the correction reaches its
  // descendants. `on_settle` may stop the search by returning false.
  template <typename OnSettle>
  void run(const std::vector<int>& seeds, bool track_ties, OnSettle&& on_settle) {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    for (int v : seeds) {
      label[v] = 0.0;
      pred[v] = kPredSource;
      queue.emplace(0.0, v);
    }
    std::vector<char> settled(label.size(), 0);
    while (!queue.empty()) {
      const auto [du, u] = queue.top();
      queue.pop();
      if (du > label[u]) continue;  // stale entry
      const bool repush = settled[u] != 0;
      if (!repush) {
        settled[u] = 1;
        ++explored;
        if (!on_settle(u, du)) return;
      }
      PointView pu = index.point(u);
      index.for_each_within(pu, h, [&](int v, PointView pv) {
        if (v == u) return;
        if (!in_clip(pv)) return;
        const double nd = label[u] + percolip::dist(pu, pv);
        if (nd < label[v]) {
          label[v] = nd;
          pred[v] = u;
          queue.emplace(nd, v);
        } else if (track_ties && nd == label[v]) {
          if (pred[v] == u) {
            // Same tree edge; if u's chain just changed the change is
            // implicit in v, but v's descendants must still be revisited.
            if (repush) queue.emplace(nd, v);
          } else if (pred[v] != kPredNone) {
            std::vector<int> cand = chain(u);
            cand.push_back(v);
            if (cand < chain(v)) {
              pred[v] = u;
              queue.emplace(nd, v);
            }
          }
        }
      });
    }
  }
};

void validate_query(int dim, const GridIndex& index, const PathQuery& query) {
  if (static_cast<int>(query.x.size()) != dim ||
      static_cast<int>(query.y.size()) != dim) {
    throw InvalidArgument("distance query: endpoint dimension mismatch");
  }
  if (index.dim() != dim) {
    throw InvalidArgument("distance query: index dimension mismatch");
  }
  if (!(query.h > 0.0) || !std::isfinite(query.h)) {
    throw InvalidArgument("distance query: step size must be positive");
  }
  for (double c : query.x) {
    if (!std::isfinite(c)) throw InvalidArgument("distance query: endpoints must be finite");
  }
  for (double c : query.y) {
    if (!std::isfinite(c)) throw InvalidArgument("distance query: endpoints must be finite");
  }
}

DistanceResult point_to_point(const GridIndex& index, const PathQuery& query, bool clip) {
  Search search(index, query.h);
  const PointView x{query.x.data(), query.x.size()};
  const PointView y{query.y.data(), query.y.size()};
  if (clip) {
    search.clipped = true;
    search.clip_center = query.x;
    const double radius = localization_factor(index.dim()) * percolip::dist(x, y);
    search.clip_radius_sq = radius * radius;
  }

  std::vector<int> seeds;
  index.for_each_within(x, query.h / 2.0, [&](int v, PointView pv) {
    if (search.in_clip(pv)) seeds.push_back(v);
  });
  std::vector<int> targets;
  index.for_each_within(y, query.h / 2.0, [&](int v, PointView pv) {
    if (search.in_clip(pv)) targets.push_back(v);
  });

  DistanceResult result;
  if (seeds.empty() || targets.empty()) return result;

  std::vector<char> is_target(index.size(), 0);
  for (int v : targets) is_target[v] = 1;
  double best_target = kInfiniteLength;
  search.run(seeds, /*track_ties=*/true, [&](int u, double du) {
    if (is_target[u] && du < best_target) best_target = du;
    return !(du > best_target);  // equal labels still settle, for tie order
  });

  result.explored = search.explored;
  int best = -1;
  for (int v : targets) {
    if (search.label[v] == kInfiniteLength) continue;
    if (best < 0 || search.label[v] < search.label[best] ||
        (search.label[v] == search.label[best] && search.chain_less(v, best))) {
      best = v;
    }
  }
  if (best < 0) return result;
  result.length = search.label[best];
  result.path = search.chain(best);
  result.hops = static_cast<int>(result.path.size()) - 1;
  return result;
}

bool touches_clip_boundary(const DistanceResult& result, const GridIndex& index,
                           const PathQuery& query) {
  const PointView x{query.x.data(), query.x.size()};
  const PointView y{query.y.data(), query.y.size()};
  const double radius = localization_factor(index.dim()) * percolip::dist(x, y);
  const double inner = std::max(radius - query.h, 0.0);
  const double inner_sq = inner * inner;
  for (int v : result.path) {
    if (dist_sq(index.point(v), x) >= inner_sq) return true;
  }
  return false;
}

}  // namespace

DistanceResult graph_distance(std::span<const double> coords, int dim,
                              const GridIndex& index, const PathQuery& query,
                              const SearchOptions& options) {
  validate_query(dim, index, query);
  if (coords.size() != index.size() * static_cast<std::size_t>(dim)) {
    throw InvalidArgument("distance query: index not built over the given points");
  }
  DistanceResult result =
      point_to_point(index, query, options.clip_to_localization_ball);
  if (options.clip_to_localization_ball &&
      (!result.finite() || touches_clip_boundary(result, index, query))) {
    // The clip is a heuristic; when in doubt the unclipped answer wins.
    result = point_to_point(index, query, /*clip=*/false);
  }
  return result;
}

DistanceResult distance_on_enriched(const EnrichedCloud& enriched, const GridIndex& index,
                                    const PathQuery& query, const SearchOptions& options) {
  const int dim = enriched.base.dim;
  const double delta = step_factor(dim) * enriched.box_side;
  if (query.h < delta) {
    throw InvalidArgument("enriched distance: requires h >= delta of the enrichment");
  }
  const std::vector<double> coords = enriched.all_coords();
  return graph_distance(coords, dim, index, query, options);
}

DistanceResult distance_on_enriched(const EnrichedCloud& enriched, const PathQuery& query,
                                    const SearchOptions& options) {
  const std::vector<double> coords = enriched.all_coords();
  GridIndex index(coords, enriched.base.dim, query.h);
  return distance_on_enriched(enriched, index, query, options);
}

std::vector<double> distances_from_point(std::span<const double> coords, int dim,
                                         const GridIndex& index, PointView x, double h) {
  PathQuery probe{std::vector<double>(x.begin(), x.end()),
                  std::vector<double>(x.begin(), x.end()), h};
  validate_query(dim, index, probe);
  if (coords.size() != index.size() * static_cast<std::size_t>(dim)) {
    throw InvalidArgument("distance query: index not built over the given points");
  }
  Search search(index, h);
  std::vector<int> seeds;
  index.for_each_within(x, h / 2.0, [&](int v, PointView) { seeds.push_back(v); });
  search.run(seeds, /*track_ties=*/false, [](int, double) { return true; });
  return std::move(search.label);
}

std::vector<double> distances_from_vertex(std::span<const double> coords, int dim,
                                          const GridIndex& index, int source, double h) {
  if (source < 0 || static_cast<std::size_t>(source) >= index.size()) {
    throw InvalidArgument("distances_from_vertex: source out of range");
  }
  if (coords.size() != index.size() * static_cast<std::size_t>(dim)) {
    throw InvalidArgument("distance query: index not built over the given points");
  }
  Search search(index, h);
  search.run({source}, /*track_ties=*/false, [](int, double) { return true; });
  return std::move(search.label);
}

bool triangle_check(std::span<const double> coords, int dim, const GridIndex& index,
                    PointView x, PointView y, PointView z, double h1, double h2,
                    double h3) {
  if (h3 < std::max(h1, h2)) {
    throw InvalidArgument("triangle check: requires h3 >= max(h1, h2)");
  }
  SearchOptions opts{.clip_to_localization_ball = false};
  const auto xz = graph_distance(
      coords, dim, index, {{x.begin(), x.end()}, {z.begin(), z.end()}, h1}, opts);
  const auto zy = graph_distance(
      coords, dim, index, {{z.begin(), z.end()}, {y.begin(), y.end()}, h2}, opts);
  if (!xz.finite() || !zy.finite()) return true;  // vacuous
  const auto xy = graph_distance(
      coords, dim, index, {{x.begin(), x.end()}, {y.begin(), y.end()}, h3}, opts);
  return xy.length <= xz.length + zy.length;
}

bool localization_check(const DistanceResult& result, std::span<const double> coords,
                        int dim, PointView x, PointView y) {
  if (!result.finite()) {
    throw InvalidArgument("localization check: requires a finite result");
  }
  const double radius = localization_factor(dim) * dist(x, y);
  const double radius_sq = radius * radius;
  for (int v : result.path) {
    PointView p{coords.data() + static_cast<std::size_t>(v) * dim,
                static_cast<std::size_t>(dim)};
    if (dist_sq(p, x) > radius_sq) return false;
  }
  return true;
}

bool distances_match(const PointCloud& cloud, const EnrichedCloud& enriched,
                     const PathQuery& query) {
  if (enriched.base.coords != cloud.coords || enriched.base.dim != cloud.dim) {
    throw InvalidArgument("distances_match: enriched cloud not built from the given cloud");
  }
  const double delta = step_factor(cloud.dim) * enriched.box_side;
  const double separation =
      dist({query.x.data(), query.x.size()}, {query.y.data(), query.y.size()});
  if (!(delta <= query.h && query.h <= separation / 2.0)) {
    throw InvalidArgument("distances_match: requires delta <= h <= |x-y|/2");
  }
  SearchOptions opts{.clip_to_localization_ball = false};
  GridIndex base_index(cloud.coords, cloud.dim, query.h);
  const auto plain = graph_distance(cloud.coords, cloud.dim, base_index, query, opts);
  const auto prime = distance_on_enriched(enriched, query, opts);
  return plain.length == prime.length;
}

}  // namespace percolip
