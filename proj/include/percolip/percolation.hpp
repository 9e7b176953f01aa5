#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "percolip/point_cloud.hpp"

namespace percolip {

// Monte-Carlo study of the step-constrained distance at geometrically
// growing scales s_i = base_scale * 2^(i-1), i = 1..levels. Each trial
// samples a unit intensity Poisson cloud on the slab
// [-s^(1/d), s + s^(1/d)] x [-s^(1/d), s^(1/d)]^(d-1) and measures the
// distance from the origin to s*e1 (and to (s/2)*e1) with step size
// a*ln(s)^(1/d). With enrich_k set, the enriched distance to s*e1 is
// measured as well, using boxes at scale enrichment_scale(s, k, d).
struct StudyConfig {
  int dim = 2;
  int levels = 5;                  // i_max
  double step_factor_a = 2.0;      // a
  int trials_per_level = 100;      // K
  std::optional<double> enrich_k;  // box scale constant; unset = no enrichment
  std::uint64_t master_seed = 0;
  double base_scale = 100.0;       // s at level 1
  int threads = 0;                 // 0 = auto

  double scale_at(int level) const;  // s_i
};

struct TrialRecord {
  int level = 0;
  int trial = 0;
  double s = 0.0;
  double h = 0.0;
  double t_full = 0.0;              // +inf when infeasible
  double t_half = 0.0;              // +inf when infeasible
  std::optional<double> t_prime;    // unset when enrichment is off or h < delta
  int hops = 0;                     // hop count of the full query
  double wall_ms = 0.0;
};

struct LevelStats {
  double mean = 0.0;   // over finite trials
  double stdev = 0.0;  // sample standard deviation over finite trials
  int finite = 0;
  int infeasible = 0;
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean squared residual in log space
};

struct LevelSummary {
  int level = 0;
  double s = 0.0;
  double h = 0.0;
  std::optional<double> delta;  // enrichment scale, when enabled
  LevelStats full;
  LevelStats half;
  std::optional<LevelStats> prime;
  std::optional<double> ratio;       // mean(T_half) / mean(T_full)
  std::optional<double> scaled_std;  // std(T_prime) / sqrt((delta^2/h) s)
};

struct StudySummary {
  std::vector<LevelSummary> levels;
  std::optional<double> sigma_hat;  // mean at the top level divided by s
  std::optional<RateFit> ratio_rate;  // log-log fit of |ratio - 1/2| vs s
};

// Runs all levels and trials; deterministic for a fixed master seed
// regardless of thread count (per-trial RNG streams are derived from
// (master_seed, level, trial)). Trials with an infinite plain distance are
// kept in the record list and excluded from means.
std::vector<TrialRecord> run_study(const StudyConfig& config);

// One trial, exposed for tests.
TrialRecord run_trial(const StudyConfig& config, int level, int trial);

// Mean of the half distance over mean of the full distance, per level
// (unset where either mean has no finite trials).
std::vector<std::optional<double>> ratio_series(const StudyConfig& config,
                                                const std::vector<TrialRecord>& records);

// Mean distance at the largest level divided by s there; uses the
// enriched distances when present, the plain ones otherwise. Throws when
// every trial at the top level is infeasible.
double sigma_estimate(const StudyConfig& config, const std::vector<TrialRecord>& records);

// Least squares line through (ln x_i, ln y_i); slope is the algebraic
// rate exponent. Requires at least two points and positive values.
RateFit rate_fit(std::span<const double> xs, std::span<const double> ys);

// Sample standard deviation of the enriched distance at one level, scaled
// by sqrt((delta_s^2 / h_s) * s) -- the concentration scale.
double concentration_stats(const StudyConfig& config,
                           const std::vector<TrialRecord>& records, int level);

StudySummary summarize(const StudyConfig& config, const std::vector<TrialRecord>& records);

// records.csv: header
// level,trial,s,h,T_full,T_half,T_prime,hops,wall_time_ms
// with infinite distances written as "inf" and unavailable T_prime empty.
void write_records_csv(std::ostream& os, const std::vector<TrialRecord>& records);
std::string summary_to_json(const StudyConfig& config, const StudySummary& summary);

}  // namespace percolip
