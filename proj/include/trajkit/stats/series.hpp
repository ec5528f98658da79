// Copyright 2026 The trajkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trajkit/core.hpp"

namespace trajkit::stats {

/// Ensemble average E[.] at fixed instants, or time average <.> along each
/// trajectory followed by mean and spread across the ensemble.
enum class Averaging { ensemble, time };

/// Output of the correlation, moment and spectral estimators.
///
/// `axis` holds instants (ensemble), lags (time) or frequencies (spectra).
/// `spread` is the population standard deviation across the `population`
/// members that were averaged.
struct StatSeries {
  std::vector<double> axis;
  std::vector<double> mean;
  std::vector<double> spread;
  Averaging averaging = Averaging::ensemble;
  std::size_t population = 0;
  std::vector<std::string> warnings;

  std::size_t size() const { return axis.size(); }
};

namespace detail {

using trajkit::detail::require;

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Mean and population standard deviation over members, point by point.
/// Members are visited in index order, so the result never depends on how
/// the members were computed.
inline void reduce_members(const std::vector<std::vector<double>>& members, StatSeries& out) {
  require(!members.empty(), "nothing to average");
  const std::size_t m = members.front().size();
  const double count = static_cast<double>(members.size());
  out.mean.assign(m, 0.0);
  out.spread.assign(m, 0.0);
  out.population = members.size();
  for (std::size_t k = 0; k < m; ++k) {
    CompensatedSum sum;
    for (const auto& member : members) sum.add(member[k]);
    double mean = sum.value() / count;
    CompensatedSum sq;
    for (const auto& member : members) sq.add((member[k] - mean) * (member[k] - mean));
    out.mean[k] = mean;
    out.spread[k] = std::sqrt(sq.value() / count);
  }
}

struct CommonGrid {
  std::size_t length = 0;
  std::vector<double> t;
  std::vector<std::string> warnings;
};

/// Shared time grid of an ensemble for instant-wise averages. Ragged
/// ensembles are cut to the shortest member; differing instants are an error.
inline CommonGrid common_grid(std::span<const Trajectory> trajs) {
  require(!trajs.empty(), "empty ensemble");
  CommonGrid grid;
  grid.length = trajs.front().size();
  for (const auto& traj : trajs) grid.length = std::min(grid.length, traj.size());
  auto reference = trajs.front().t();
  reference.resize(grid.length);
  bool ragged = false;
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    auto t = trajs[j].t();
    ragged = ragged || t.size() != grid.length;
    t.resize(grid.length);
    if (!times_match(t, reference))
      throw grid_mismatch("trajectory " + std::to_string(j) + " does not share the ensemble time grid");
    if (trajs[j].dim() != trajs.front().dim())
      throw invalid_argument("trajectory " + std::to_string(j) + " has a different dimension");
  }
  if (ragged)
    grid.warnings.push_back("ragged ensemble truncated to " + std::to_string(grid.length) + " samples");
  grid.t = std::move(reference);
  return grid;
}

/// Time spacing used to label lag k; warns when the grid is not uniform.
inline double lag_step(const Trajectory& traj, std::vector<std::string>& warnings) {
  if (auto dt = traj.dt()) return *dt;
  auto t = traj.t();
  warnings.push_back("non-uniform time grid: lag axis uses the mean time step");
  return (t.back() - t.front()) / static_cast<double>(t.size() - 1);
}

inline void require_same_dim(std::span<const Trajectory> trajs) {
  require(!trajs.empty(), "empty ensemble");
  for (std::size_t j = 1; j < trajs.size(); ++j)
    require(trajs[j].dim() == trajs.front().dim(),
            "trajectory " + std::to_string(j) + " has a different dimension");
}

/// Validates a time-average lag (1 <= lag < n for every member), warns when
/// the window exceeds half of the observation time, and returns the lag step.
inline double check_time_lag(std::span<const Trajectory> trajs, std::size_t lag,
                           std::vector<std::string>& warnings) {
  require(lag >= 1, "lag must be at least 1");
  double shortest_span = INFINITY;
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    if (lag >= trajs[j].size())
      throw invalid_argument("lag " + std::to_string(lag) + " is not below the length " +
                             std::to_string(trajs[j].size()) + " of trajectory " + std::to_string(j));
    auto t = trajs[j].t();
    shortest_span = std::min(shortest_span, t.back() - t.front());
  }
  double step = lag_step(trajs.front(), warnings);
  if (static_cast<double>(lag) * step > shortest_span / 2.0)
    warnings.push_back("lag window exceeds half of the observation time; estimates at large lags are noisy");
  return step;
}

}  // namespace detail
}  // namespace trajkit::stats
