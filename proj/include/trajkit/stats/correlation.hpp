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

#include <cmath>
#include <span>
#include <vector>

#include "trajkit/fft.hpp"
#include "trajkit/parallel.hpp"
#include "trajkit/stats/series.hpp"

namespace trajkit::stats {

/// Time-averaged velocity autocorrelation of one velocity series:
/// C(k) = 1/(n-k) sum_i v_i . v_{i+k} for k in [0, lag).
inline std::vector<double> time_averaged_vacf(const SampleMatrix& v, std::size_t lag) {
  const std::size_t n = v.size();
  detail::require(lag >= 1 && lag <= n, "lag out of range");
  std::vector<double> c(lag, 0.0);
  for (std::size_t k = 0; k < v.dim(); ++k) {
    auto axis = v.axis(k);
    auto s = fft::autocorrelation(axis, lag);
    for (std::size_t j = 0; j < lag; ++j) c[j] += s[j];
  }
  for (std::size_t j = 0; j < lag; ++j) c[j] /= static_cast<double>(n - j);
  return c;
}

/// Time-averaged mean square displacement of one position series:
/// MSD(k) = 1/(n-k) sum_i |r_{i+k} - r_i|^2 for k in [0, lag), MSD(0) = 0.
///
/// Expands the square into prefix sums of r^2 and an FFT autocorrelation.
/// Each axis is centered first; the statistic is translation invariant and
/// centering keeps the cancellation error at the scale of the excursions.
inline std::vector<double> time_averaged_msd(const SampleMatrix& r, std::size_t lag) {
  const std::size_t n = r.size();
  detail::require(lag >= 1 && lag <= n, "lag out of range");
  std::vector<double> msd(lag, 0.0);
  std::vector<double> prefix(n + 1);
  for (std::size_t k = 0; k < r.dim(); ++k) {
    auto x = r.axis(k);
    detail::CompensatedSum total;
    for (double value : x) total.add(value);
    const double mean = total.value() / static_cast<double>(n);
    for (double& value : x) value -= mean;
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + x[i] * x[i];
    auto s = fft::autocorrelation(x, lag);
    for (std::size_t j = 1; j < lag; ++j) {
      // sum_{i=j}^{n-1} x_i^2 + sum_{i=0}^{n-1-j} x_i^2 - 2 S_j
      double value = (prefix[n] - prefix[j]) + prefix[n - j] - 2.0 * s[j];
      msd[j] += std::max(0.0, value);
    }
  }
  for (std::size_t j = 1; j < lag; ++j) msd[j] /= static_cast<double>(n - j);
  return msd;
}

namespace detail {

template <typename PerMember>
StatSeries time_average(std::span<const Trajectory> trajs, std::size_t lag, PerMember&& per_member) {
  require_same_dim(trajs);
  StatSeries out;
  out.averaging = Averaging::time;
  double step = check_time_lag(trajs, lag, out.warnings);
  std::vector<std::vector<double>> members(trajs.size());
  parallel_for(trajs.size(), [&](std::size_t j) { members[j] = per_member(trajs[j]); });
  reduce_members(members, out);
  out.axis.resize(lag);
  for (std::size_t k = 0; k < lag; ++k) out.axis[k] = static_cast<double>(k) * step;
  return out;
}

/// Shared bookkeeping of ensemble-mode estimators: fixes the instants and
/// collects one value per (trajectory, instant).
template <typename PerMember>
StatSeries ensemble_average(std::span<const Trajectory> trajs, std::size_t lag, PerMember&& per_member) {
  auto grid = common_grid(trajs);
  std::size_t length = grid.length;
  if (lag > 0) {
    require(lag <= grid.length, "lag " + std::to_string(lag) + " exceeds the common length " +
                                    std::to_string(grid.length));
    length = lag;
  }
  StatSeries out;
  out.averaging = Averaging::ensemble;
  out.warnings = std::move(grid.warnings);
  std::vector<std::vector<double>> members(trajs.size());
  parallel_for(trajs.size(), [&](std::size_t j) { members[j] = per_member(trajs[j], length); });
  reduce_members(members, out);
  out.axis.assign(grid.t.begin(), grid.t.begin() + static_cast<std::ptrdiff_t>(length));
  return out;
}

}  // namespace detail

/// Velocity autocorrelation function.
///
/// Ensemble mode: C(t) = E[v(0) . v(t)] at every instant of the shared grid
/// (the first `lag` instants when lag > 0). Time mode: per-trajectory
/// time average for lags 0..lag-1, then mean and spread across the ensemble.
inline StatSeries vacf(std::span<const Trajectory> trajs, Averaging averaging, std::size_t lag = 0) {
  if (averaging == Averaging::time)
    return detail::time_average(trajs, lag,
                                [lag](const Trajectory& t) { return time_averaged_vacf(t.v(), lag); });

  return detail::ensemble_average(trajs, lag, [](const Trajectory& traj, std::size_t length) {
    auto v = traj.v();
    std::vector<double> c(length);
    for (std::size_t i = 0; i < length; ++i) {
      double dot = 0.0;
      for (std::size_t k = 0; k < v.dim(); ++k) dot += v(0, k) * v(i, k);
      c[i] = dot;
    }
    return c;
  });
}

/// Mean square displacement; ensemble mode E[|r(t) - r(0)|^2], time mode the
/// time-averaged MSD for lags 0..lag-1.
inline StatSeries msd(std::span<const Trajectory> trajs, Averaging averaging, std::size_t lag = 0) {
  if (averaging == Averaging::time)
    return detail::time_average(trajs, lag,
                                [lag](const Trajectory& t) { return time_averaged_msd(t.r(), lag); });

  return detail::ensemble_average(trajs, lag, [](const Trajectory& traj, std::size_t length) {
    const auto& r = traj.r();
    std::vector<double> sq(length);
    for (std::size_t i = 0; i < length; ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < r.dim(); ++k) {
        double d = r(i, k) - r(0, k);
        sum += d * d;
      }
      sq[i] = sum;
    }
    return sq;
  });
}

/// Series divided by its first value, e.g. a VACF scaled to C(0) = 1.
inline StatSeries normalized(StatSeries series) {
  detail::require(!series.mean.empty() && series.mean.front() != 0.0,
                  "cannot normalize a series whose first value is zero");
  const double scale = series.mean.front();
  for (double& m : series.mean) m /= scale;
  for (double& s : series.spread) s /= std::abs(scale);
  return series;
}

}  // namespace trajkit::stats
