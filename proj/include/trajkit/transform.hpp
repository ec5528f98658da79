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
#include <span>
#include <variant>
#include <vector>

#include "trajkit/core.hpp"

namespace trajkit::transform {

/// Exponentially weighted running average of a velocity series,
/// v_s(t) = Omega * integral_0^t exp(-Omega (t - t')) v(t') dt', discretized
/// as the exact decay recurrence
///   v_s[i] = exp(-Omega dt_i) v_s[i-1] + (1 - exp(-Omega dt_i)) v[i],
/// seeded with v_s[0] = v[0]. Stable for any Omega * dt.
inline SampleMatrix exp_filter_velocity(const SampleMatrix& v, std::span<const double> t, double omega) {
  detail::require(std::isfinite(omega) && omega > 0.0, "omega must be positive");
  detail::require(t.size() == v.size(), "time vector length does not match sample count");
  SampleMatrix out = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    double decay = std::exp(-omega * (t[i] - t[i - 1]));
    for (std::size_t k = 0; k < v.dim(); ++k) out(i, k) = decay * out(i - 1, k) + (1.0 - decay) * v(i, k);
  }
  return out;
}

/// Cumulative trapezoidal integral of `v` on `t`, starting at `start`.
inline SampleMatrix integrate_velocity(const SampleMatrix& v, std::span<const double> t,
                                       std::span<const double> start) {
  detail::require(start.size() == v.dim(), "start point dimension mismatch");
  SampleMatrix r(v.size(), v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) r(0, k) = start[k];
  for (std::size_t i = 1; i < v.size(); ++i) {
    double h = t[i] - t[i - 1];
    for (std::size_t k = 0; k < v.dim(); ++k) r(i, k) = r(i - 1, k) + 0.5 * h * (v(i - 1, k) + v(i, k));
  }
  return r;
}

/// Smoothed copy of `traj`: velocity passed through exp_filter_velocity, then
/// positions rebuilt by trapezoidal integration from the original r[0].
inline Trajectory exp_convolutional_filter(const Trajectory& traj, double omega) {
  detail::require(std::isfinite(omega) && omega > 0.0, "omega must be positive");
  auto t = traj.t();
  auto smoothed = exp_filter_velocity(traj.v(), t, omega);
  return traj.with_positions(integrate_velocity(smoothed, t, traj.r().row(0)));
}

namespace detail {

using trajkit::detail::require;

/// Indices [first, first + count) of the `count` nodes nearest x; ties toward earlier nodes.
inline std::size_t nearest_window(const std::vector<double>& t, double x, std::size_t count) {
  auto it = std::lower_bound(t.begin(), t.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - t.begin());
  std::size_t lo;
  if (hi == 0) {
    lo = 0;
  } else if (hi == t.size()) {
    lo = t.size() - 1;
  } else {
    lo = (x - t[hi - 1] <= t[hi] - x) ? hi - 1 : hi;
  }
  std::size_t first = lo, last = lo;  // inclusive
  while (last - first + 1 < count) {
    bool can_left = first > 0, can_right = last + 1 < t.size();
    if (can_left && (!can_right || x - t[first - 1] <= t[last + 1] - x))
      --first;
    else
      ++last;
  }
  return first;
}

}  // namespace detail

/// New sampling for resample(): a uniform step from the first instant, or explicit instants.
using ResampleGrid = std::variant<double, std::vector<double>>;

/// Positions interpolated onto a new grid by local polynomials of degree
/// `order` through the order+1 nearest samples. Extrapolation is rejected;
/// velocity and acceleration follow from the trajectory's own scheme.
inline Trajectory resample(const Trajectory& traj, const ResampleGrid& grid, std::size_t order = 1) {
  detail::require(order >= 1, "interpolation order must be at least 1");
  detail::require(order + 1 <= traj.size(), "interpolation order too high for " +
                                                std::to_string(traj.size()) + " samples");
  const auto t = traj.t();
  const double lo = t.front(), hi = t.back();
  const double tol = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});

  std::vector<double> target;
  TimeGrid new_grid;
  if (const double* step = std::get_if<double>(&grid)) {
    detail::require(std::isfinite(*step) && *step > 0.0, "new_dt must be positive");
    for (std::size_t i = 0;; ++i) {
      double ti = lo + static_cast<double>(i) * *step;
      if (ti > hi + tol) break;
      target.push_back(ti);
    }
    new_grid = TimeGrid::uniform(*step, lo);
  } else {
    target = std::get<std::vector<double>>(grid);
    new_grid = TimeGrid::explicit_times(target);
    for (double x : target)
      if (x < lo - tol || x > hi + tol)
        throw invalid_argument("resample would extrapolate to t = " + std::to_string(x));
  }

  const std::size_t nodes = order + 1, d = traj.dim();
  const auto& r = traj.r();
  SampleMatrix out(target.size(), d);
  for (std::size_t i = 0; i < target.size(); ++i) {
    double x = target[i];
    std::size_t first = detail::nearest_window(t, x, nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      double basis = 1.0;
      for (std::size_t m = 0; m < nodes; ++m)
        if (m != j) basis *= (x - t[first + m]) / (t[first + j] - t[first + m]);
      for (std::size_t k = 0; k < d; ++k) out(i, k) += basis * r(first + j, k);
    }
  }
  return Trajectory(std::move(out), std::move(new_grid), traj.diff_method(), traj.id());
}

/// Keeps samples 0, step, 2*step, ...; n' = ceil(n / step).
inline Trajectory subsample(const Trajectory& traj, std::size_t step) {
  detail::require(step >= 1, "step must be at least 1");
  const std::size_t n = traj.size(), d = traj.dim();
  const std::size_t kept = (n + step - 1) / step;
  SampleMatrix out(kept, d);
  for (std::size_t i = 0; i < kept; ++i)
    for (std::size_t k = 0; k < d; ++k) out(i, k) = traj.r()(i * step, k);

  TimeGrid grid;
  if (traj.time_grid().is_uniform()) {
    const auto& u = traj.time_grid().uniform_params();
    grid = TimeGrid::uniform(u.dt * static_cast<double>(step), u.t0);
  } else {
    auto t = traj.t();
    std::vector<double> kept_t(kept);
    for (std::size_t i = 0; i < kept; ++i) kept_t[i] = t[i * step];
    grid = TimeGrid::explicit_times(std::move(kept_t));
  }
  return Trajectory(std::move(out), std::move(grid), traj.diff_method(), traj.id());
}

}  // namespace trajkit::transform
