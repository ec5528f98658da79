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
#include <vector>

#include "trajkit/stats/series.hpp"

namespace trajkit::stats {

enum class Quantity { position, velocity, speed };

/// Rows pulled out of an ensemble, with the trajectory and sample each row came from.
struct Collected {
  SampleMatrix values;
  std::vector<std::size_t> trajectory;
  std::vector<std::size_t> sample;
};

namespace detail {

inline std::size_t nearest_index(const std::vector<double>& t, double instant) {
  auto it = std::lower_bound(t.begin(), t.end(), instant);
  if (it == t.begin()) return 0;
  if (it == t.end()) return t.size() - 1;
  std::size_t hi = static_cast<std::size_t>(it - t.begin());
  // Ties go to the earlier sample.
  return (instant - t[hi - 1] <= t[hi] - instant) ? hi - 1 : hi;
}

}  // namespace detail

/// The quantity at the grid point nearest each requested instant, for every
/// trajectory (no interpolation). Rows are ordered trajectory-major.
inline Collected collect_at(std::span<const Trajectory> trajs, Quantity quantity,
                            std::span<const double> instants) {
  detail::require_same_dim(trajs);
  detail::require(!instants.empty(), "no instants requested");
  const std::size_t width = quantity == Quantity::speed ? 1 : trajs.front().dim();
  std::vector<double> rows;
  Collected out{SampleMatrix(1, 1), {}, {}};
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    auto t = trajs[j].t();
    for (double instant : instants) {
      const double tol = 1e-9 * std::max(1.0, std::abs(instant));
      if (instant < t.front() - tol || instant > t.back() + tol)
        throw invalid_argument("instant " + std::to_string(instant) + " lies outside trajectory " +
                               std::to_string(j));
    }
    SampleMatrix source = quantity == Quantity::position ? trajs[j].r() : trajs[j].v();
    for (double instant : instants) {
      std::size_t i = detail::nearest_index(t, instant);
      if (quantity == Quantity::speed) {
        double sq = 0.0;
        for (double c : source.row(i)) sq += c * c;
        rows.push_back(std::sqrt(sq));
      } else {
        auto row = source.row(i);
        rows.insert(rows.end(), row.begin(), row.end());
      }
      out.trajectory.push_back(j);
      out.sample.push_back(i);
    }
  }
  out.values = SampleMatrix(std::move(rows), out.trajectory.size(), width);
  return out;
}

/// Sliding-window samples at a fixed lag: position increments r_{i+lag} - r_i,
/// or (for velocity/speed) the mean velocity over the window,
/// (r_{i+lag} - r_i) / (t_{i+lag} - t_i), and its norm. `sample` holds i.
inline Collected collect_lag(std::span<const Trajectory> trajs, Quantity quantity, std::size_t lag) {
  detail::require_same_dim(trajs);
  detail::require(lag >= 1, "lag must be at least 1");
  const std::size_t d = trajs.front().dim();
  const std::size_t width = quantity == Quantity::speed ? 1 : d;
  std::vector<double> rows;
  Collected out{SampleMatrix(1, 1), {}, {}};
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    const auto& r = trajs[j].r();
    if (lag >= r.size())
      throw invalid_argument("lag " + std::to_string(lag) + " is not below the length of trajectory " +
                             std::to_string(j));
    auto t = trajs[j].t();
    for (std::size_t i = 0; i + lag < r.size(); ++i) {
      double span = t[i + lag] - t[i];
      double sq = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        double inc = r(i + lag, k) - r(i, k);
        double value = quantity == Quantity::position ? inc : inc / span;
        sq += value * value;
        if (quantity != Quantity::speed) rows.push_back(value);
      }
      if (quantity == Quantity::speed) rows.push_back(std::sqrt(sq));
      out.trajectory.push_back(j);
      out.sample.push_back(i);
    }
  }
  out.values = SampleMatrix(std::move(rows), out.trajectory.size(), width);
  return out;
}

}  // namespace trajkit::stats
