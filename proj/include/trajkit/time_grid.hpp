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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "trajkit/error.hpp"

namespace trajkit {

struct UniformTime {
  double dt = 1.0;
  double t0 = 0.0;
  friend bool operator==(const UniformTime&, const UniformTime&) = default;
};

/// Sampling instants of a trajectory: either t_i = t0 + i*dt or an explicit,
/// strictly increasing list. Default is dt = 1 starting at 0.
class TimeGrid {
 public:
  TimeGrid() = default;

  static TimeGrid uniform(double dt, double t0 = 0.0) {
    detail::require(std::isfinite(dt) && dt > 0.0, "time step must be positive");
    detail::require(std::isfinite(t0), "start time must be finite");
    TimeGrid grid;
    grid.kind_ = UniformTime{dt, t0};
    return grid;
  }

  static TimeGrid explicit_times(std::vector<double> t) {
    detail::require(!t.empty(), "explicit time vector is empty");
    for (std::size_t i = 0; i < t.size(); ++i) {
      detail::require(std::isfinite(t[i]), "time " + std::to_string(i) + " is not finite");
      if (i > 0 && !(t[i] > t[i - 1]))
        throw invalid_argument("time vector is not strictly increasing at index " + std::to_string(i));
    }
    TimeGrid grid;
    grid.kind_ = std::move(t);
    return grid;
  }

  bool is_uniform() const { return std::holds_alternative<UniformTime>(kind_); }

  const UniformTime& uniform_params() const {
    if (!is_uniform()) throw invalid_argument("time grid is explicit, not uniform");
    return std::get<UniformTime>(kind_);
  }

  /// Number of instants fixed by the grid itself; empty for uniform grids.
  std::optional<std::size_t> explicit_size() const {
    if (is_uniform()) return std::nullopt;
    return std::get<std::vector<double>>(kind_).size();
  }

  std::vector<double> materialize(std::size_t n) const {
    if (auto* u = std::get_if<UniformTime>(&kind_)) {
      std::vector<double> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = u->t0 + static_cast<double>(i) * u->dt;
      return t;
    }
    const auto& t = std::get<std::vector<double>>(kind_);
    detail::require(t.size() == n, "time grid has " + std::to_string(t.size()) +
                                       " instants, expected " + std::to_string(n));
    return t;
  }

  /// First n instants as a grid of the same kind.
  TimeGrid prefix(std::size_t n) const {
    if (is_uniform()) return *this;
    const auto& t = std::get<std::vector<double>>(kind_);
    detail::require(n >= 1 && n <= t.size(), "prefix length out of range");
    return explicit_times({t.begin(), t.begin() + static_cast<std::ptrdiff_t>(n)});
  }

  /// Time step when the first n instants are evenly spaced (exactly for uniform
  /// grids, within 1e-9 relative for explicit ones).
  std::optional<double> uniform_step(std::size_t n) const {
    if (auto* u = std::get_if<UniformTime>(&kind_)) return u->dt;
    const auto& t = std::get<std::vector<double>>(kind_);
    if (n < 2 || t.size() < n) return std::nullopt;
    double dt = (t[n - 1] - t[0]) / static_cast<double>(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      double expected = t[0] + static_cast<double>(i) * dt;
      if (std::abs(t[i] - expected) > 1e-9 * std::max({1.0, std::abs(t[i]), dt})) return std::nullopt;
    }
    return dt;
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  std::variant<UniformTime, std::vector<double>> kind_ = UniformTime{};
};

/// Element-wise equality of two time vectors within 1e-9 * max(1, |t|).
inline bool times_match(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    if (std::abs(a[i] - b[i]) > 1e-9 * scale) return false;
  }
  return true;
}

}  // namespace trajkit
