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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trajkit/differentiation.hpp"
#include "trajkit/sample_matrix.hpp"
#include "trajkit/time_grid.hpp"

namespace trajkit {

/// Sampled path r(t): positions on a time grid plus the scheme used to derive
/// velocity and acceleration.
///
/// Immutable value type. v() and a() are evaluated on each call from r and t,
/// so they can never go stale; acceleration is the derivative of the velocity
/// estimate. A single-sample trajectory is a valid container, but asking for
/// its kinematics throws kinematics_undefined.
class Trajectory {
 public:
  explicit Trajectory(SampleMatrix r, TimeGrid time = {}, DiffMethod diff = {},
                      std::optional<std::string> id = std::nullopt)
      : r_(std::move(r)), time_(std::move(time)), diff_(diff), id_(std::move(id)) {
    if (auto n = time_.explicit_size(); n && *n != r_.size())
      throw invalid_argument("time vector has " + std::to_string(*n) + " instants but there are " +
                             std::to_string(r_.size()) + " samples");
  }

  std::size_t size() const { return r_.size(); }
  std::size_t dim() const { return r_.dim(); }

  const SampleMatrix& r() const { return r_; }
  const TimeGrid& time_grid() const { return time_; }
  std::vector<double> t() const { return time_.materialize(r_.size()); }
  const DiffMethod& diff_method() const { return diff_; }
  const std::optional<std::string>& id() const { return id_; }

  /// Uniform step of the grid, if it has one.
  std::optional<double> dt() const { return time_.uniform_step(r_.size()); }

  SampleMatrix v() const {
    require_kinematics();
    auto t = this->t();
    return differentiate(r_, t, diff_);
  }

  SampleMatrix a() const {
    require_kinematics();
    auto t = this->t();
    return differentiate(differentiate(r_, t, diff_), t, diff_);
  }

  Trajectory with_positions(SampleMatrix r) const { return Trajectory(std::move(r), time_, diff_, id_); }
  Trajectory with_diff_method(DiffMethod diff) const { return Trajectory(r_, time_, diff, id_); }
  Trajectory with_id(std::optional<std::string> id) const { return Trajectory(r_, time_, diff_, std::move(id)); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  void require_kinematics() const {
    if (r_.size() < diff_.min_samples())
      throw kinematics_undefined("kinematics undefined: trajectory has " + std::to_string(r_.size()) +
                                 " sample(s), the differentiation scheme needs " +
                                 std::to_string(diff_.min_samples()));
  }

  SampleMatrix r_;
  TimeGrid time_;
  DiffMethod diff_;
  std::optional<std::string> id_;
};

using Ensemble = std::vector<Trajectory>;

/// Builds a trajectory from d per-axis sequences of equal length.
inline Trajectory make_trajectory(const std::vector<std::vector<double>>& axes,
                                  std::optional<TimeGrid> time = std::nullopt, DiffMethod diff = {}) {
  return Trajectory(SampleMatrix::from_axes(axes), time.value_or(TimeGrid{}), diff);
}

/// Builds a trajectory from N points of d coordinates each.
inline Trajectory make_trajectory_from_points(const std::vector<std::vector<double>>& points,
                                              std::optional<TimeGrid> time = std::nullopt,
                                              DiffMethod diff = {}) {
  return Trajectory(SampleMatrix::from_rows(points), time.value_or(TimeGrid{}), diff);
}

/// Velocity of `traj` under an explicitly chosen scheme.
inline SampleMatrix differentiate(const Trajectory& traj, const DiffMethod& method) {
  return differentiate(traj.r(), traj.t(), method);
}

}  // namespace trajkit
