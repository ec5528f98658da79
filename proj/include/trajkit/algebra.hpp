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

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "trajkit/trajectory.hpp"

namespace trajkit {

enum class PointwiseOp { add, sub, mul };

/// Throws unless a and b have the same dimension, length and time grid
/// (element-wise within 1e-9 relative). Unequal lengths are rejected, never truncated.
inline void require_combinable(const Trajectory& a, const Trajectory& b) {
  if (a.dim() != b.dim())
    throw invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()));
  if (a.size() != b.size())
    throw grid_mismatch("length mismatch: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()) + " samples");
  if (!times_match(a.t(), b.t())) throw grid_mismatch("time grids differ");
}

/// Point-wise sum, difference or product of positions; keeps a's grid and scheme.
inline Trajectory combine(const Trajectory& a, const Trajectory& b, PointwiseOp op) {
  require_combinable(a, b);
  std::vector<double> out(a.r().data().begin(), a.r().data().end());
  auto rhs = b.r().data();
  for (std::size_t j = 0; j < out.size(); ++j) {
    switch (op) {
      case PointwiseOp::add: out[j] += rhs[j]; break;
      case PointwiseOp::sub: out[j] -= rhs[j]; break;
      case PointwiseOp::mul: out[j] *= rhs[j]; break;
    }
  }
  return a.with_positions(SampleMatrix(std::move(out), a.size(), a.dim()));
}

inline Trajectory operator+(const Trajectory& a, const Trajectory& b) { return combine(a, b, PointwiseOp::add); }
inline Trajectory operator-(const Trajectory& a, const Trajectory& b) { return combine(a, b, PointwiseOp::sub); }
inline Trajectory operator*(const Trajectory& a, const Trajectory& b) { return combine(a, b, PointwiseOp::mul); }

/// r_i <- scale * r_i + offset per axis. `offset` and `scale` hold 1 (broadcast)
/// or d entries. When `axes` is given only those axes are touched.
inline Trajectory shift_scale(const Trajectory& traj, std::span<const double> offset,
                              std::span<const double> scale,
                              std::optional<std::vector<std::size_t>> axes = std::nullopt) {
  const std::size_t d = traj.dim();
  detail::require(offset.size() == 1 || offset.size() == d, "offset must have 1 or d entries");
  detail::require(scale.size() == 1 || scale.size() == d, "scale must have 1 or d entries");
  std::vector<bool> selected(d, !axes.has_value());
  if (axes) {
    for (std::size_t k : *axes) {
      detail::require(k < d, "axis index " + std::to_string(k) + " out of range");
      selected[k] = true;
    }
  }
  SampleMatrix r = traj.r();
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (!selected[k]) continue;
      double s = scale.size() == 1 ? scale[0] : scale[k];
      double o = offset.size() == 1 ? offset[0] : offset[k];
      r(i, k) = s * r(i, k) + o;
    }
  }
  return traj.with_positions(std::move(r));
}

inline Trajectory shift(const Trajectory& traj, std::span<const double> offset) {
  const double one = 1.0;
  return shift_scale(traj, offset, std::span<const double>(&one, 1));
}

inline Trajectory scale(const Trajectory& traj, std::span<const double> factor) {
  const double zero = 0.0;
  return shift_scale(traj, std::span<const double>(&zero, 1), factor);
}

inline Trajectory scale(const Trajectory& traj, double factor) {
  return scale(traj, std::span<const double>(&factor, 1));
}

/// Translates every sample by -point, e.g. `traj - traj.r().row(0)`.
inline Trajectory operator-(const Trajectory& traj, std::span<const double> point) {
  std::vector<double> offset(point.begin(), point.end());
  for (double& o : offset) o = -o;
  return shift(traj, offset);
}

inline Trajectory operator+(const Trajectory& traj, std::span<const double> point) {
  return shift(traj, point);
}

/// Planar rotation by `angle` (counter-clockwise) about `pivot`.
inline Trajectory rotate_2d(const Trajectory& traj, double angle,
                            std::array<double, 2> pivot = {0.0, 0.0}) {
  detail::require(traj.dim() == 2, "rotate_2d needs a 2-dimensional trajectory");
  const double c = std::cos(angle), s = std::sin(angle);
  SampleMatrix r = traj.r();
  for (std::size_t i = 0; i < r.size(); ++i) {
    double x = r(i, 0) - pivot[0], y = r(i, 1) - pivot[1];
    r(i, 0) = c * x - s * y + pivot[0];
    r(i, 1) = s * x + c * y + pivot[1];
  }
  return traj.with_positions(std::move(r));
}

/// Rotation by `angle` about `axis` (right-hand rule) through `pivot`, via Rodrigues' formula.
inline Trajectory rotate_3d(const Trajectory& traj, std::array<double, 3> axis, double angle,
                            std::array<double, 3> pivot = {0.0, 0.0, 0.0}) {
  detail::require(traj.dim() == 3, "rotate_3d needs a 3-dimensional trajectory");
  double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  detail::require(len > 0.0 && std::isfinite(len), "rotation axis must be non-zero");
  const double ux = axis[0] / len, uy = axis[1] / len, uz = axis[2] / len;
  const double c = std::cos(angle), s = std::sin(angle), k = 1.0 - c;
  const double m[3][3] = {
      {c + ux * ux * k, ux * uy * k - uz * s, ux * uz * k + uy * s},
      {uy * ux * k + uz * s, c + uy * uy * k, uy * uz * k - ux * s},
      {uz * ux * k - uy * s, uz * uy * k + ux * s, c + uz * uz * k},
  };
  SampleMatrix r = traj.r();
  for (std::size_t i = 0; i < r.size(); ++i) {
    double p[3] = {r(i, 0) - pivot[0], r(i, 1) - pivot[1], r(i, 2) - pivot[2]};
    for (std::size_t a = 0; a < 3; ++a)
      r(i, a) = m[a][0] * p[0] + m[a][1] * p[1] + m[a][2] * p[2] + pivot[a];
  }
  return traj.with_positions(std::move(r));
}

/// Shifts every sample in polar coordinates about the origin:
/// (rho_i, phi_i) -> (rho_i + radius, phi_i + angle).
///
/// This is a per-sample radial offset, not a rigid translation. It maps a marker
/// riding at fixed radial distance from a body's center onto that center.
inline Trajectory add_polar_offset(const Trajectory& traj, double radius, double angle) {
  detail::require(traj.dim() == 2, "add_polar_offset needs a 2-dimensional trajectory");
  SampleMatrix r = traj.r();
  for (std::size_t i = 0; i < r.size(); ++i) {
    double rho = std::hypot(r(i, 0), r(i, 1));
    double phi = std::atan2(r(i, 1), r(i, 0));
    double new_rho = rho + radius;
    if (new_rho < 0.0)
      throw invalid_argument("polar offset makes the radius negative at sample " + std::to_string(i));
    r(i, 0) = new_rho * std::cos(phi + angle);
    r(i, 1) = new_rho * std::sin(phi + angle);
  }
  return traj.with_positions(std::move(r));
}

}  // namespace trajkit
