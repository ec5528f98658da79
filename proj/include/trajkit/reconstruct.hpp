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
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "trajkit/core.hpp"
#include "trajkit/parallel.hpp"

namespace trajkit::reconstruct {

using Point2 = std::array<double, 2>;

/// Background points tracked from frame i-1 (src) to frame i (dst).
struct PointCorrespondences {
  std::vector<Point2> src;
  std::vector<Point2> dst;
};

/// Motion between consecutive frames under the model
///   [x']   [s cos(theta)  -sin(theta)] [x]   [tx]
///   [y'] = [sin(theta)   s cos(theta)] [y] + [ty]
/// Note that s scales only the cosine terms.
struct AffinePose {
  double theta = 0.0;
  Point2 t{0.0, 0.0};
  double s = 1.0;
  double mse = 0.0;
  bool valid = true;

  bool operator==(const AffinePose&) const = default;
};

struct AffineThresholds {
  double mse = 1.0;
  double scale = 0.05;
};

inline Point2 apply_affine(const AffinePose& pose, const Point2& p) {
  const double a = pose.s * std::cos(pose.theta), b = std::sin(pose.theta);
  return {a * p[0] - b * p[1] + pose.t[0], b * p[0] + a * p[1] + pose.t[1]};
}

/// Linear least squares in (a, b, tx, ty) with a = s cos(theta), b = sin(theta).
/// mse is the mean of all 2K squared residual components.
inline AffinePose estimate_affine(const PointCorrespondences& corr, const AffineThresholds& thresholds = {}) {
  const std::size_t k = corr.src.size();
  detail::require(k == corr.dst.size(), "src and dst must hold the same number of points");
  detail::require(k >= 2, "need at least two point correspondences");
  for (std::size_t i = 0; i < k; ++i)
    for (int c = 0; c < 2; ++c)
      detail::require(std::isfinite(corr.src[i][c]) && std::isfinite(corr.dst[i][c]),
                      "correspondence " + std::to_string(i) + " has a non-finite coordinate");

  Eigen::MatrixXd A(2 * k, 4);
  Eigen::VectorXd y(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = corr.src[i];
    A.row(2 * i) << p[0], -p[1], 1.0, 0.0;
    A.row(2 * i + 1) << p[1], p[0], 0.0, 1.0;
    y(2 * i) = corr.dst[i][0];
    y(2 * i + 1) = corr.dst[i][1];
  }

  Eigen::Matrix4d normal = A.transpose() * A;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(normal, Eigen::EigenvaluesOnly);
  const double top = eig.eigenvalues().maxCoeff();
  if (!(top > 0.0) || eig.eigenvalues().minCoeff() <= 1e-12 * top)
    throw degenerate_fit("correspondences do not determine the affine parameters (singular normal matrix)");

  Eigen::Vector4d x = A.colPivHouseholderQr().solve(y);
  const double a = x(0), b = x(1);
  if (std::abs(b) > 1.0 + 1e-9)
    throw degenerate_fit("fitted sin(theta) = " + std::to_string(b) + " lies outside [-1, 1]");

  AffinePose pose;
  pose.theta = std::asin(std::clamp(b, -1.0, 1.0));
  pose.s = a / std::cos(pose.theta);
  pose.t = {x(2), x(3)};
  pose.mse = (A * x - y).squaredNorm() / static_cast<double>(2 * k);
  pose.valid = pose.mse <= thresholds.mse && std::abs(pose.s - 1.0) <= thresholds.scale;
  return pose;
}

/// One fit per frame pair, evaluated in parallel.
inline std::vector<AffinePose> estimate_affine_sequence(std::span<const PointCorrespondences> frames,
                                                        const AffineThresholds& thresholds = {}) {
  std::vector<AffinePose> poses(frames.size());
  parallel_for(frames.size(), [&](std::size_t i) { poses[i] = estimate_affine(frames[i], thresholds); });
  return poses;
}

struct CameraAnchor {
  double alpha = 0.0;
  Point2 r{0.0, 0.0};
};

/// Camera orientation and lab position per frame; frame 0 is the anchor.
struct CameraPath {
  std::vector<double> alpha;
  std::vector<Point2> r_cl;

  std::size_t size() const { return alpha.size(); }
  CameraAnchor at(std::size_t i) const { return {alpha.at(i), r_cl.at(i)}; }
};

namespace detail {

using trajkit::detail::require;

inline Point2 rotate(double angle, const Point2& p) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p[0] - s * p[1], s * p[0] + c * p[1]};
}

}  // namespace detail

/// poses[i] carries frame i to frame i+1, so the path has poses.size() + 1 frames.
///   alpha_i = alpha_{i-1} + theta_i
///   r_i     = R^-1(alpha_i) (-t_i) + r_{i-1}
/// Invalid poses are rejected unless `accept_invalid[i]` is set.
inline CameraPath accumulate_camera_path(std::span<const AffinePose> poses, const CameraAnchor& anchor = {},
                                         const std::vector<bool>& accept_invalid = {}) {
  detail::require(accept_invalid.empty() || accept_invalid.size() == poses.size(),
                  "override mask must have one entry per pose");
  CameraPath path;
  path.alpha.reserve(poses.size() + 1);
  path.r_cl.reserve(poses.size() + 1);
  path.alpha.push_back(anchor.alpha);
  path.r_cl.push_back(anchor.r);
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto& pose = poses[i];
    if (!pose.valid && (accept_invalid.empty() || !accept_invalid[i]))
      throw invalid_argument("pose " + std::to_string(i) + " is invalid (mse " + std::to_string(pose.mse) +
                             ", s " + std::to_string(pose.s) + ") and has no override");
    double alpha = path.alpha.back() + pose.theta;
    Point2 step = detail::rotate(-alpha, {-pose.t[0], -pose.t[1]});
    const Point2& prev = path.r_cl.back();
    path.alpha.push_back(alpha);
    path.r_cl.push_back({step[0] + prev[0], step[1] + prev[1]});
  }
  return path;
}

/// Lab-frame object positions r_i = R^-1(alpha_i) r_oc_i + r_cl_i. Time is the
/// frame index, or frame / fps when a frame rate is given.
inline Trajectory object_to_lab(const SampleMatrix& r_oc, const CameraPath& path,
                                std::optional<double> fps = std::nullopt) {
  detail::require(r_oc.dim() == 2, "object positions must be 2-dimensional");
  if (r_oc.size() != path.size())
    throw invalid_argument("object track has " + std::to_string(r_oc.size()) + " frames but the camera path has " +
                           std::to_string(path.size()));
  if (fps) detail::require(std::isfinite(*fps) && *fps > 0.0, "fps must be positive");
  SampleMatrix lab(r_oc.size(), 2);
  parallel_for(r_oc.size(), [&](std::size_t i) {
    Point2 p = detail::rotate(-path.alpha[i], {r_oc(i, 0), r_oc(i, 1)});
    lab(i, 0) = p[0] + path.r_cl[i][0];
    lab(i, 1) = p[1] + path.r_cl[i][1];
  });
  return Trajectory(std::move(lab), TimeGrid::uniform(fps ? 1.0 / *fps : 1.0));
}

/// |v| of the wheel centre divided by the no-slip speed omega * R. The wheel
/// centre is found by pushing the pivot-centred LED track `offset` further out
/// radially, then referring it to its starting point.
inline std::vector<double> rolling_efficiency(const Trajectory& led, const Trajectory& pivot, double offset,
                                              double omega, double radius) {
  detail::require(omega > 0.0 && radius > 0.0, "omega and radius must be positive");
  Trajectory led_centered = led - pivot;
  Trajectory wheel_centered = add_polar_offset(led_centered, offset, 0.0);
  std::vector<double> start(wheel_centered.r().row(0).begin(), wheel_centered.r().row(0).end());
  Trajectory wheel = wheel_centered - std::span<const double>(start);
  auto speed = wheel.v().norm();
  const double v_max = omega * radius;
  for (double& s : speed) s /= v_max;
  return speed;
}

/// A wheel driven at constant angular velocity while orbiting a fixed pivot,
/// with a prescribed slip profile eta(t) = mean + amplitude sin(frequency t).
struct WheelRunConfig {
  double omega = 4.0;
  double wheel_radius = 0.07;
  double led_offset = 0.039;
  double orbit_radius = 0.25;
  double fps = 30.0;
  double duration = 20.0;
  double slip_mean = 0.8;
  double slip_amplitude = 0.1;
  double slip_frequency = 0.5;
  Point2 pivot{0.4, 0.3};
};

struct WheelRun {
  Trajectory led;
  Trajectory pivot;
  std::vector<double> slip;
};

inline WheelRun synthesize_wheel_run(const WheelRunConfig& cfg = {}) {
  detail::require(cfg.orbit_radius > cfg.led_offset, "orbit radius must exceed the LED offset");
  detail::require(cfg.fps > 0.0 && cfg.duration > 0.0, "fps and duration must be positive");
  detail::require(cfg.slip_frequency > 0.0, "slip frequency must be positive");
  const std::size_t n = static_cast<std::size_t>(std::llround(cfg.duration * cfg.fps)) + 1;
  const double dt = 1.0 / cfg.fps;
  const double rate = cfg.omega * cfg.wheel_radius / cfg.orbit_radius;
  const double led_radius = cfg.orbit_radius - cfg.led_offset;
  SampleMatrix led(n, 2), pivot(n, 2);
  std::vector<double> slip(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = static_cast<double>(i) * dt;
    double phase = rate * (cfg.slip_mean * t +
                           cfg.slip_amplitude * (1.0 - std::cos(cfg.slip_frequency * t)) / cfg.slip_frequency);
    led(i, 0) = cfg.pivot[0] + led_radius * std::cos(phase);
    led(i, 1) = cfg.pivot[1] + led_radius * std::sin(phase);
    pivot(i, 0) = cfg.pivot[0];
    pivot(i, 1) = cfg.pivot[1];
    slip[i] = cfg.slip_mean + cfg.slip_amplitude * std::sin(cfg.slip_frequency * t);
  }
  auto grid = TimeGrid::uniform(dt);
  return {Trajectory(std::move(led), grid, {}, "led"), Trajectory(std::move(pivot), grid, {}, "pivot"),
          std::move(slip)};
}

}  // namespace trajkit::reconstruct
