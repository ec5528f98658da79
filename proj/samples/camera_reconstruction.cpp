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

// A camera pans and rotates over a scene while it films a moving object. The
// per-frame motion is fitted from background points, accumulated into a
// camera path, and used to put the object back into the lab frame.

#include <cmath>
#include <cstdio>
#include <vector>

#include "trajkit/trajkit.hpp"

int main() {
  using namespace trajkit;
  using reconstruct::Point2;

  const std::size_t frames = 60;
  std::vector<Point2> background;
  for (int gx = -3; gx <= 3; ++gx)
    for (int gy = -3; gy <= 3; ++gy) background.push_back({10.0 * gx + 0.3 * gy, 10.0 * gy - 0.2 * gx});

  auto camera_angle = [](double i) { return 0.01 * i; };
  auto camera_pos = [](double i) { return Point2{0.5 * i, 2.0 * std::sin(0.1 * i)}; };
  auto to_camera = [](double alpha, const Point2& c, const Point2& p) {
    double dx = p[0] - c[0], dy = p[1] - c[1];
    return Point2{std::cos(alpha) * dx - std::sin(alpha) * dy, std::sin(alpha) * dx + std::cos(alpha) * dy};
  };

  std::vector<reconstruct::PointCorrespondences> pairs;
  SampleMatrix object_in_camera(frames, 2);
  std::vector<Point2> truth;
  for (std::size_t i = 0; i < frames; ++i) {
    double fi = static_cast<double>(i);
    Point2 obj{3.0 * std::cos(0.05 * fi), 3.0 * std::sin(0.05 * fi)};
    truth.push_back(obj);
    auto seen = to_camera(camera_angle(fi), camera_pos(fi), obj);
    object_in_camera(i, 0) = seen[0];
    object_in_camera(i, 1) = seen[1];
    if (i == 0) continue;
    reconstruct::PointCorrespondences c;
    for (const auto& p : background) {
      c.src.push_back(to_camera(camera_angle(fi - 1), camera_pos(fi - 1), p));
      c.dst.push_back(to_camera(camera_angle(fi), camera_pos(fi), p));
    }
    pairs.push_back(std::move(c));
  }

  auto poses = reconstruct::estimate_affine_sequence(pairs);
  auto path = reconstruct::accumulate_camera_path(poses);
  auto lab = reconstruct::object_to_lab(object_in_camera, path, 30.0);

  double worst = 0.0;
  for (std::size_t i = 0; i < frames; ++i)
    worst = std::max(worst, std::hypot(lab.r()(i, 0) - truth[i][0], lab.r()(i, 1) - truth[i][1]));
  std::printf("frames: %zu  final camera angle: %.4f rad  largest lab-frame error: %.3g\n", frames,
              path.alpha.back(), worst);
  return 0;
}
