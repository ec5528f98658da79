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
#include <span>
#include <string>
#include <vector>

#include "trajkit/error.hpp"
#include "trajkit/sample_matrix.hpp"

namespace trajkit {

enum class FiniteDifference { forward, backward, central };

/// Numerical differentiation scheme used to derive velocity and acceleration.
struct DiffMethod {
  enum class Scheme { linear, fornberg };

  Scheme scheme = Scheme::linear;
  FiniteDifference variant = FiniteDifference::central;
  /// Stencil size for Fornberg weights; odd and >= 3.
  std::size_t window = 3;

  static DiffMethod linear(FiniteDifference v = FiniteDifference::central) {
    return {Scheme::linear, v, 3};
  }
  static DiffMethod fornberg(std::size_t window) {
    detail::require(window >= 3 && window % 2 == 1, "Fornberg window must be odd and >= 3");
    return {Scheme::fornberg, FiniteDifference::central, window};
  }

  /// Samples needed before the scheme can produce a derivative.
  std::size_t min_samples() const { return scheme == Scheme::fornberg ? window : 2; }

  friend bool operator==(const DiffMethod&, const DiffMethod&) = default;
};

/// Finite-difference weights for derivatives 0..max_order at x0 over arbitrary
/// distinct nodes (Fornberg's recursion). Result[k][j] multiplies f(nodes[j])
/// in the k-th derivative estimate.
inline std::vector<std::vector<double>> fornberg_weights(std::span<const double> nodes, double x0,
                                                        std::size_t max_order) {
  const std::size_t n = nodes.size();
  detail::require(n > max_order, "need more nodes than the derivative order");
  std::vector<std::vector<double>> c(max_order + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t mn = std::min(i, max_order);
    double c2 = 1.0;
    double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          c[k][i] = c1 * (static_cast<double>(k) * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k)
        c[k][j] = (c4 * c[k][j] - static_cast<double>(k) * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

/// First index of the Fornberg stencil used at sample i: centered, shifted inward at the ends.
inline std::size_t fornberg_stencil_start(std::size_t i, std::size_t n, std::size_t window) {
  std::size_t half = window / 2;
  std::size_t start = i >= half ? i - half : 0;
  return std::min(start, n - window);
}

/// Time derivative of every axis of `samples` on instants `t`.
///
/// Linear schemes use one-sided differences where the stencil would leave the
/// data: forward at the first sample and backward at the last.
inline SampleMatrix differentiate(const SampleMatrix& samples, std::span<const double> t,
                                  const DiffMethod& method) {
  const std::size_t n = samples.size();
  const std::size_t d = samples.dim();
  detail::require(t.size() == n, "time vector length does not match sample count");
  if (n < method.min_samples())
    throw kinematics_undefined("differentiation needs at least " +
                               std::to_string(method.min_samples()) + " samples, got " +
                               std::to_string(n));

  std::vector<double> out(n * d);
  auto slope = [&](std::size_t hi, std::size_t lo, std::size_t i) {
    double h = t[hi] - t[lo];
    for (std::size_t k = 0; k < d; ++k) out[i * d + k] = (samples(hi, k) - samples(lo, k)) / h;
  };

  if (method.scheme == DiffMethod::Scheme::linear) {
    for (std::size_t i = 0; i < n; ++i) {
      switch (method.variant) {
        case FiniteDifference::forward:
          i + 1 < n ? slope(i + 1, i, i) : slope(i, i - 1, i);
          break;
        case FiniteDifference::backward:
          i > 0 ? slope(i, i - 1, i) : slope(1, 0, i);
          break;
        case FiniteDifference::central:
          if (i == 0)
            slope(1, 0, i);
          else if (i + 1 == n)
            slope(i, i - 1, i);
          else
            slope(i + 1, i - 1, i);
          break;
      }
    }
  } else {
    const std::size_t w = method.window;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t start = fornberg_stencil_start(i, n, w);
      auto weights = fornberg_weights(t.subspan(start, w), t[i], 1);
      for (std::size_t k = 0; k < d; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < w; ++j) acc += weights[1][j] * samples(start + j, k);
        out[i * d + k] = acc;
      }
    }
  }
  return {std::move(out), n, d};
}

}  // namespace trajkit
