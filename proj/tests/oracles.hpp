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

// Slow, direct reference implementations used to cross-check the library.
// None of them share code with include/trajkit.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// C(k) = 1/(n-k) sum_i v_i . v_{i+k}
inline std::vector<double> vacf(const Rows& v, std::size_t lag) {
  std::vector<double> c(lag, 0.0);
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < lag; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i + k < n; ++i) s += dot(v[i], v[i + k]);
    c[k] = s / static_cast<double>(n - k);
  }
  return c;
}

// MSD(k) = 1/(n-k) sum_i |r_{i+k} - r_i|^2
inline std::vector<double> msd(const Rows& r, std::size_t lag) {
  std::vector<double> m(lag, 0.0);
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < lag; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i + k < n; ++i)
      for (std::size_t a = 0; a < r[i].size(); ++a) {
        double d = r[i + k][a] - r[i][a];
        s += d * d;
      }
    m[k] = s / static_cast<double>(n - k);
  }
  return m;
}

// First-derivative weights at x0 from the derivative of the Lagrange basis.
inline std::vector<double> lagrange_derivative_weights(const std::vector<double>& x, double x0) {
  const std::size_t m = x.size();
  std::vector<double> w(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double total = 0.0;
    for (std::size_t skip = 0; skip < m; ++skip) {
      if (skip == j) continue;
      double term = 1.0 / (x[j] - x[skip]);
      for (std::size_t l = 0; l < m; ++l)
        if (l != j && l != skip) term *= (x0 - x[l]) / (x[j] - x[l]);
      total += term;
    }
    w[j] = total;
  }
  return w;
}

// Weights for the k-th derivative from the moment conditions
// sum_j w_j (x_j - x0)^m / m! = [m == k], solved as a dense system.
inline std::vector<double> vandermonde_weights(const std::vector<double>& x, double x0, int order) {
  const int m = static_cast<int>(x.size());
  Eigen::MatrixXd A(m, m);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  for (int row = 0; row < m; ++row) {
    double fact = std::tgamma(row + 1.0);
    for (int j = 0; j < m; ++j) A(row, j) = std::pow(x[j] - x0, row) / fact;
  }
  b(order) = 1.0;
  Eigen::VectorXd w = A.fullPivLu().solve(b);
  return {w.data(), w.data() + m};
}

// Mardia kurtosis with an explicit inverse of the ML covariance.
inline double mardia(const Rows& x) {
  const std::size_t n = x.size(), d = x.front().size();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (const auto& row : x)
    for (std::size_t a = 0; a < d; ++a) mu(a) += row[a];
  mu /= static_cast<double>(n);
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(d, d);
  for (const auto& row : x) {
    Eigen::VectorXd c(d);
    for (std::size_t a = 0; a < d; ++a) c(a) = row[a] - mu(a);
    S += c * c.transpose();
  }
  S /= static_cast<double>(n);
  Eigen::MatrixXd inv = S.inverse();
  double total = 0.0;
  for (const auto& row : x) {
    Eigen::VectorXd c(d);
    for (std::size_t a = 0; a < d; ++a) c(a) = row[a] - mu(a);
    double q = c.dot(inv * c);
    total += q * q;
  }
  return total / static_cast<double>(n);
}

// One-sided periodogram by a direct O(n^2) DFT.
inline std::vector<double> periodogram(const std::vector<double>& x, double dt) {
  const std::size_t n = x.size();
  std::vector<double> p(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      s += x[i] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * i % n) / static_cast<double>(n));
    double w = (k == 0 || (n % 2 == 0 && k == n / 2)) ? 1.0 : 2.0;
    p[k] = w * dt * std::norm(s) / static_cast<double>(n);
  }
  return p;
}

// Exact Ornstein-Uhlenbeck transition: v' = v e^{-g dt} + sqrt(s^2/(2g) (1 - e^{-2 g dt})) xi.
inline std::vector<double> exact_ou_path(double gamma, double sigma, double dt, std::size_t n, double v0,
                                         std::mt19937_64& rng) {
  std::normal_distribution<double> xi;
  const double decay = std::exp(-gamma * dt);
  const double noise = std::sqrt(sigma * sigma / (2.0 * gamma) * (1.0 - decay * decay));
  std::vector<double> v(n);
  v[0] = v0;
  for (std::size_t i = 1; i < n; ++i) v[i] = v[i - 1] * decay + noise * xi(rng);
  return v;
}

// Lagrange interpolation through explicit nodes.
inline double lagrange(const std::vector<double>& x, const std::vector<double>& y, double at) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    double b = 1.0;
    for (std::size_t m = 0; m < x.size(); ++m)
      if (m != j) b *= (at - x[m]) / (x[j] - x[m]);
    s += b * y[j];
  }
  return s;
}

// Kolmogorov-Smirnov distance between a sample and a continuous CDF.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    double f = cdf(sample[i]);
    worst = std::max({worst, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
  }
  return worst;
}

// Camera model used to synthesize poses: a background point P seen from a camera
// at c with orientation alpha has camera coordinates R(alpha) (P - c).
struct Camera {
  double alpha;
  std::array<double, 2> c;
};

inline std::array<double, 2> rot(double a, std::array<double, 2> p) {
  return {std::cos(a) * p[0] - std::sin(a) * p[1], std::sin(a) * p[0] + std::cos(a) * p[1]};
}

inline std::array<double, 2> to_camera(const Camera& cam, std::array<double, 2> p) {
  return rot(cam.alpha, {p[0] - cam.c[0], p[1] - cam.c[1]});
}

// Frame-to-frame motion implied by two camera states: theta = alpha_i - alpha_{i-1},
// t = R(alpha_i) (c_{i-1} - c_i).
inline std::array<double, 3> relative_motion(const Camera& prev, const Camera& cur) {
  auto t = rot(cur.alpha, {prev.c[0] - cur.c[0], prev.c[1] - cur.c[1]});
  return {cur.alpha - prev.alpha, t[0], t[1]};
}

}  // namespace oracle
