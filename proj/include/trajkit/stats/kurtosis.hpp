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

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "trajkit/parallel.hpp"
#include "trajkit/stats/series.hpp"

namespace trajkit::stats {

/// Sample the kurtosis is computed on: velocity at each instant, or the
/// displacement r(t) - r(0) (ensemble mode) / r_{i+lag} - r_i (time mode).
enum class KurtosisSignal { velocity, displacement };

/// Mardia's multivariate kurtosis of the rows of `samples`:
/// mean_i ((x_i - mu)^T S^-1 (x_i - mu))^2 with S the maximum-likelihood
/// covariance. For d = 1 this is the standardized fourth moment m4 / m2^2.
///
/// Throws singular_covariance when S is not positive definite, which
/// includes every set of at most d samples.
inline double mardia_kurtosis(const SampleMatrix& samples) {
  const std::size_t n = samples.size(), d = samples.dim();
  using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const Matrix> x(samples.data().data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  Eigen::RowVectorXd mu = x.colwise().mean();
  Matrix centered = x.rowwise() - mu;
  Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov, Eigen::EigenvaluesOnly);
  double largest = eig.eigenvalues().maxCoeff();
  double smallest = eig.eigenvalues().minCoeff();
  if (!(largest > 0.0) || smallest <= 1e-12 * largest)
    throw singular_covariance("covariance matrix is singular (degenerate or identical samples)");

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success) throw singular_covariance("covariance matrix is not positive definite");
  // Squared Mahalanobis distances: |L^-1 x_i|^2.
  Eigen::MatrixXd whitened = llt.matrixL().solve(centered.transpose());
  detail::CompensatedSum sum;
  for (Eigen::Index i = 0; i < whitened.cols(); ++i) {
    double m = whitened.col(i).squaredNorm();
    sum.add(m * m);
  }
  return sum.value() / static_cast<double>(n);
}

/// Kurtosis of an ensemble.
///
/// Ensemble mode evaluates Mardia's statistic across trajectories at every
/// instant (from the second instant for displacements, which vanish at t0).
/// Time mode pools each trajectory's samples over time: one row (lag axis 0)
/// for velocities, or rows for lags 1..lag for displacements. Per-trajectory
/// values are then averaged across the ensemble. Ensemble-mode spread is zero:
/// each instant yields a single statistic.
inline StatSeries kurtosis(std::span<const Trajectory> trajs, Averaging averaging,
                           KurtosisSignal signal = KurtosisSignal::velocity, std::size_t lag = 0) {
  detail::require_same_dim(trajs);
  const std::size_t d = trajs.front().dim();
  StatSeries out;
  out.averaging = averaging;

  if (averaging == Averaging::ensemble) {
    auto grid = detail::common_grid(trajs);
    out.warnings = std::move(grid.warnings);
    const std::size_t n_traj = trajs.size();
    if (n_traj < d + 2)
      throw invalid_argument("ensemble kurtosis needs at least d + 2 = " + std::to_string(d + 2) +
                             " trajectories, got " + std::to_string(n_traj));
    std::vector<SampleMatrix> source;
    source.reserve(n_traj);
    for (const auto& traj : trajs) source.push_back(signal == KurtosisSignal::velocity ? traj.v() : traj.r());

    const std::size_t first = signal == KurtosisSignal::velocity ? 0 : 1;
    detail::require(grid.length > first, "not enough instants for displacement kurtosis");
    const std::size_t m = grid.length - first;
    out.mean.resize(m);
    out.spread.assign(m, 0.0);
    out.axis.assign(grid.t.begin() + static_cast<std::ptrdiff_t>(first), grid.t.end());
    parallel_for(m, [&](std::size_t idx) {
      std::size_t i = idx + first;
      std::vector<double> rows(n_traj * d);
      for (std::size_t j = 0; j < n_traj; ++j)
        for (std::size_t k = 0; k < d; ++k)
          rows[j * d + k] = signal == KurtosisSignal::velocity ? source[j](i, k)
                                                               : source[j](i, k) - source[j](0, k);
      out.mean[idx] = mardia_kurtosis(SampleMatrix(std::move(rows), n_traj, d));
    });
    out.population = n_traj;
    return out;
  }

  std::vector<std::vector<double>> members(trajs.size());
  if (signal == KurtosisSignal::velocity) {
    parallel_for(trajs.size(), [&](std::size_t j) { members[j] = {mardia_kurtosis(trajs[j].v())}; });
    out.axis = {0.0};
  } else {
    double step = detail::check_time_lag(trajs, lag, out.warnings);
    parallel_for(trajs.size(), [&](std::size_t j) {
      const auto& r = trajs[j].r();
      std::vector<double> values(lag);
      for (std::size_t k = 1; k <= lag; ++k) {
        std::size_t count = r.size() - k;
        std::vector<double> inc(count * d);
        for (std::size_t i = 0; i < count; ++i)
          for (std::size_t a = 0; a < d; ++a) inc[i * d + a] = r(i + k, a) - r(i, a);
        values[k - 1] = mardia_kurtosis(SampleMatrix(std::move(inc), count, d));
      }
      members[j] = std::move(values);
    });
    out.axis.resize(lag);
    for (std::size_t k = 1; k <= lag; ++k) out.axis[k - 1] = static_cast<double>(k) * step;
  }
  detail::reduce_members(members, out);
  return out;
}

}  // namespace trajkit::stats
