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

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "trajkit/fft.hpp"
#include "trajkit/parallel.hpp"
#include "trajkit/stats/series.hpp"

namespace trajkit::stats {

enum class FrequencyUnit { ordinary, angular };

struct Periodogram {
  std::vector<double> frequency;
  std::vector<double> power;
};

/// One-sided periodogram of a uniformly sampled signal, rectangular window,
/// no detrending.
///
/// S_k = c_k dt |X_k|^2 / n for k = 0..n/2, with c_k = 2 except at DC and
/// Nyquist. Normalized so that sum_k S_k * df = mean(x^2); in angular units
/// S is per rad/s (divided by 2 pi) and the same identity holds with d(omega).
inline Periodogram periodogram(std::span<const double> signal, double dt,
                               FrequencyUnit unit = FrequencyUnit::ordinary) {
  const std::size_t n = signal.size();
  detail::require(n >= 2, "periodogram needs at least two samples");
  detail::require(std::isfinite(dt) && dt > 0.0, "time step must be positive");
  auto spectrum = fft::rfft(signal);
  const double to_unit = unit == FrequencyUnit::angular ? 2.0 * std::numbers::pi : 1.0;
  Periodogram out;
  out.frequency.resize(spectrum.size());
  out.power.resize(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    bool unpaired = k == 0 || (n % 2 == 0 && k == n / 2);
    double weight = unpaired ? 1.0 : 2.0;
    out.frequency[k] = to_unit * static_cast<double>(k) / (static_cast<double>(n) * dt);
    out.power[k] = weight * dt * std::norm(spectrum[k]) / static_cast<double>(n) / to_unit;
  }
  return out;
}

/// Power spectral density of the velocity: the periodogram of each velocity
/// component, averaged over axes per trajectory, then across the ensemble.
/// All trajectories must share one uniform grid.
inline StatSeries psd(std::span<const Trajectory> trajs, FrequencyUnit unit = FrequencyUnit::ordinary) {
  detail::require_same_dim(trajs);
  const std::size_t n = trajs.front().size();
  auto step = trajs.front().dt();
  if (!step) throw grid_mismatch("power spectrum needs a uniform time grid");
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    auto dt = trajs[j].dt();
    if (!dt || trajs[j].size() != n || std::abs(*dt - *step) > 1e-9 * *step)
      throw grid_mismatch("trajectory " + std::to_string(j) + " does not share the uniform grid of the ensemble");
  }
  detail::require(n >= 2, "power spectrum needs at least two samples");

  StatSeries out;
  out.averaging = Averaging::ensemble;
  std::vector<std::vector<double>> members(trajs.size());
  parallel_for(trajs.size(), [&](std::size_t j) {
    auto v = trajs[j].v();
    std::vector<double> power;
    for (std::size_t k = 0; k < v.dim(); ++k) {
      auto axis = v.axis(k);
      auto p = periodogram(axis, *step, unit);
      if (power.empty()) power.assign(p.power.size(), 0.0);
      for (std::size_t f = 0; f < power.size(); ++f) power[f] += p.power[f];
    }
    for (double& value : power) value /= static_cast<double>(v.dim());
    members[j] = std::move(power);
  });
  detail::reduce_members(members, out);
  const double to_unit = unit == FrequencyUnit::angular ? 2.0 * std::numbers::pi : 1.0;
  out.axis.resize(out.mean.size());
  for (std::size_t k = 0; k < out.axis.size(); ++k)
    out.axis[k] = to_unit * static_cast<double>(k) / (static_cast<double>(n) * *step);
  return out;
}

}  // namespace trajkit::stats
