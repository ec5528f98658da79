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
#include <numbers>
#include <span>
#include <vector>

#include "trajkit/stats/series.hpp"

namespace trajkit::stats {

/// How histogram edges are chosen.
struct Binning {
  enum class Rule { freedman_diaconis, count, edges };
  Rule rule = Rule::freedman_diaconis;
  std::size_t count = 0;
  std::vector<double> edges;

  static Binning freedman_diaconis() { return {}; }
  static Binning with_count(std::size_t bins) {
    detail::require(bins >= 1, "bin count must be at least 1");
    return {Rule::count, bins, {}};
  }
  static Binning with_edges(std::vector<double> edges) {
    detail::require(edges.size() >= 2, "need at least two bin edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
      detail::require(edges[i] > edges[i - 1], "bin edges must be strictly increasing");
    return {Rule::edges, edges.size() - 1, std::move(edges)};
  }
};

struct HistogramResult {
  std::vector<double> edges;
  /// Counts, or densities when `normalized` (sum of density * width == 1).
  std::vector<double> values;
  bool normalized = false;
  bool circular = false;
  std::size_t total = 0;    // samples that landed in a bin
  std::size_t outside = 0;  // samples beyond explicit edges
  std::size_t skipped = 0;  // samples with no defined value (e.g. zero-length steps)
};

namespace detail {

inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline std::vector<double> linspace(double lo, double hi, std::size_t bins) {
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i)
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  edges.back() = hi;
  return edges;
}

inline std::vector<double> resolve_edges(std::span<const double> samples, const Binning& binning) {
  if (binning.rule == Binning::Rule::edges) return binning.edges;
  auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it, hi = *hi_it;
  if (hi == lo) return {lo - 0.5, hi + 0.5};
  if (binning.rule == Binning::Rule::count) return linspace(lo, hi, binning.count);

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  double n = static_cast<double>(sorted.size());
  std::size_t bins;
  if (iqr > 0.0) {
    double width = 2.0 * iqr / std::cbrt(n);
    bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
  } else {
    bins = static_cast<std::size_t>(std::ceil(std::log2(n))) + 1;  // Sturges fallback
  }
  bins = std::clamp<std::size_t>(bins, 1, 100000);
  return linspace(lo, hi, bins);
}

inline void finalize(HistogramResult& h) {
  if (!h.normalized || h.total == 0) return;
  for (std::size_t b = 0; b < h.values.size(); ++b)
    h.values[b] /= static_cast<double>(h.total) * (h.edges[b + 1] - h.edges[b]);
}

}  // namespace detail

/// Histogram of arbitrary samples. The last bin is closed on the right.
inline HistogramResult histogram(std::span<const double> samples, const Binning& binning = {},
                                 bool normalized = false) {
  detail::require(!samples.empty(), "histogram of an empty sample pool");
  HistogramResult h;
  h.edges = detail::resolve_edges(samples, binning);
  h.values.assign(h.edges.size() - 1, 0.0);
  h.normalized = normalized;
  for (double x : samples) {
    if (x < h.edges.front() || x > h.edges.back()) {
      ++h.outside;
      continue;
    }
    auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
    std::size_t b = static_cast<std::size_t>(it - h.edges.begin());
    b = std::min(b == 0 ? 0 : b - 1, h.values.size() - 1);
    h.values[b] += 1.0;
    ++h.total;
  }
  detail::finalize(h);
  return h;
}

/// Convention for angles: [-pi, pi) or [0, 2 pi).
enum class AngleRange { signed_range, unsigned_range };

inline double wrap_angle(double angle, AngleRange range) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double lo = range == AngleRange::signed_range ? -std::numbers::pi : 0.0;
  double wrapped = angle - two_pi * std::floor((angle - lo) / two_pi);
  if (wrapped >= lo + two_pi) wrapped -= two_pi;
  if (wrapped < lo) wrapped = lo;
  return wrapped;
}

/// Equal-width histogram over the full circle in the given convention.
inline HistogramResult circular_histogram(std::span<const double> angles, std::size_t bins,
                                          AngleRange range, bool normalized) {
  detail::require(bins >= 1, "bin count must be at least 1");
  double lo = range == AngleRange::signed_range ? -std::numbers::pi : 0.0;
  HistogramResult h;
  h.circular = true;
  h.normalized = normalized;
  h.edges = detail::linspace(lo, lo + 2.0 * std::numbers::pi, bins);
  h.values.assign(bins, 0.0);
  const double width = 2.0 * std::numbers::pi / static_cast<double>(bins);
  for (double a : angles) {
    double w = wrap_angle(a, range);
    auto b = static_cast<std::size_t>(std::floor((w - lo) / width));
    h.values[std::min(b, bins - 1)] += 1.0;
    ++h.total;
  }
  detail::finalize(h);
  return h;
}

/// Histogram of |v| pooled over every sample of every trajectory.
inline HistogramResult speed_histogram(std::span<const Trajectory> trajs, const Binning& binning = {},
                                       bool normalized = false) {
  detail::require(!trajs.empty(), "empty ensemble");
  std::vector<double> speeds;
  for (const auto& traj : trajs) {
    auto s = traj.v().norm();
    speeds.insert(speeds.end(), s.begin(), s.end());
  }
  return histogram(speeds, binning, normalized);
}

struct TurningAngles {
  std::vector<double> angles;
  std::size_t skipped = 0;
};

/// Signed angle between consecutive displacements of every 2-D trajectory.
/// Pairs involving a zero-length displacement are skipped and counted. With
/// `accumulate`, each value is the running sum of turns along its trajectory.
inline TurningAngles turning_angle_samples(std::span<const Trajectory> trajs, bool accumulate,
                                           AngleRange range) {
  detail::require(!trajs.empty(), "empty ensemble");
  TurningAngles out;
  for (std::size_t j = 0; j < trajs.size(); ++j) {
    const auto& r = trajs[j].r();
    detail::require(r.dim() == 2, "turning angles need 2-dimensional trajectories");
    detail::require(r.size() >= 3, "turning angles need at least 3 samples (trajectory " +
                                       std::to_string(j) + ")");
    double heading = 0.0;
    for (std::size_t i = 0; i + 2 < r.size(); ++i) {
      double ax = r(i + 1, 0) - r(i, 0), ay = r(i + 1, 1) - r(i, 1);
      double bx = r(i + 2, 0) - r(i + 1, 0), by = r(i + 2, 1) - r(i + 1, 1);
      if ((ax == 0.0 && ay == 0.0) || (bx == 0.0 && by == 0.0)) {
        ++out.skipped;
        continue;
      }
      double turn = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
      heading += turn;
      out.angles.push_back(wrap_angle(accumulate ? heading : turn, range));
    }
  }
  return out;
}

inline HistogramResult turning_angles(std::span<const Trajectory> trajs, bool accumulate = false,
                                      AngleRange range = AngleRange::signed_range, std::size_t bins = 36,
                                      bool normalized = true) {
  auto samples = turning_angle_samples(trajs, accumulate, range);
  auto h = circular_histogram(samples.angles, bins, range, normalized);
  h.skipped = samples.skipped;
  return h;
}

}  // namespace trajkit::stats
