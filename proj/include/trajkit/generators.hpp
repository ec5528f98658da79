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
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "trajkit/core.hpp"
#include "trajkit/parallel.hpp"
#include "trajkit/random.hpp"

namespace trajkit::generators {

/// Numerical settings shared by every model: total time, dimension, ensemble
/// size, time step and an optional seed.
struct GeneratorBase {
  double T = 1.0;
  std::size_t dim = 1;
  std::size_t N = 1;
  double dt = 1.0;
  std::optional<std::uint64_t> seed;
  /// Scheme attached to the produced trajectories.
  DiffMethod diff{};
};

/// Samples per trajectory, endpoints included: round(T/dt) + 1.
inline std::size_t sample_count(const GeneratorBase& base) {
  return static_cast<std::size_t>(std::llround(base.T / base.dt)) + 1;
}

inline void validate(const GeneratorBase& base) {
  detail::require(std::isfinite(base.T) && base.T > 0.0, "total time T must be positive");
  detail::require(std::isfinite(base.dt) && base.dt > 0.0, "time step dt must be positive");
  detail::require(base.dim >= 1, "dim must be at least 1");
  detail::require(base.N >= 1, "N must be at least 1");
  detail::require(sample_count(base) >= 2, "T must span at least one time step");
}

/// Length of step `step` along `axis`; lets the walker use unequal step lengths.
using StepLengthLaw = std::function<double(random::Stream&, std::size_t axis, std::size_t step)>;

struct RandomWalkConfig {
  GeneratorBase base;
  /// One (q, w, p) row per axis: probabilities of a -1, 0 and +1 move.
  std::vector<std::array<double, 3>> prob;
  /// Constant step length per axis (1 or dim entries). Ignored when step_law is set.
  std::vector<double> step_length{1.0};
  StepLengthLaw step_law;
};

struct LangevinConfig {
  GeneratorBase base;
  double gamma = 1.0;
  double sigma = 1.0;
  /// Initial velocity; drawn from the stationary N(0, sigma^2 / (2 gamma)) when empty.
  std::optional<std::vector<double>> v0;
  std::optional<std::vector<double>> r0;
};

struct DiffDiffConfig {
  GeneratorBase base;
  /// Correlation time of the auxiliary process Y.
  double tau = 1.0;
  double sigma = 1.0;
  /// Initial auxiliary state; drawn from the stationary N(0, sigma^2 tau / 2) when empty.
  std::optional<std::vector<double>> y0;
  std::optional<std::vector<double>> r0;
};

namespace detail {

using trajkit::detail::require;

inline void require_vector(const std::optional<std::vector<double>>& v, std::size_t dim,
                           const char* name) {
  if (v) require(v->size() == dim, std::string(name) + " must have dim entries");
}

inline std::vector<double> or_zeros(const std::optional<std::vector<double>>& v, std::size_t dim) {
  return v ? *v : std::vector<double>(dim, 0.0);
}

inline Trajectory finish(std::vector<double> positions, const GeneratorBase& base, std::size_t n,
                         const char* model, std::size_t index) {
  return Trajectory(SampleMatrix(std::move(positions), n, base.dim), TimeGrid::uniform(base.dt, 0.0),
                    base.diff, std::string(model) + "-" + std::to_string(index));
}

}  // namespace detail

inline void validate(const RandomWalkConfig& cfg) {
  validate(cfg.base);
  detail::require(cfg.prob.size() == cfg.base.dim, "prob needs one (q, w, p) row per axis");
  for (std::size_t k = 0; k < cfg.prob.size(); ++k) {
    const auto& row = cfg.prob[k];
    for (double p : row)
      detail::require(std::isfinite(p) && p >= 0.0 && p <= 1.0,
                      "probabilities of axis " + std::to_string(k) + " must lie in [0, 1]");
    detail::require(std::abs(row[0] + row[1] + row[2] - 1.0) <= 1e-12,
                    "probabilities of axis " + std::to_string(k) + " must sum to 1");
  }
  if (!cfg.step_law) {
    detail::require(cfg.step_length.size() == 1 || cfg.step_length.size() == cfg.base.dim,
                    "step_length must have 1 or dim entries");
    for (double l : cfg.step_length)
      detail::require(std::isfinite(l) && l >= 0.0, "step length must be non-negative");
  }
}

inline void validate(const LangevinConfig& cfg) {
  validate(cfg.base);
  detail::require(std::isfinite(cfg.gamma) && cfg.gamma > 0.0, "gamma must be positive");
  detail::require(std::isfinite(cfg.sigma) && cfg.sigma >= 0.0, "sigma must be non-negative");
  detail::require_vector(cfg.v0, cfg.base.dim, "v0");
  detail::require_vector(cfg.r0, cfg.base.dim, "r0");
}

inline void validate(const DiffDiffConfig& cfg) {
  validate(cfg.base);
  detail::require(std::isfinite(cfg.tau) && cfg.tau > 0.0, "tau must be positive");
  detail::require(std::isfinite(cfg.sigma) && cfg.sigma >= 0.0, "sigma must be non-negative");
  detail::require_vector(cfg.y0, cfg.base.dim, "y0");
  detail::require_vector(cfg.r0, cfg.base.dim, "r0");
}

/// Trajectory `index` of a random-walk ensemble seeded with `seed`:
/// X_i = sum_j L_j Z_j per axis with Z_j in {-1, 0, +1} drawn from that axis' (q, w, p).
inline Trajectory random_walk_trajectory(const RandomWalkConfig& cfg, std::uint64_t seed,
                                         std::size_t index) {
  const std::size_t n = sample_count(cfg.base), d = cfg.base.dim;
  random::Stream rng(seed, index);
  std::vector<double> r(n * d, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& pr = cfg.prob[k];
      double u = rng.uniform();
      int z = u < pr[0] ? -1 : (u < pr[0] + pr[1] ? 0 : 1);
      double length = cfg.step_law ? cfg.step_law(rng, k, i - 1)
                                   : cfg.step_length[cfg.step_length.size() == 1 ? 0 : k];
      r[i * d + k] = r[(i - 1) * d + k] + length * z;
    }
  }
  return detail::finish(std::move(r), cfg.base, n, "rw", index);
}

/// Euler-Maruyama on dv = -gamma v dt + sigma dW; positions by cumulative
/// trapezoidal integration of v starting at r0.
inline Trajectory langevin_trajectory(const LangevinConfig& cfg, std::uint64_t seed,
                                      std::size_t index) {
  const std::size_t n = sample_count(cfg.base), d = cfg.base.dim;
  const double dt = cfg.base.dt, sqrt_dt = std::sqrt(dt);
  random::Stream rng(seed, index);

  std::vector<double> v(d);
  if (cfg.v0) {
    v = *cfg.v0;
  } else {
    double stationary_std = cfg.sigma / std::sqrt(2.0 * cfg.gamma);
    for (auto& component : v) component = stationary_std * rng.normal();
  }

  std::vector<double> r(n * d);
  auto r0 = detail::or_zeros(cfg.r0, d);
  std::copy(r0.begin(), r0.end(), r.begin());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      double next = v[k] - cfg.gamma * v[k] * dt + cfg.sigma * sqrt_dt * rng.normal();
      r[i * d + k] = r[(i - 1) * d + k] + 0.5 * dt * (v[k] + next);
      v[k] = next;
    }
  }
  return detail::finish(std::move(r), cfg.base, n, "langevin", index);
}

/// Diffusing diffusivity: Y follows an Ornstein-Uhlenbeck process with
/// correlation time tau, D = Y^2 per axis, r_{k+1} = r_k + sqrt(2 D_k dt) xi_k.
inline Trajectory diffdiff_trajectory(const DiffDiffConfig& cfg, std::uint64_t seed,
                                      std::size_t index) {
  const std::size_t n = sample_count(cfg.base), d = cfg.base.dim;
  const double dt = cfg.base.dt, sqrt_dt = std::sqrt(dt);
  random::Stream rng(seed, index);

  std::vector<double> y(d);
  if (cfg.y0) {
    y = *cfg.y0;
  } else {
    double stationary_std = cfg.sigma * std::sqrt(cfg.tau / 2.0);
    for (auto& component : y) component = stationary_std * rng.normal();
  }

  std::vector<double> r(n * d);
  auto r0 = detail::or_zeros(cfg.r0, d);
  std::copy(r0.begin(), r0.end(), r.begin());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      double diffusivity = y[k] * y[k];
      r[i * d + k] = r[(i - 1) * d + k] + std::sqrt(2.0 * diffusivity) * sqrt_dt * rng.normal();
      y[k] = y[k] - y[k] / cfg.tau * dt + cfg.sigma * sqrt_dt * rng.normal();
    }
  }
  return detail::finish(std::move(r), cfg.base, n, "diffdiff", index);
}

namespace detail {

inline Trajectory make_one(const RandomWalkConfig& c, std::uint64_t s, std::size_t i) {
  return random_walk_trajectory(c, s, i);
}
inline Trajectory make_one(const LangevinConfig& c, std::uint64_t s, std::size_t i) {
  return langevin_trajectory(c, s, i);
}
inline Trajectory make_one(const DiffDiffConfig& c, std::uint64_t s, std::size_t i) {
  return diffdiff_trajectory(c, s, i);
}

}  // namespace detail

/// Trajectories [first, first + count) of the ensemble described by cfg. Each
/// index has its own random sub-stream, so results match a full generate()
/// call and do not depend on TRAJKIT_THREADS.
template <typename Config>
Ensemble generate_range(const Config& cfg, std::size_t first, std::size_t count) {
  validate(cfg);
  const std::uint64_t seed = cfg.base.seed ? *cfg.base.seed : random::entropy_seed();
  std::vector<std::optional<Trajectory>> slots(count);
  parallel_for(count, [&](std::size_t i) { slots[i] = detail::make_one(cfg, seed, first + i); });
  Ensemble out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

template <typename Config>
Ensemble generate(const Config& cfg) {
  return generate_range(cfg, 0, cfg.base.N);
}

inline Ensemble generate_random_walk(const RandomWalkConfig& cfg) { return generate(cfg); }
inline Ensemble generate_langevin(const LangevinConfig& cfg) { return generate(cfg); }
inline Ensemble generate_diffdiff(const DiffDiffConfig& cfg) { return generate(cfg); }

inline constexpr double boltzmann_constant = 1.380649e-23;  // J/K

struct LangevinCoefficients {
  double gamma;  // 1/s
  double sigma;  // m / s^(3/2)
};

/// Drag and noise strength of a sphere in a viscous fluid: gamma = 6 pi eta a / m
/// (Stokes) and sigma = sqrt(2 gamma k T / m) (fluctuation-dissipation).
inline LangevinCoefficients physical_langevin_params(double mass, double radius,
                                                     double viscosity, double temperature) {
  for (double value : {mass, radius, viscosity, temperature})
    trajkit::detail::require(std::isfinite(value) && value > 0.0,
                             "physical parameters must be positive");
  double gamma = 6.0 * std::numbers::pi * viscosity * radius / mass;
  double sigma = std::sqrt(2.0 * gamma * boltzmann_constant * temperature / mass);
  return {gamma, sigma};
}

}  // namespace trajkit::generators
