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

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstring>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "trajkit/error.hpp"

namespace trajkit::fft {

namespace detail {

// FFTW's planner is not re-entrant; plan execution is.
inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using Buffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
Buffer<T> allocate(std::size_t count) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * std::max<std::size_t>(count, 1)));
  if (p == nullptr) throw trajkit::error("FFT buffer allocation failed");
  return Buffer<T>(p);
}

class Plan {
 public:
  Plan() = default;
  explicit Plan(fftw_plan plan) : plan_(plan) {
    if (plan_ == nullptr) throw trajkit::error("FFTW planning failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    if (plan_ != nullptr) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

}  // namespace detail

/// Smallest power of two >= n.
inline std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

/// Non-negative-frequency half X_0..X_{n/2} of the unnormalized DFT
/// X_k = sum_j x_j exp(-2 pi i j k / n).
inline std::vector<std::complex<double>> rfft(std::span<const double> x) {
  const std::size_t n = x.size();
  trajkit::detail::require(n >= 1, "rfft of an empty signal");
  const std::size_t half = n / 2 + 1;
  auto in = detail::allocate<double>(n);
  auto out = detail::allocate<fftw_complex>(half);
  std::unique_ptr<detail::Plan> plan;
  {
    std::lock_guard lock(detail::planner_mutex());
    plan = std::make_unique<detail::Plan>(
        fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
  }
  std::copy(x.begin(), x.end(), in.get());
  plan->execute();
  std::vector<std::complex<double>> result(half);
  for (std::size_t k = 0; k < half; ++k) result[k] = {out[k][0], out[k][1]};
  return result;
}

/// Lagged products S_k = sum_{i=0}^{n-1-k} x_i x_{i+k} for k in [0, max_lag),
/// computed through a zero-padded FFT.
inline std::vector<double> autocorrelation(std::span<const double> x, std::size_t max_lag) {
  const std::size_t n = x.size();
  trajkit::detail::require(max_lag >= 1 && max_lag <= n, "max_lag must lie in [1, n]");
  const std::size_t m = next_pow2(n + max_lag);
  const std::size_t half = m / 2 + 1;
  auto real = detail::allocate<double>(m);
  auto spec = detail::allocate<fftw_complex>(half);
  std::unique_ptr<detail::Plan> forward, backward;
  {
    std::lock_guard lock(detail::planner_mutex());
    forward = std::make_unique<detail::Plan>(
        fftw_plan_dft_r2c_1d(static_cast<int>(m), real.get(), spec.get(), FFTW_ESTIMATE));
    backward = std::make_unique<detail::Plan>(
        fftw_plan_dft_c2r_1d(static_cast<int>(m), spec.get(), real.get(), FFTW_ESTIMATE));
  }
  std::copy(x.begin(), x.end(), real.get());
  std::fill(real.get() + n, real.get() + m, 0.0);
  forward->execute();
  for (std::size_t k = 0; k < half; ++k) {
    spec[k][0] = spec[k][0] * spec[k][0] + spec[k][1] * spec[k][1];
    spec[k][1] = 0.0;
  }
  backward->execute();
  std::vector<double> s(max_lag);
  const double inv = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < max_lag; ++k) s[k] = real[k] * inv;
  return s;
}

}  // namespace trajkit::fft
