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

#include <stdexcept>
#include <string>

namespace trajkit {

/// Base class of every error raised by the library. The CLI maps it to exit code 2.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad shape, bad parameter, bad range).
class invalid_argument : public error {
 public:
  using error::error;
};

/// Velocity or acceleration requested where the sample count cannot support it.
class kinematics_undefined : public error {
 public:
  using error::error;
};

/// Two trajectories (or an ensemble) do not share a time grid.
class grid_mismatch : public error {
 public:
  using error::error;
};

class singular_covariance : public error {
 public:
  using error::error;
};

/// Rank-deficient least-squares system or model violation in pose estimation.
class degenerate_fit : public error {
 public:
  using error::error;
};

/// File could not be read/written or does not follow the expected schema.
class io_error : public error {
 public:
  using error::error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw invalid_argument(message);
}

}  // namespace detail
}  // namespace trajkit
