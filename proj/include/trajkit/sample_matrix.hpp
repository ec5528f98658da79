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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "trajkit/error.hpp"

namespace trajkit {

/// N x d block of time-evolving samples (positions, velocities, ...), row-major.
///
/// Rows are time instants, columns are spatial axes. Every entry is finite and
/// N, d >= 1; both are checked on construction.
class SampleMatrix {
 public:
  SampleMatrix(std::size_t rows, std::size_t dim, double fill = 0.0)
      : data_(rows * dim, fill), rows_(rows), dim_(dim) {
    detail::require(rows >= 1 && dim >= 1, "SampleMatrix needs at least one row and one axis");
    check_finite();
  }

  /// Takes ownership of row-major data of size rows*dim.
  SampleMatrix(std::vector<double> data, std::size_t rows, std::size_t dim)
      : data_(std::move(data)), rows_(rows), dim_(dim) {
    detail::require(rows >= 1 && dim >= 1, "SampleMatrix needs at least one row and one axis");
    detail::require(data_.size() == rows * dim, "SampleMatrix data size does not match rows*dim");
    check_finite();
  }

  static SampleMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    detail::require(!rows.empty(), "no samples given");
    std::size_t dim = rows.front().size();
    std::vector<double> data;
    data.reserve(rows.size() * dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      detail::require(rows[i].size() == dim,
                      "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(dim));
      data.insert(data.end(), rows[i].begin(), rows[i].end());
    }
    return {std::move(data), rows.size(), dim};
  }

  static SampleMatrix from_axes(const std::vector<std::vector<double>>& axes) {
    detail::require(!axes.empty(), "no axes given");
    std::size_t rows = axes.front().size();
    for (std::size_t k = 0; k < axes.size(); ++k) {
      detail::require(axes[k].size() == rows,
                      "axis " + std::to_string(k) + " has length " + std::to_string(axes[k].size()) +
                          ", expected " + std::to_string(rows));
    }
    detail::require(rows >= 1, "axes are empty");
    std::vector<double> data(rows * axes.size());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < axes.size(); ++k) data[i * axes.size() + k] = axes[k][i];
    return {std::move(data), rows, axes.size()};
  }

  std::size_t size() const { return rows_; }
  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t k) const { return data_[i * dim_ + k]; }
  double& operator()(std::size_t i, std::size_t k) { return data_[i * dim_ + k]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }

  std::span<const double> data() const { return data_; }

  std::vector<double> axis(std::size_t k) const {
    detail::require(k < dim_, "axis " + std::to_string(k) + " requested from a " +
                                  std::to_string(dim_) + "-dimensional sample matrix");
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * dim_ + k];
    return out;
  }
  std::vector<double> x() const { return axis(0); }
  std::vector<double> y() const { return axis(1); }
  std::vector<double> z() const { return axis(2); }

  /// Euclidean norm of every row.
  std::vector<double> norm() const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      double sum = 0.0;
      for (double value : row(i)) sum += value * value;
      out[i] = std::sqrt(sum);
    }
    return out;
  }

  /// (N-1) x d matrix of consecutive row differences.
  SampleMatrix delta() const {
    detail::require(rows_ >= 2, "delta needs at least two samples");
    std::vector<double> out((rows_ - 1) * dim_);
    for (std::size_t i = 0; i + 1 < rows_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) out[i * dim_ + k] = (*this)(i + 1, k) - (*this)(i, k);
    return {std::move(out), rows_ - 1, dim_};
  }

  friend bool operator==(const SampleMatrix&, const SampleMatrix&) = default;

 private:
  void check_finite() const {
    for (std::size_t j = 0; j < data_.size(); ++j) {
      if (!std::isfinite(data_[j]))
        throw invalid_argument("non-finite entry at row " + std::to_string(j / dim_) + ", axis " +
                               std::to_string(j % dim_));
    }
  }

  std::vector<double> data_;
  std::size_t rows_;
  std::size_t dim_;
};

}  // namespace trajkit
