// Copyright 2026 The reachpipe Authors
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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace reachpipe {

using Vector = std::vector<double>;

/**
 * Dense row-major real matrix.
 *
 * Small by intent: the systems handled here have a handful of states, so
 * everything is heap-backed and bounds are checked on every access path
 * that takes user-provided shapes. Entries are finite on construction;
 * arithmetic that overflows throws NumericError rather than carrying Inf.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix column(std::span<const double> values);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const double> entries() const { return entries_; }

  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Matrix transpose() const;
  /// Copy of the block starting at (r0, c0) with the given shape.
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  std::string shape_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

/// Standard product; throws DimensionError naming both shapes on mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// a * x for a column given as a plain vector.
Vector mat_vec(const Matrix& a, std::span<const double> x);

/// Maximum absolute row sum.
double inf_norm(const Matrix& a);

/// Largest absolute entry difference; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/**
 * e^{a t} by scaling and squaring with a degree-13 Pade approximant.
 *
 * The scaling exponent is chosen so that ||a t||_inf / 2^s <= 0.5.
 * Throws DimensionError for non-square input.
 */
Matrix mat_exp(const Matrix& a, double t);

struct AugmentedExp {
  Matrix phi;    // e^{a delta}, n x n
  Matrix gamma;  // integral_0^delta e^{a s} ds * b_vec, n x 1
};

/// Exact discretization of x' = a x + b_vec over one step of length `delta`,
/// read off the exponential of [[a, b_vec], [0, 0]] * delta. Works for
/// singular `a`.
AugmentedExp augmented_exp(const Matrix& a, const Matrix& b_vec, double delta);

}  // namespace reachpipe
