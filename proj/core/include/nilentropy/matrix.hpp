// Copyright 2026 The nilentropy Authors.
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

#ifndef NILENTROPY_MATRIX_HPP
#define NILENTROPY_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nilentropy/integer.hpp"

namespace nilentropy {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length; throws std::invalid_argument for a non-square matrix.
  std::size_t dimension() const;

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_identity() const;
  IntegerMatrix transpose() const;
  /// Bareiss fraction-free elimination.
  Integer determinant() const;
  /// Integer inverse when det = +-1, nullopt otherwise.
  std::optional<IntegerMatrix> unimodular_inverse() const;

  std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Nonzero invariant factors of the Smith normal form (positive, each
/// dividing the next).
std::vector<Integer> smith_invariants(IntegerMatrix m);

/// Rank over the rationals.
std::size_t rational_rank(const IntegerMatrix& m);

/// k-th exterior power of a square matrix in the lexicographic basis of
/// k-subsets.
IntegerMatrix exterior_power(const IntegerMatrix& m, std::size_t k);

}  // namespace nilentropy

#endif  // NILENTROPY_MATRIX_HPP
