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

#include "nilentropy/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilentropy {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::size_t IntegerMatrix::dimension() const {
  if (!is_square()) throw std::invalid_argument("matrix is not square");
  return rows_;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

bool IntegerMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Integer IntegerMatrix::determinant() const {
  const std::size_t n = dimension();
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<IntegerMatrix> IntegerMatrix::unimodular_inverse() const {
  const std::size_t n = dimension();
  const Integer det = determinant();
  if (abs(det) != 1) return std::nullopt;
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = (*this)(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    const Rational lead = a[col][col];
    for (auto& v : a[col]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  IntegerMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = a[r][n + c].get_num();
  return inv;
}

std::string IntegerMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).get_str();
    }
    out += ']';
  }
  return out + "]";
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
    }
  return out;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes do not match");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::vector<Integer> smith_invariants(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the remaining block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) {
          for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(r, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, c));
          clean = false;
        }
      }
      if (clean) {
        // Divisibility condition: the pivot must divide the rest of the block.
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          for (std::size_t c = t + 1; c < cols && clean; ++c) {
            Integer rem;
            mpz_fdiv_r(rem.get_mpz_t(), m(r, c).get_mpz_t(), m(t, t).get_mpz_t());
            if (rem != 0) {
              for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
              clean = false;
            }
          }
      }
    }
    out.push_back(abs(m(t, t)));
    ++t;
  }
  return out;
}

std::size_t rational_rank(const IntegerMatrix& m) { return smith_invariants(m).size(); }

IntegerMatrix exterior_power(const IntegerMatrix& m, std::size_t k) {
  const std::size_t n = m.dimension();
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  auto build = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      subsets.push_back(current);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  build(build, 0);
  IntegerMatrix out(subsets.size(), subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      IntegerMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(subsets[r][i], subsets[c][j]);
      out(r, c) = minor.determinant();
    }
  return out;
}

}  // namespace nilentropy
