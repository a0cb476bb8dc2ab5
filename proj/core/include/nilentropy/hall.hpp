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

#ifndef NILENTROPY_HALL_HPP
#define NILENTROPY_HALL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilentropy/integer.hpp"

namespace nilentropy {

/// A basic commutator: either generator `generator`, or the bracket
/// [basis[left], basis[right]] of two earlier basis entries.
struct BasicCommutator {
  int generator = -1;
  std::size_t left = 0;
  std::size_t right = 0;
  int weight = 1;

  bool is_generator() const { return generator >= 0; }
};

/// Element of the free Lie ring, truncated above the class, as a sparse
/// integer combination of Hall basis entries. Zero coefficients are never
/// stored.
class LieElement {
 public:
  using Terms = std::map<std::size_t, Integer>;

  LieElement() = default;
  static LieElement basis(std::size_t index, const Integer& coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::size_t index) const;

  void add(std::size_t index, const Integer& coefficient);
  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Integer& scalar);

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator-(LieElement a) { return a *= Integer(-1); }
  friend LieElement operator*(const Integer& s, LieElement a) { return a *= s; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  Terms terms_;
};

/// Hall basis of the free nilpotent Lie ring / group of rank m and class c.
///
/// Entries are ordered by weight; within a weight, brackets [u,v] are ordered
/// by (index(u), index(v)). The Hall condition is: u > v, and when
/// u = [p,q] also q <= v. Bracket products of basis pairs are straightened
/// once at construction, so a HallBasis is immutable and safe to share.
class HallBasis {
 public:
  /// Throws std::invalid_argument when rank or cls is zero.
  HallBasis(int rank, int cls);

  int rank() const { return rank_; }
  int nilpotency_class() const { return class_; }
  std::size_t size() const { return entries_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BasicCommutator>& entries() const { return entries_; }
  int weight(std::size_t i) const { return entries_[i].weight; }

  /// Half-open index range [first, last) of the weight-d entries.
  std::pair<std::size_t, std::size_t> weight_range(int d) const;
  /// Number of entries of weight d; throws std::out_of_range unless 1 <= d <= class.
  std::size_t graded_dimension(int d) const;

  /// Index of the basic commutator [left, right] if it is a basis entry.
  std::optional<std::size_t> find(std::size_t left, std::size_t right) const;

  /// Straightened bracket of two basis entries (terms of weight > class dropped).
  const LieElement& bracket(std::size_t i, std::size_t j) const;
  LieElement bracket(const LieElement& u, const LieElement& v) const;

  /// Human-readable form, e.g. "[[x2,x1],x1]".
  std::string name(std::size_t i) const;

 private:
  const LieElement& straighten(std::size_t i, std::size_t j);

  int rank_;
  int class_;
  std::vector<BasicCommutator> entries_;
  std::vector<std::size_t> weight_start_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index_;
  std::vector<LieElement> table_;
  std::vector<char> table_ready_;
};

/// Witt's formula: rank of the degree-d piece of the free Lie ring on m generators.
Integer witt_number(int m, int d);

/// Convenience wrapper matching the library-wide naming.
inline HallBasis generate_hall_basis(int m, int c) { return HallBasis(m, c); }

}  // namespace nilentropy

#endif  // NILENTROPY_HALL_HPP
