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

#ifndef NILENTROPY_SRC_MPOLY_HPP
#define NILENTROPY_SRC_MPOLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nilentropy/integer.hpp"

namespace nilentropy::detail {

/// Sparse multivariate polynomial with rational coefficients. Monomials are
/// sorted lists of variable ids with repetition (x0^2 x3 -> {0,0,3}).
class MPoly {
 public:
  using Monomial = std::vector<std::uint16_t>;
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  explicit MPoly(const Rational& constant);
  static MPoly variable(std::uint16_t id);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

  void add_term(const Monomial& m, const Rational& c);

 private:
  Terms terms_;
};

/// Integer-valued polynomial prepared for fast exact evaluation: all
/// coefficients scaled to a common denominator.
class EvalPoly {
 public:
  struct Term {
    Integer coefficient;
    std::vector<std::uint16_t> variables;
  };

  EvalPoly() = default;
  explicit EvalPoly(const MPoly& p);

  Integer evaluate(std::span<const Integer> values) const;
  const Integer& denominator() const { return denominator_; }
  const std::vector<Term>& terms() const { return terms_; }

  /// Substitutes the given variables by constants, keeping the others.
  EvalPoly specialize(const std::vector<std::pair<std::uint16_t, Integer>>& fixed) const;

 private:
  Integer denominator_ = 1;
  std::vector<Term> terms_;
};

/// C(p, k) = p (p-1) ... (p-k+1) / k! as a polynomial.
MPoly binomial(const MPoly& p, unsigned k);

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_MPOLY_HPP
