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

#ifndef NILENTROPY_POLYNOMIAL_HPP
#define NILENTROPY_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilentropy/integer.hpp"
#include "nilentropy/matrix.hpp"

namespace nilentropy {

/// Dense univariate integer polynomial; coefficient of x^i at index i.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  Integer coefficient(int i) const;
  const Integer& leading() const { return coefficients_.back(); }

  Integer evaluate(const Integer& x) const;
  /// Sign of p(num / 2^shift).
  int sign_at_dyadic(const Integer& num, unsigned long shift) const;

  IntPolynomial derivative() const;
  /// Divides by the gcd of the coefficients and makes the leading one positive.
  IntPolynomial primitive_part() const;
  /// Exact quotient when divisor divides *this over Z, nullopt otherwise.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coefficients_;
};

/// det(x I - M) by the division-free Berkowitz algorithm.
IntPolynomial characteristic_polynomial(const IntegerMatrix& m);

/// The k-th cyclotomic polynomial.
IntPolynomial cyclotomic_polynomial(unsigned k);

/// Greatest common divisor up to sign and content (primitive, leading coefficient > 0).
IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Squarefree part, primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Number of distinct real roots of a squarefree p in (a, b], a < b, with
/// a = a_num / 2^shift and b = b_num / 2^shift (Sturm's theorem).
std::size_t count_real_roots(const IntPolynomial& p, const Integer& a_num, const Integer& b_num,
                             unsigned long shift);

/// Isolating interval [lower, upper] for the largest real root of p, of width
/// at most 2^-precision_bits; nullopt when p has no real root.
struct RootInterval {
  Rational lower;
  Rational upper;
};
std::optional<RootInterval> largest_real_root(const IntPolynomial& p, unsigned precision_bits);

/// Is p (up to sign) a product of cyclotomic polynomials?
bool is_cyclotomic_product(const IntPolynomial& p);

}  // namespace nilentropy

#endif  // NILENTROPY_POLYNOMIAL_HPP
