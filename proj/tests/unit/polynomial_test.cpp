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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nilentropy/matrix.hpp"
#include "nilentropy/polynomial.hpp"
#include "oracles.hpp"

namespace {

using nilentropy::Integer;
using nilentropy::IntegerMatrix;
using nilentropy::IntPolynomial;

IntegerMatrix make(std::size_t n, std::initializer_list<long> values) {
  IntegerMatrix m(n, n);
  auto it = values.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

// Leibniz expansion; fine for n <= 6.
Integer leibniz_det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Integer term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

TEST(CharacteristicPolynomial, MatchesDeterminantAtIntegerPoints) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 20; ++t) {
      const IntegerMatrix m = random_matrix(rng, n, 9);
      const IntPolynomial p = nilentropy::characteristic_polynomial(m);
      ASSERT_EQ(p.degree(), static_cast<int>(n));
      EXPECT_EQ(p.leading(), 1);
      for (long x = -3; x <= 3; ++x) {
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? Integer(x) : Integer(0)) - m(i, j);
        EXPECT_EQ(p.evaluate(x), leibniz_det(a));
      }
    }
  }
}

TEST(CharacteristicPolynomial, Examples) {
  EXPECT_EQ(nilentropy::characteristic_polynomial(make(2, {1, 1, 1, 0})), (IntPolynomial{-1, -1, 1}));
  EXPECT_EQ(nilentropy::characteristic_polynomial(make(2, {0, -1, 1, -1})), (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(nilentropy::characteristic_polynomial(IntegerMatrix::identity(3)).to_string(),
            "x^3 - 3x^2 + 3x - 1");
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned n = 1; n <= 40; ++n) {
    IntPolynomial product{1};
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) product = product * nilentropy::cyclotomic_polynomial(d);
    std::vector<Integer> expected(n + 1);
    expected[0] = -1;
    expected[n] = 1;
    EXPECT_EQ(product, IntPolynomial(expected)) << n;
  }
  EXPECT_EQ(nilentropy::cyclotomic_polynomial(12), (IntPolynomial{1, 0, -1, 0, 1}));
}

TEST(CyclotomicProduct, Detection) {
  EXPECT_TRUE(nilentropy::is_cyclotomic_product(IntPolynomial{1, 1, 1}));
  EXPECT_TRUE(nilentropy::is_cyclotomic_product(IntPolynomial{-1, 3, -3, 1}));
  EXPECT_TRUE(nilentropy::is_cyclotomic_product(
      nilentropy::cyclotomic_polynomial(7) * nilentropy::cyclotomic_polynomial(9) *
      nilentropy::cyclotomic_polynomial(9)));
  EXPECT_FALSE(nilentropy::is_cyclotomic_product(IntPolynomial{-1, -1, 1}));
  EXPECT_FALSE(nilentropy::is_cyclotomic_product(IntPolynomial{2, 0, 1}));
  // x^4 - x^2 + 1 is Phi_12, x^4 + x^2 + 1 = Phi_3 Phi_6; x^4 + 1 = Phi_8
  EXPECT_TRUE(nilentropy::is_cyclotomic_product(IntPolynomial{1, 0, 1, 0, 1}));
  EXPECT_TRUE(nilentropy::is_cyclotomic_product(IntPolynomial{1, 0, 0, 0, 1}));
  // Salem-type x^4 - x^3 - x^2 - x + 1 has a real root > 1.
  EXPECT_FALSE(nilentropy::is_cyclotomic_product(IntPolynomial{1, -1, -1, -1, 1}));
}

TEST(LargestRealRoot, GoldenRatio) {
  const auto root = nilentropy::largest_real_root(IntPolynomial{-1, -1, 1}, 40);
  ASSERT_TRUE(root);
  EXPECT_LE(root->lower.get_d(), oracle::golden_ratio());
  EXPECT_GE(root->upper.get_d(), oracle::golden_ratio() - 1e-15);
  EXPECT_LE(nilentropy::Rational(root->upper - root->lower).get_d(), std::ldexp(1.0, -40));
}

TEST(LargestRealRoot, RationalAndMissingRoots) {
  const auto r = nilentropy::largest_real_root(IntPolynomial{-15, 2, 1}, 30);  // (x-3)(x+5)
  ASSERT_TRUE(r);
  EXPECT_LE(r->lower, 3);
  EXPECT_GE(r->upper, 3);
  EXPECT_FALSE(nilentropy::largest_real_root(IntPolynomial{1, 0, 1}, 30));
  const auto neg = nilentropy::largest_real_root(IntPolynomial{6, 5, 1}, 30);  // roots -2, -3
  ASSERT_TRUE(neg);
  EXPECT_NEAR(neg->lower.get_d(), -2.0, 1e-8);
}

TEST(Sturm, CountsRoots) {
  const IntPolynomial p = IntPolynomial{-1, 0, 1} * IntPolynomial{-4, 0, 1};  // +-1, +-2
  EXPECT_EQ(nilentropy::count_real_roots(p, -10, 10, 0), 4u);
  EXPECT_EQ(nilentropy::count_real_roots(p, 0, 3, 0), 2u);
  EXPECT_EQ(nilentropy::count_real_roots(p, 1, 3, 1), 1u);  // (0.5, 1.5]
}

TEST(PolynomialAlgebra, GcdAndSquarefree) {
  const IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{2, 1};
  const IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 1};
  EXPECT_EQ(nilentropy::polynomial_gcd(a, b), (IntPolynomial{-1, 1}));
  EXPECT_EQ(nilentropy::squarefree_part(a), (IntPolynomial{-1, 1} * IntPolynomial{2, 1}));
  EXPECT_EQ(a.divide_exact(IntPolynomial{2, 1}), (IntPolynomial{-1, 1} * IntPolynomial{-1, 1}));
  EXPECT_FALSE(a.divide_exact(IntPolynomial{3, 1}));
  EXPECT_EQ((IntPolynomial{4, 6, 2}).primitive_part(), (IntPolynomial{2, 3, 1}));
}

TEST(Smith, Invariants) {
  EXPECT_EQ(nilentropy::smith_invariants(make(2, {2, 0, 0, 3})), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(nilentropy::smith_invariants(make(2, {2, 4, 6, 8})), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(nilentropy::smith_invariants(make(2, {1, 2, 2, 4})), (std::vector<Integer>{1}));
  EXPECT_EQ(nilentropy::rational_rank(make(2, {1, 2, 2, 4})), 1u);
}

TEST(ExteriorPower, EntriesAreMinors) {
  std::mt19937_64 rng(43);
  for (std::size_t n = 2; n <= 4; ++n) {
    const IntegerMatrix m = random_matrix(rng, n, 6);
    for (std::size_t k = 1; k <= n; ++k) {
      const IntegerMatrix e = nilentropy::exterior_power(m, k);
      // lexicographic k-subsets
      std::vector<std::vector<std::size_t>> subsets;
      std::vector<bool> mask(n);
      std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
          if (mask[i]) s.push_back(i);
        subsets.push_back(s);
      } while (std::prev_permutation(mask.begin(), mask.end()));
      std::sort(subsets.begin(), subsets.end());
      ASSERT_EQ(e.rows(), subsets.size());
      for (std::size_t r = 0; r < subsets.size(); ++r) {
        for (std::size_t c = 0; c < subsets.size(); ++c) {
          std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = m(subsets[r][i], subsets[c][j]);
          EXPECT_EQ(e(r, c), leibniz_det(minor));
        }
      }
    }
    EXPECT_EQ(nilentropy::exterior_power(m, n)(0, 0), m.determinant());
  }
}

}  // namespace
