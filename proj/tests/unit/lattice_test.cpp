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

#include <random>

#include "nilentropy/constructions.hpp"
#include "nilentropy/lattice.hpp"
#include "oracles.hpp"

namespace {

using nilentropy::GroupSpec;
using nilentropy::Integer;
using nilentropy::MalcevVector;
using nilentropy::SubgroupLattice;

const GroupSpec H(2, 2);

SubgroupLattice closure(std::vector<MalcevVector> gens, const GroupSpec& spec) {
  return nilentropy::subgroup_closure(gens, spec);
}

TEST(SubgroupClosure, Examples) {
  const auto even = closure({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}, H);
  EXPECT_EQ(even.hirsch_length(), 3u);
  ASSERT_TRUE(even.index());
  EXPECT_EQ(*even.index(), 4);

  const auto center = closure({{0, 0, 1}}, H);
  EXPECT_EQ(center.hirsch_length(), 1u);
  EXPECT_EQ(center.rows()[0], (MalcevVector{0, 0, 1}));
  EXPECT_FALSE(center.index());

  const auto all = closure({{1, 0, 0}, {0, 1, 0}}, H);
  EXPECT_EQ(all.hirsch_length(), 3u);
  EXPECT_EQ(*all.index(), 1);
  EXPECT_EQ(*SubgroupLattice::whole(H).index(), 1);
}

TEST(SubgroupClosure, SquaresAloneGenerateIndexEight) {
  // [x1^2, x2^2] = c^4, so <x1^2, x2^2> meets the center in <c^4>.
  const auto squares = closure({{2, 0, 0}, {0, 2, 0}}, H);
  EXPECT_EQ(*squares.index(), 16);
  EXPECT_TRUE(squares.contains({0, 0, 4}));
  EXPECT_FALSE(squares.contains({0, 0, 2}));
}

TEST(SubgroupClosure, IndexMatchesAbelianDeterminant) {
  // In Z^3 the closure of three vectors has index |det|.
  const GroupSpec Z3(3, 1);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 100; ++t) {
    std::vector<MalcevVector> gens;
    nilentropy::IntegerMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      gens.push_back(oracle::random_element(rng, 3, 5));
      for (std::size_t j = 0; j < 3; ++j) m(j, i) = gens.back()[j];
    }
    const Integer det = abs(m.determinant());
    const auto lattice = closure(gens, Z3);
    if (det == 0) {
      EXPECT_FALSE(lattice.index());
    } else {
      ASSERT_TRUE(lattice.index());
      EXPECT_EQ(*lattice.index(), det);
    }
  }
}

TEST(SubgroupClosure, ClosedUnderTheGroupOperations) {
  const GroupSpec F(2, 4);
  std::mt19937_64 rng(89);
  const auto lattice = closure({{3, 1, 0, 0, 0, 0, 0, 0}, {0, 2, 1, 0, 0, 0, 0, 0}}, F);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<long> d(-3, 3);
    MalcevVector x = F.identity(), y = F.identity();
    for (std::size_t r = 0; r < lattice.hirsch_length(); ++r) {
      x = multiply(x, power(lattice.rows()[r], d(rng), F), F);
      y = multiply(y, power(lattice.rows()[r], d(rng), F), F);
    }
    EXPECT_TRUE(lattice.contains(multiply(x, y, F)));
    EXPECT_TRUE(lattice.contains(inverse(x, F)));
    EXPECT_TRUE(lattice.contains(commutator(x, y, F)));
  }
}

TEST(SubgroupLattice, Coordinates) {
  const auto even = closure({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}, H);
  const MalcevVector g{4, -2, 7};
  const auto coords = even.coordinates(g);
  ASSERT_TRUE(coords);
  MalcevVector rebuilt = H.identity();
  for (std::size_t r = 0; r < coords->size(); ++r) {
    rebuilt = multiply(rebuilt, power(even.rows()[r], (*coords)[r], H), H);
  }
  EXPECT_EQ(rebuilt, g);
  EXPECT_FALSE(even.coordinates({1, 0, 0}));
  EXPECT_EQ(even.pivot_weights(), (std::vector<int>{1, 1, 2}));
  EXPECT_THROW(even.contains({1, 0}), std::invalid_argument);
}

TEST(NormalClosure, Examples) {
  const std::vector<MalcevVector> x1{{1, 0, 0}};
  const auto normal = nilentropy::normal_closure(x1, H);
  EXPECT_EQ(normal.hirsch_length(), 2u);
  EXPECT_TRUE(normal.contains({0, 0, 1}));
  EXPECT_EQ(nilentropy::subgroup_closure(x1, H).hirsch_length(), 1u);
}

class LowerCentral : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(LowerCentral, FreeTermsAreWeightSpans) {
  const auto [m, c] = GetParam();
  const GroupSpec F(m, c);
  const auto series = nilentropy::lower_central_series(F);
  ASSERT_EQ(series.size(), static_cast<std::size_t>(c) + 1);
  EXPECT_TRUE(series.back().is_trivial());
  for (int i = 1; i <= c; ++i) {
    const auto& gamma = series[static_cast<std::size_t>(i - 1)];
    for (int d = 1; d <= c; ++d) {
      EXPECT_EQ(gamma.graded_rank(d), d >= i ? F.graded_rank(d) : 0u) << i << " " << d;
    }
    for (std::size_t k = 0; k < F.dimension(); ++k) {
      EXPECT_EQ(gamma.contains(F.basis_element(k)), F.weight(k) >= i);
    }
    // Generators of gamma_i: basis elements of weight i.
    std::vector<MalcevVector> gens;
    const auto [first, last] = F.weight_range(i);
    for (std::size_t k = first; k < last; ++k) gens.push_back(F.basis_element(k));
    const auto normal = nilentropy::normal_closure(gens, F);
    EXPECT_EQ(normal.hirsch_length(), gamma.hirsch_length());
    for (const auto& row : normal.rows()) EXPECT_TRUE(gamma.contains(row));
    for (const auto& row : gamma.rows()) EXPECT_TRUE(normal.contains(row));
  }
}

INSTANTIATE_TEST_SUITE_P(Free, LowerCentral,
                         ::testing::Values(std::pair{2, 2}, std::pair{2, 4}, std::pair{3, 3}));

TEST(LowerCentral, RankExamples) {
  EXPECT_EQ(nilentropy::lower_central_ranks(H), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(nilentropy::lower_central_ranks(GroupSpec(2, 1)), (std::vector<std::size_t>{2}));
  EXPECT_EQ(nilentropy::lower_central_ranks(GroupSpec(2, 3)), (std::vector<std::size_t>{2, 1, 2}));
}

}  // namespace
