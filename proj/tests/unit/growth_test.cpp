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

#include <cmath>

#include "nilentropy/ball.hpp"
#include "nilentropy/growth.hpp"
#include "oracles.hpp"

namespace {

using nilentropy::Endomorphism;
using nilentropy::GroupSpec;
using nilentropy::LengthMode;
using nilentropy::MalcevVector;

const GroupSpec H(2, 2);
const Endomorphism fib(H, {MalcevVector{1, 1, 0}, MalcevVector{1, 0, 0}});
const Endomorphism phi_z(H, {MalcevVector{1, 0, 1}, MalcevVector{0, 1, 0}});
const Endomorphism phi_u(H, {MalcevVector{1, 0, 0}, MalcevVector{1, 1, 0}});
const MalcevVector x1{1, 0, 0}, x2{0, 1, 0}, c{0, 0, 1};

Endomorphism fib_on(const GroupSpec& spec) {
  return Endomorphism::from_words(
      spec, {nilentropy::WordExpr::parse("x1 x2"), nilentropy::WordExpr::parse("x1")});
}

TEST(LengthMode, Names) {
  for (LengthMode m : {LengthMode::kExactBfs, LengthMode::kKaridi, LengthMode::kNormalFormUpper,
                       LengthMode::kAbelianLower}) {
    EXPECT_EQ(nilentropy::parse_length_mode(nilentropy::to_string(m)), m);
  }
  EXPECT_EQ(nilentropy::to_string(LengthMode::kNormalFormUpper), "normalform-upper");
  EXPECT_THROW(nilentropy::parse_length_mode("geodesic"), std::invalid_argument);
}

TEST(GrowthSeries, KaridiExamples) {
  const auto f = nilentropy::growth_series(fib, x1, 3, LengthMode::kKaridi);
  ASSERT_EQ(f.entries.size(), 3u);
  EXPECT_DOUBLE_EQ(f.entries[0].length, 1.0);
  EXPECT_DOUBLE_EQ(f.entries[1].length, 2.0);
  EXPECT_DOUBLE_EQ(f.entries[2].length, 3.0);
  EXPECT_EQ(f.entries[2].n, 3);

  const auto u = nilentropy::growth_series(phi_u, x2, 12, LengthMode::kKaridi);
  const auto z = nilentropy::growth_series(phi_z, x1, 12, LengthMode::kKaridi);
  for (long n = 1; n <= 12; ++n) {
    EXPECT_NEAR(u.entries[static_cast<std::size_t>(n - 1)].length, static_cast<double>(n), 1e-12);
    EXPECT_NEAR(z.entries[static_cast<std::size_t>(n - 1)].length, std::sqrt(static_cast<double>(n)), 1e-12);
  }
  EXPECT_THROW(nilentropy::growth_series(fib, x1, 0, LengthMode::kKaridi), std::invalid_argument);
}

TEST(GrowthSeries, ExactBfsMatchesBall) {
  const nilentropy::CayleyBall ball(H, {10, 10'000'000});
  const auto s = nilentropy::growth_series(fib, x1, 20, LengthMode::kExactBfs);

  ASSERT_FALSE(s.entries.empty());
  for (const auto& e : s.entries) {
    const MalcevVector g = iterate(fib, e.n).apply(x1);
    ASSERT_TRUE(ball.distance(g));
    EXPECT_EQ(e.length, *ball.distance(g));
  }
  // Lengths grow like phi^n, so the radius-10 cap cuts the series short.
  EXPECT_LT(s.entries.size(), 20u);
  EXPECT_FALSE(s.warnings.empty());
}

TEST(GrowthSeries, ModesAreOrdered) {
  for (const Endomorphism* phi : {&fib, &phi_u, &phi_z}) {
    for (const MalcevVector& g : {x1, x2, MalcevVector{1, -1, 2}}) {
      const auto lower = nilentropy::growth_series(*phi, g, 8, LengthMode::kAbelianLower);
      const auto exact = nilentropy::growth_series(*phi, g, 8, LengthMode::kExactBfs);
      const auto upper = nilentropy::growth_series(*phi, g, 8, LengthMode::kNormalFormUpper);
      for (const auto& e : exact.entries) {
        const std::size_t i = static_cast<std::size_t>(e.n - 1);
        EXPECT_LE(lower.entries[i].length, e.length);
        EXPECT_LE(e.length, upper.entries[i].length);
      }
    }
  }
}

TEST(GrowthSeries, GeneratingSetChangesLengthsBoundedly) {
  // c is a word of length 4 in x1, x2, so lengths over {x1, x2, c} are
  // within a factor 4 of lengths over {x1, x2}.
  const GroupSpec wide = H.with_generating_set({x1, x2, c});
  for (const Endomorphism* phi : {&fib, &phi_z}) {
    const Endomorphism phi_wide(wide, phi->images());
    const auto narrow = nilentropy::growth_series(*phi, x1, 12, LengthMode::kExactBfs);
    const auto broad = nilentropy::growth_series(phi_wide, x1, 12, LengthMode::kExactBfs);
    const std::size_t n = std::min(narrow.entries.size(), broad.entries.size());
    ASSERT_GE(n, 4u);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_LE(broad.entries[i].length, narrow.entries[i].length);
      EXPECT_LE(narrow.entries[i].length, 4 * broad.entries[i].length);
    }
  }
}

TEST(EntropyEstimate, Examples) {
  std::vector<double> f{1, 1};
  while (f.size() < 30) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  const auto fibo = nilentropy::entropy_estimate(nilentropy::make_series(f));
  EXPECT_GE(fibo.value, 1.59);
  EXPECT_LE(fibo.value, 1.65);
  EXPECT_EQ(fibo.window, (std::pair<long, long>{15, 30}));

  EXPECT_DOUBLE_EQ(
      nilentropy::entropy_estimate(nilentropy::make_series(std::vector<double>(30, 7.0))).value,
      1.0);
  std::vector<double> sq;
  for (int n = 1; n <= 30; ++n) sq.push_back(n * n);
  const auto quad = nilentropy::entropy_estimate(nilentropy::make_series(sq));
  EXPECT_NEAR(quad.value, 1.0, 1e-9);
  EXPECT_NEAR(quad.poly_exponent, 2.0, 1e-6);
}

TEST(EntropyEstimate, Errors) {
  EXPECT_THROW(nilentropy::entropy_estimate(nilentropy::make_series({1, 2, 3, 4, 5})),
               nilentropy::Error);
  EXPECT_THROW(nilentropy::entropy_estimate(nilentropy::make_series(std::vector<double>(30, 0.0))),
               nilentropy::Error);
  EXPECT_THROW(nilentropy::entropy_estimate(nilentropy::GrowthSeries{}), nilentropy::Error);
  // Alternating lengths do not fit the model.
  std::vector<double> wild;
  for (int n = 1; n <= 30; ++n) wild.push_back(n % 2 ? 1.0 : 1e6);
  EXPECT_THROW(nilentropy::entropy_estimate(nilentropy::make_series(wild)), nilentropy::Error);
  EXPECT_THROW(nilentropy::make_series({1, -1}), std::invalid_argument);
}

TEST(EntropyEstimate, RecoversSyntheticRates) {
  for (double k_true : {1.0, 1.5, 2.0}) {
    for (int p : {0, 1, 2}) {
      std::vector<double> l;
      for (int n = 1; n <= 30; ++n) l.push_back(3.0 * std::pow(n, p) * std::pow(k_true, n));
      const auto e = nilentropy::entropy_estimate(nilentropy::make_series(l));
      EXPECT_NEAR(e.value, k_true, 0.01 * k_true) << k_true << " " << p;
      EXPECT_NEAR(e.poly_exponent, p, 1e-6);
      EXPECT_LT(e.residual, 1e-9);
    }
  }
}

TEST(EntropyEstimate, HugeLengthsStayFinite) {
  const auto s = nilentropy::growth_series(fib, x1, 2000, LengthMode::kKaridi);
  const auto e = nilentropy::entropy_estimate(s);
  EXPECT_NEAR(e.value, oracle::golden_ratio(), 0.001);
  EXPECT_TRUE(std::isfinite(s.entries.back().log_length));
}

TEST(PolyDegreeFit, Examples) {
  const auto z = nilentropy::poly_degree_fit(nilentropy::growth_series(phi_z, x1, 30, LengthMode::kKaridi));
  EXPECT_NEAR(z.degree, 0.5, 0.05);
  const auto u = nilentropy::poly_degree_fit(nilentropy::growth_series(phi_u, x2, 30, LengthMode::kKaridi));
  EXPECT_NEAR(u.degree, 1.0, 0.05);
  EXPECT_GT(u.correlation, 0.99);
  const auto flat = nilentropy::poly_degree_fit(nilentropy::make_series(std::vector<double>(30, 4.0)));
  EXPECT_DOUBLE_EQ(flat.degree, 0.0);
  EXPECT_DOUBLE_EQ(flat.correlation, 0.0);
  EXPECT_THROW(nilentropy::poly_degree_fit(nilentropy::growth_series(fib, x1, 30, LengthMode::kKaridi)),
               nilentropy::Error);
}

TEST(PolyDegreeFit, HomologicallyTrivialMapsHaveEntropyOne) {
  const GroupSpec F(2, 3);
  const Endomorphism ia = Endomorphism::from_words(
      F, {nilentropy::WordExpr::parse("x1 x2^-1 x1^-1 x2 x1"), nilentropy::WordExpr::parse("x2")});
  ASSERT_TRUE(is_homologically_trivial(ia));
  for (int g = 0; g < 2; ++g) {
    const auto s = nilentropy::growth_series(ia, F.generator(g), 30, LengthMode::kKaridi);
    EXPECT_NEAR(nilentropy::entropy_estimate(s).value, 1.0, 0.01);
    EXPECT_TRUE(std::isfinite(nilentropy::poly_degree_fit(s).degree));
  }
}

TEST(AbelianComparison, Examples) {
  const auto f = nilentropy::abelian_comparison(fib, {x1, x2}, 30);
  EXPECT_NEAR(f.spectral_radius, oracle::golden_ratio(), 1e-9);
  EXPECT_GE(f.ratio, 0.95);
  EXPECT_LE(f.ratio, 1.05);
  const auto id = nilentropy::abelian_comparison(Endomorphism::identity(H), {x1, x2}, 30);
  EXPECT_DOUBLE_EQ(id.spectral_radius, 1.0);
  EXPECT_DOUBLE_EQ(id.entropy_estimate, 1.0);
  EXPECT_DOUBLE_EQ(id.ratio, 1.0);
  const GroupSpec F(2, 3);
  const auto lifted = nilentropy::abelian_comparison(fib_on(F), {F.generator(0), F.generator(1)}, 30);
  EXPECT_NEAR(lifted.entropy_estimate, oracle::golden_ratio(), 0.05 * oracle::golden_ratio());
}

TEST(AbelianComparison, IndependentOfGeneratingSet) {
  const auto narrow = nilentropy::abelian_comparison(fib, {x1, x2}, 30);
  const auto wide = nilentropy::abelian_comparison(fib, {x1, x2, c}, 30);
  EXPECT_NEAR(narrow.entropy_estimate, wide.entropy_estimate, 0.02);
}

TEST(QuotientTower, Examples) {
  const GroupSpec F(2, 3);
  const auto rows = nilentropy::quotient_tower(fib_on(F), F.generator(0), {2, 3, 4}, 30);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].k, static_cast<int>(i) + 2);
    EXPECT_NEAR(rows[i].estimate.value, oracle::golden_ratio(), 0.1 * oracle::golden_ratio());
    if (i > 0) {
      EXPECT_GE(rows[i].estimate.value + 0.02, rows[i - 1].estimate.value);
    }
  }
  for (const auto& row : nilentropy::quotient_tower(Endomorphism::identity(F), F.generator(1), {2, 4}, 30)) {
    EXPECT_DOUBLE_EQ(row.estimate.value, 1.0);
  }
  const Endomorphism shear = Endomorphism::from_words(
      F, {nilentropy::WordExpr::parse("x1"), nilentropy::WordExpr::parse("x1 x2")});
  for (const auto& row : nilentropy::quotient_tower(shear, F.generator(1), {2, 3}, 30)) {
    EXPECT_NEAR(row.estimate.value, 1.0, 0.01);
  }
  EXPECT_THROW(nilentropy::quotient_tower(fib, x1, {5}, 30), std::out_of_range);
  EXPECT_THROW(nilentropy::quotient_tower(fib, x1, {1}, 30), std::out_of_range);
}

TEST(FiniteIndex, Examples) {
  const std::vector<MalcevVector> kernel{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}};
  const auto f = nilentropy::finite_index_experiment(fib, kernel, 30);
  EXPECT_EQ(f.index, 4);
  EXPECT_NEAR(f.subgroup_estimate, f.ambient_estimate, 0.1 * f.ambient_estimate);
  EXPECT_NEAR(f.ambient_estimate, oracle::golden_ratio(), 0.05);
  const auto id = nilentropy::finite_index_experiment(Endomorphism::identity(H), kernel, 30);
  EXPECT_DOUBLE_EQ(id.subgroup_estimate, 1.0);
  const auto z = nilentropy::finite_index_experiment(phi_z, kernel, 30);
  EXPECT_NEAR(z.subgroup_estimate, 1.0, 0.01);
}

TEST(FiniteIndex, Errors) {
  EXPECT_THROW(nilentropy::finite_index_experiment(fib, {c}, 30), nilentropy::Error);
  // (x1 x2)^2 is not in <x1^2, x2^2>.
  EXPECT_THROW(nilentropy::finite_index_experiment(fib, {{2, 0, 0}, {0, 2, 0}}, 30), nilentropy::Error);
  EXPECT_THROW(nilentropy::finite_index_experiment(fib, {}, 30), std::invalid_argument);
}

TEST(Distortion, HeisenbergCenter) {
  const auto d = nilentropy::distortion_profile(H, 2, 20);
  EXPECT_NEAR(d.fit.degree, 2.0, 0.2);
  EXPECT_EQ(d.radius, 20);
  // Largest central exponent within word length 2j is floor(j^2 / 4).
  for (const auto& [l, delta] : d.points) {
    if (l % 2 == 0) {
      EXPECT_EQ(delta, std::floor((l / 2) * (l / 2) / 4.0)) << l;
    }
  }
}

TEST(Distortion, WholeGroupIsUndistorted) {
  const auto d = nilentropy::distortion_profile(H, 1, 16);
  EXPECT_NEAR(d.fit.degree, 1.0, 0.05);
  for (const auto& [l, delta] : d.points) EXPECT_EQ(delta, l);
}

TEST(Distortion, Errors) {
  EXPECT_THROW(nilentropy::distortion_profile(H, 3, 16), std::out_of_range);
  EXPECT_THROW(nilentropy::distortion_profile(H, 0, 16), std::out_of_range);
  EXPECT_THROW(nilentropy::distortion_profile(H, 2, 3), std::invalid_argument);
  EXPECT_THROW(nilentropy::distortion_profile(H, 2, 12), nilentropy::Error);
}

TEST(Isoperimetric, Heisenberg) {
  // x2 x1 = x1 x2 c^-1 has length 2 and central part 1.
  const double k = nilentropy::isoperimetric_constant(H, 10);
  EXPECT_DOUBLE_EQ(k, 0.25);
  EXPECT_THROW(nilentropy::isoperimetric_constant(GroupSpec(2, 1), 4), std::invalid_argument);
}

TEST(RankSweep, JordanShear) {
  const auto rows = nilentropy::rank_sweep(3, 2, 24);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rank, 2);
  EXPECT_NEAR(rows[0].degree, 1.0, 0.1);
  EXPECT_GE(rows[1].degree, rows[0].degree - 0.05);
  EXPECT_THROW(nilentropy::rank_sweep(1, 2, 24), std::invalid_argument);
}

}  // namespace
