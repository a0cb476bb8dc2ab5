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
#include "oracles.hpp"

namespace {

using nilentropy::Endomorphism;
using nilentropy::GroupSpec;
using nilentropy::MalcevVector;
using nilentropy::SemidirectSpec;

const GroupSpec H(2, 2);
const Endomorphism fib(H, {MalcevVector{1, 1, 0}, MalcevVector{1, 0, 0}});
const Endomorphism phi_z(H, {MalcevVector{1, 0, 1}, MalcevVector{0, 1, 0}});
const Endomorphism phi_u(H, {MalcevVector{1, 0, 0}, MalcevVector{1, 1, 0}});

Endomorphism random_ia(const GroupSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<MalcevVector> images;
  for (int g = 0; g < spec.rank(); ++g) {
    MalcevVector w(spec.dimension());
    for (std::size_t k = spec.weight_range(2).first; k < w.size(); ++k) w[k] = d(rng);
    images.push_back(multiply(spec.generator(g), w, spec));
  }
  return Endomorphism(spec, images);
}

TEST(FreeNilpotent, HirschLengths) {
  EXPECT_EQ(nilentropy::free_nilpotent(2, 2), H);
  EXPECT_EQ(nilentropy::free_nilpotent(2, 2).dimension(), 3u);
  EXPECT_EQ(nilentropy::free_nilpotent(2, 1).dimension(), 2u);
  EXPECT_EQ(nilentropy::free_nilpotent(2, 4).dimension(), 8u);
  for (int m = 1; m <= 3; ++m) {
    for (int c = 1; c <= 5; ++c) {
      long total = 0;
      for (int d = 1; d <= c; ++d) total += oracle::witt(m, d);
      EXPECT_EQ(nilentropy::free_nilpotent(m, c).dimension(), static_cast<std::size_t>(total));
    }
  }
  EXPECT_THROW(nilentropy::free_nilpotent(0, 2), std::invalid_argument);
  EXPECT_THROW(nilentropy::free_nilpotent(2, 0), std::invalid_argument);
}

TEST(Truncate, Examples) {
  EXPECT_EQ(nilentropy::truncate(H, 2), GroupSpec(2, 1));
  EXPECT_EQ(nilentropy::truncate(GroupSpec(2, 4), 4), GroupSpec(2, 3));
  EXPECT_EQ(nilentropy::truncate(H, 3), H);
  EXPECT_THROW(nilentropy::truncate(H, 1), std::out_of_range);
  EXPECT_THROW(nilentropy::truncate(H, 4), std::out_of_range);
}

TEST(Truncate, ProjectIsAHomomorphism) {
  const GroupSpec F(2, 4);
  const GroupSpec Q = nilentropy::truncate(F, 3);
  std::mt19937_64 rng(97);
  for (int t = 0; t < 200; ++t) {
    const MalcevVector a = oracle::random_element(rng, F.dimension(), 50);
    const MalcevVector b = oracle::random_element(rng, F.dimension(), 50);
    EXPECT_EQ(project(multiply(a, b, F), 3, F),
              multiply(project(a, 3, F), project(b, 3, F), Q));
  }
}

TEST(Semidirect, Examples) {
  const GroupSpec Z2(2, 1);
  const Endomorphism shear(Z2, {MalcevVector{1, 0}, MalcevVector{1, 1}});
  const SemidirectSpec heis = nilentropy::semidirect_unipotent(Z2, shear);
  EXPECT_EQ(heis.nilpotency_class(), 2);
  EXPECT_EQ(heis.lower_central_ranks(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(heis.hirsch_length(), 3u);

  const SemidirectSpec su = nilentropy::semidirect_unipotent(H, phi_u);
  EXPECT_EQ(su.nilpotency_class(), 3);
  EXPECT_LE(su.nilpotency_class(), static_cast<int>(H.dimension()) + 1);
  EXPECT_EQ(su.lower_central_ranks(), (std::vector<std::size_t>{2, 1, 1}));

  const SemidirectSpec sz = nilentropy::semidirect_unipotent(H, phi_z);
  EXPECT_EQ(sz.nilpotency_class(), 2);
  EXPECT_EQ(sz.lower_central_ranks(), (std::vector<std::size_t>{3, 1}));
}

TEST(Semidirect, RejectsNonUnipotentMonodromy) {
  EXPECT_THROW(nilentropy::semidirect_unipotent(H, fib), std::invalid_argument);
  const Endomorphism doubling(H, {MalcevVector{2, 0, 0}, MalcevVector{0, 1, 0}});
  EXPECT_THROW(nilentropy::semidirect_unipotent(H, doubling), std::invalid_argument);
  const Endomorphism order3(H, {MalcevVector{0, 1, 0}, MalcevVector{-1, -1, 0}});
  EXPECT_THROW(nilentropy::semidirect_unipotent(H, order3), std::invalid_argument);
}

TEST(Semidirect, ConjugationByT) {
  const SemidirectSpec s(H, phi_u);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 50; ++i) {
    const MalcevVector n = oracle::random_element(rng, 3, 20);
    const auto conj = s.multiply(s.multiply(s.inverse(s.t()), {0, n}), s.t());
    EXPECT_EQ(conj.k, 0);
    EXPECT_EQ(conj.n, inverse(phi_u)->apply(n));
  }
}

TEST(Semidirect, Associative) {
  std::mt19937_64 rng(103);
  const SemidirectSpec s(H, phi_u);
  std::uniform_int_distribution<long> k(-4, 4);
  auto element = [&] {
    return SemidirectSpec::Element{k(rng), oracle::random_element(rng, 3, 30)};
  };
  for (int t = 0; t < 10000; ++t) {
    const auto a = element(), b = element(), c = element();
    ASSERT_EQ(s.multiply(s.multiply(a, b), c), s.multiply(a, s.multiply(b, c)));
  }
  for (int t = 0; t < 100; ++t) {
    const auto a = element();
    EXPECT_EQ(s.multiply(a, s.inverse(a)), s.identity());
    EXPECT_EQ(s.multiply(s.identity(), a), a);
  }
}

TEST(Semidirect, ClassWithinHirschBoundForRandomIa) {
  std::mt19937_64 rng(107);
  for (const auto& [m, c] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const GroupSpec F(m, c);
    for (int t = 0; t < 5; ++t) {
      const SemidirectSpec s(F, random_ia(F, rng));
      EXPECT_LE(s.nilpotency_class(), static_cast<int>(F.dimension()) + 1);
      EXPECT_GE(s.nilpotency_class(), c);
    }
  }
}

TEST(UpperCentral, Examples) {
  EXPECT_EQ(nilentropy::upper_central_lengths(H), 2);
  EXPECT_EQ(nilentropy::upper_central_lengths(GroupSpec(2, 1)), 1);
  EXPECT_EQ(nilentropy::upper_central_lengths(GroupSpec(2, 4)), 4);
  EXPECT_EQ(nilentropy::upper_central_lengths(SemidirectSpec(H, phi_z)), 2);
  EXPECT_EQ(nilentropy::upper_central_lengths(SemidirectSpec(H, phi_u)), 3);
  const GroupSpec Z2(2, 1);
  EXPECT_EQ(nilentropy::upper_central_lengths(
                SemidirectSpec(Z2, Endomorphism(Z2, {MalcevVector{1, 0}, MalcevVector{1, 1}}))),
            2);
}

TEST(UpperCentral, HomologicallyTrivialMonodromyKeepsLength) {
  std::mt19937_64 rng(109);
  for (const auto& [m, c] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    const GroupSpec F(m, c);
    const int base = nilentropy::upper_central_lengths(F);
    for (int t = 0; t < 5; ++t) {
      const SemidirectSpec s(F, random_ia(F, rng));
      EXPECT_EQ(nilentropy::upper_central_lengths(s), base);
    }
  }
}

TEST(Surface, Examples) {
  EXPECT_EQ(nilentropy::surface_quotient(1, 3).dimension(), 2u);
  EXPECT_EQ(nilentropy::surface_lie_ranks(1, 4), (std::vector<std::size_t>{2, 0, 0, 0}));
  EXPECT_EQ(nilentropy::surface_lie_ranks(2, 2), (std::vector<std::size_t>{4, 5}));
  const GroupSpec s = nilentropy::surface_quotient(2, 3);
  EXPECT_EQ(s.graded_rank(1), 4u);
  EXPECT_EQ(s.graded_rank(2), 5u);
  EXPECT_EQ(s.graded_rank(3), 16u);
  EXPECT_THROW(nilentropy::surface_quotient(0, 2), std::invalid_argument);
  EXPECT_THROW(nilentropy::surface_quotient(2, 0), std::invalid_argument);
}

TEST(Surface, RanksMatchOracle) {
  for (int g = 1; g <= 3; ++g) {
    const int top = g == 3 ? 3 : 4;
    const auto ranks = nilentropy::surface_lie_ranks(g, top);
    for (int d = 1; d <= top; ++d) {
      EXPECT_EQ(static_cast<long>(ranks[static_cast<std::size_t>(d - 1)]), oracle::surface_rank(g, d))
          << g << " " << d;
    }
  }
}

TEST(Surface, GeneratingFunctionIdentity) {
  // prod_n (1 - t^n)^{r_n} = 1 - 2g t + t^2 modulo t^{c+1}.
  for (int g = 1; g <= 3; ++g) {
    const int c = g == 3 ? 3 : 4;
    const auto ranks = nilentropy::surface_lie_ranks(g, c);
    std::vector<long> product(static_cast<std::size_t>(c) + 1, 0);
    product[0] = 1;
    for (int n = 1; n <= c; ++n) {
      for (std::size_t r = 0; r < ranks[static_cast<std::size_t>(n - 1)]; ++r) {
        for (int e = c; e >= n; --e) product[static_cast<std::size_t>(e)] -= product[static_cast<std::size_t>(e - n)];
      }
    }
    std::vector<long> expected(static_cast<std::size_t>(c) + 1, 0);
    expected[0] = 1;
    expected[1] = -2L * g;
    expected[2] = 1;
    EXPECT_EQ(product, expected) << g;
  }
}

TEST(Surface, QuotientIsAGroup) {
  const GroupSpec s = nilentropy::surface_quotient(2, 3);
  std::mt19937_64 rng(113);
  for (int t = 0; t < 200; ++t) {
    const MalcevVector a = oracle::random_element(rng, s.dimension(), 9);
    const MalcevVector b = oracle::random_element(rng, s.dimension(), 9);
    const MalcevVector c = oracle::random_element(rng, s.dimension(), 9);
    EXPECT_EQ(multiply(multiply(a, b, s), c, s), multiply(a, multiply(b, c, s), s));
    EXPECT_TRUE(multiply(a, inverse(a, s), s).is_identity());
  }
  // The relator [a1,b1][a2,b2] is trivial in the quotient.
  const auto word = nilentropy::WordExpr::parse("x1^-1 x2^-1 x1 x2 x3^-1 x4^-1 x3 x4");
  EXPECT_TRUE(eval_word(word, s).is_identity());
}

std::vector<MalcevVector> generators(const GroupSpec& F) {
  std::vector<MalcevVector> out;
  for (int g = 0; g < F.rank(); ++g) out.push_back(F.generator(g));
  return out;
}

TEST(RelatorCheck, Examples) {
  const GroupSpec F2(4, 2);
  const auto identity = nilentropy::relator_check(generators(F2), 2, 2);
  EXPECT_TRUE(identity.holds);
  EXPECT_EQ(identity.exponent, 1);

  auto doubled = generators(F2);
  doubled[0] = power(doubled[0], 2, F2);
  const auto bad = nilentropy::relator_check(doubled, 2, 2);
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.search_radius, 4);
}

TEST(RelatorCheck, SwapWithInverse) {
  // a1 -> b1^-1, b1 -> a1 sends [a1,b1] to [b1^-1, a1] = b1 [a1,b1] b1^-1,
  // a conjugate of the relator itself. Only the first commutator is
  // conjugated, so from class 3 on the image of the full relator is no
  // longer conjugate to it.
  for (int c : {2, 3}) {
    const GroupSpec F(4, c);
    auto images = generators(F);
    images[0] = inverse(F.generator(1), F);
    images[1] = F.generator(0);
    const auto check = nilentropy::relator_check(images, 2, c);
    if (c == 2) {
      EXPECT_TRUE(check.holds);
      EXPECT_EQ(check.exponent, 1);
    } else {
      EXPECT_FALSE(check.holds);
    }
  }
}

TEST(RelatorCheck, InnerAutomorphisms) {
  // Conjugating every generator by h conjugates the relator by h.
  const GroupSpec F(4, 3);
  for (const char* h : {"x1", "x2 x3^-1", "x4 x1 x2"}) {
    const MalcevVector conjugator = eval_word(nilentropy::WordExpr::parse(h), F);
    std::vector<MalcevVector> images;
    for (const auto& g : generators(F)) images.push_back(conjugate(g, conjugator, F));
    const auto check = nilentropy::relator_check(images, 2, 3);
    EXPECT_TRUE(check.holds) << h;
    EXPECT_EQ(check.exponent, 1);
  }
}

TEST(RelatorCheck, FirstHandleTransvectionAtClassThree) {
  // a1 -> a1 b1 sends [a1, b1] to b1^-1 [a1, b1] b1 but leaves [a2, b2]
  // alone, so the full relator is not a conjugate from class 3 on.
  for (int c : {2, 3}) {
    const GroupSpec F(4, c);
    auto images = generators(F);
    images[0] = multiply(F.generator(0), F.generator(1), F);
    EXPECT_EQ(nilentropy::relator_check(images, 2, c).holds, c == 2) << c;
  }
}

}  // namespace
