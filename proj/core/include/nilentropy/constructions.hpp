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

#ifndef NILENTROPY_CONSTRUCTIONS_HPP
#define NILENTROPY_CONSTRUCTIONS_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "nilentropy/automorphism.hpp"
#include "nilentropy/group.hpp"
#include "nilentropy/lattice.hpp"

namespace nilentropy {

/// F_m / gamma_{c+1}.
GroupSpec free_nilpotent(int m, int c);

/// N / gamma_k(N), the class-(k-1) quotient; k = class + 1 returns spec
/// itself. Throws std::out_of_range unless 2 <= k <= class + 1.
GroupSpec truncate(const GroupSpec& spec, int k);

/// gamma_1 = N, gamma_2, ..., ending with the trivial subgroup.
std::vector<SubgroupLattice> lower_central_series(const GroupSpec& spec);

/// Ranks of gamma_i / gamma_{i+1} for i = 1..(nilpotency class).
std::vector<std::size_t> lower_central_ranks(const GroupSpec& spec);

/// N x|_phi Z with elements (k, n) standing for t^k n, multiplied by
/// (k1, n1)(k2, n2) = (k1 + k2, phi^{-k2}(n1) n2), so t^-1 n t = phi^-1(n).
class SemidirectSpec {
 public:
  struct Element {
    Integer k;
    MalcevVector n;
    friend bool operator==(const Element&, const Element&) = default;
  };

  /// Throws std::invalid_argument when phi is not an automorphism or not
  /// unipotent on H_1, and Error when the lower central series does not
  /// terminate within Hirsch(base) + 1 steps.
  SemidirectSpec(GroupSpec base, Endomorphism monodromy);

  const GroupSpec& base() const { return base_; }
  const Endomorphism& monodromy() const { return monodromy_; }
  /// Nilpotency class of N', from the lower central series.
  int nilpotency_class() const { return class_; }
  /// Ranks of gamma_i(N') / gamma_{i+1}(N'), i = 1..class.
  const std::vector<std::size_t>& lower_central_ranks() const { return ranks_; }
  /// gamma_i(N') for i >= 2 as subgroups of the base (index 0 is gamma_2).
  const std::vector<SubgroupLattice>& lower_central_tail() const { return series_tail_; }
  std::size_t hirsch_length() const { return base_.dimension() + 1; }

  Element identity() const;
  Element t() const;
  /// The base generator x_{g+1}.
  Element generator(int g) const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// phi^k applied to n (cached powers of phi and its inverse).
  MalcevVector twist(const Integer& k, const MalcevVector& n) const;

 private:
  GroupSpec base_;
  Endomorphism monodromy_;
  Endomorphism monodromy_inverse_;
  struct PowerCache;

  int class_ = 0;
  std::vector<SubgroupLattice> series_tail_;
  std::vector<std::size_t> ranks_;
  std::shared_ptr<PowerCache> powers_;
};

/// Validating factory for SemidirectSpec (same errors as the constructor).
SemidirectSpec semidirect_unipotent(const GroupSpec& base, const Endomorphism& phi);

/// Length of the upper central series of the rational Lie algebra of N.
int upper_central_lengths(const GroupSpec& spec);
/// Same for N x|_phi Z (Lie algebra Q tau + n with ad tau = log phi).
int upper_central_lengths(const SemidirectSpec& spec);

/// pi_1 of the closed genus-g surface modulo gamma_{c+1}: generators
/// a_1, b_1, ..., a_g, b_g (x_{2i-1} = a_i, x_{2i} = b_i) and relator
/// [a_1,b_1]...[a_g,b_g]. Throws std::invalid_argument for g < 1 or c < 1,
/// TorsionError when a graded piece has torsion.
GroupSpec surface_quotient(int genus, int cls);

/// Graded ranks of the free Lie ring on 2g generators modulo the ideal
/// generated by sum_i [a_i, b_i], degrees 1..c, from integer row reduction;
/// throws TorsionError when some degree has torsion.
std::vector<std::size_t> surface_lie_ranks(int genus, int cls);

/// The surface relator [a_1,b_1]...[a_g,b_g] in F_{2g} / gamma_{c+1}.
MalcevVector surface_relator(const GroupSpec& free_spec, int genus);

struct RelatorCheck {
  bool holds = false;
  /// +1 or -1 when the image is conjugate to relator^exponent.
  int exponent = 0;
  /// Radius of the conjugator ball that was searched.
  int search_radius = 0;
};

/// Does the free endomorphism with these images send the surface relator to
/// a conjugate of relator^{+-1}? Conjugators are searched in the Cayley ball
/// of the given radius.
RelatorCheck relator_check(const std::vector<MalcevVector>& images, int genus, int cls,
                           int search_radius = 4);

}  // namespace nilentropy

#endif  // NILENTROPY_CONSTRUCTIONS_HPP
