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

#ifndef NILENTROPY_LATTICE_HPP
#define NILENTROPY_LATTICE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nilentropy/group.hpp"

namespace nilentropy {

/// A subgroup stored as an echelon sequence r_1, ..., r_k of ambient
/// elements with strictly increasing leading coordinates. Every member is
/// uniquely r_1^{a_1} ... r_k^{a_k}; membership is decided by successive
/// leading-coordinate reduction.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(GroupSpec ambient);

  /// The whole group, with the unit basis vectors as echelon basis.
  static SubgroupLattice whole(const GroupSpec& ambient);

  const GroupSpec& ambient() const { return ambient_; }
  const std::vector<MalcevVector>& rows() const { return rows_; }
  std::size_t pivot(std::size_t row) const { return pivots_[row]; }
  std::size_t hirsch_length() const { return rows_.size(); }
  bool is_trivial() const { return rows_.empty(); }

  bool contains(const MalcevVector& g) const;
  /// Exponents (a_1..a_k) with g = r_1^{a_1} ... r_k^{a_k}, or nullopt.
  std::optional<std::vector<Integer>> coordinates(const MalcevVector& g) const;
  /// Pivot weights, i.e. ambient weight of each row's leading coordinate.
  std::vector<int> pivot_weights() const;

  /// Adds g to the generated set (sifting with gcd updates of pivots).
  /// Returns true when the lattice changed. Does not close under products.
  bool insert(const MalcevVector& g);

  /// Ambient index when the Hirsch lengths agree, nullopt for infinite index.
  std::optional<Integer> index() const;

  /// Number of rows whose pivot has weight d.
  std::size_t graded_rank(int d) const;

  friend bool operator==(const SubgroupLattice& a, const SubgroupLattice& b) {
    return a.rows_ == b.rows_;
  }

 private:
  GroupSpec ambient_;
  std::vector<MalcevVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Conjugation-like maps a closure must be stable under.
using ElementMap = std::function<MalcevVector(const MalcevVector&)>;

struct ClosureOptions {
  std::size_t max_rounds = 64;
};

/// Echelon basis of the subgroup generated by `generators`.
SubgroupLattice subgroup_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                                 const ClosureOptions& options = {});

/// Smallest subgroup containing `generators` and stable under every map in
/// `conjugators` (used for normal closures).
SubgroupLattice stable_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                               const std::vector<ElementMap>& conjugators,
                               const ClosureOptions& options = {});

/// Normal closure in spec (stable under conjugation by the generators and
/// their inverses).
SubgroupLattice normal_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                               const ClosureOptions& options = {});

}  // namespace nilentropy

#endif  // NILENTROPY_LATTICE_HPP
