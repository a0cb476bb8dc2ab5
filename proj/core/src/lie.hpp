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

#ifndef NILENTROPY_SRC_LIE_HPP
#define NILENTROPY_SRC_LIE_HPP

#include <cstddef>
#include <vector>

#include "nilentropy/automorphism.hpp"
#include "nilentropy/group.hpp"

namespace nilentropy::detail {

using RationalVector = std::vector<Rational>;

/// Reduced row echelon basis of a rational subspace.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t dim) : dim_(dim) {}

  std::size_t ambient_dimension() const { return dim_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Representative of v modulo the subspace (zero at every pivot).
  RationalVector reduce(RationalVector v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(RationalVector v);

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Finite-dimensional rational Lie algebra given by structure constants.
class RationalLieAlgebra {
 public:
  explicit RationalLieAlgebra(std::size_t dim);

  std::size_t dimension() const { return dim_; }
  const RationalVector& constant(std::size_t i, std::size_t j) const {
    return constants_[i * dim_ + j];
  }
  void set_constant(std::size_t i, std::size_t j, RationalVector v) {
    constants_[i * dim_ + j] = std::move(v);
  }
  RationalVector bracket(const RationalVector& a, const RationalVector& b) const;

 private:
  std::size_t dim_;
  std::vector<RationalVector> constants_;
};

/// The rational Lie algebra of (the Mal'cev completion of) a group spec,
/// with the linear map from free Hall coordinates onto its basis.
struct GroupLieAlgebra {
  RationalLieAlgebra algebra{0};
  RationalSubspace ideal{0};          // in free Hall coordinates
  std::vector<std::size_t> kept;      // free Hall indices forming the basis
  RationalVector project(const RationalVector& free_coords) const;
};

/// log of a free nilpotent group element, in Hall Lie coordinates.
RationalVector lie_log(const GroupSpec& free_spec, const MalcevVector& g);

GroupLieAlgebra group_lie_algebra(const GroupSpec& spec);

/// Q tau + n with [tau, X] = (log Phi)(X), Phi the Lie automorphism induced
/// by phi. Throws std::invalid_argument when Phi is not unipotent.
RationalLieAlgebra semidirect_lie_algebra(const Endomorphism& phi);

/// Number of terms of the upper central series 0 < Z_1 < ... < Z_k = L.
/// Throws Error when the algebra is not nilpotent.
int upper_central_length(const RationalLieAlgebra& algebra);

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_LIE_HPP
