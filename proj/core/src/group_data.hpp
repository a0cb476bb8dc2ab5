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

#ifndef NILENTROPY_SRC_GROUP_DATA_HPP
#define NILENTROPY_SRC_GROUP_DATA_HPP

#include <memory>
#include <vector>

#include "magnus.hpp"
#include "mpoly.hpp"
#include "nilentropy/matrix.hpp"
#include "nilentropy/group.hpp"

namespace nilentropy::detail {

/// Structure shared by every group built on F_m / gamma_{c+1}: the Magnus
/// model and the multiplication / inversion polynomials derived from it.
struct FreeCore {
  std::shared_ptr<const HallBasis> basis;
  std::shared_ptr<const MagnusModel> magnus;
  // Coordinate k of x*y; variables 0..n-1 are x, n..2n-1 are y.
  std::vector<EvalPoly> product;
  // Coordinate k of x^-1; variables 0..n-1.
  std::vector<EvalPoly> inverse;

  MalcevVector multiply(const MalcevVector& x, const MalcevVector& y) const;
  MalcevVector invert(const MalcevVector& x) const;
};

/// Cached per (rank, class); derivation is symbolic and runs once.
std::shared_ptr<const FreeCore> free_core(int rank, int cls);

class GroupData {
 public:
  /// One weight layer of a quotient: its relation rows and how to read the
  /// quotient coordinates q = solve * v off a layer vector v.
  struct Layer {
    std::size_t first = 0;  // free Hall range of the layer
    std::size_t last = 0;
    std::vector<std::size_t> rows;  // indices into relation_rows
    IntegerMatrix solve;
    std::size_t coord_first = 0;  // first quotient coordinate of the layer
  };

  std::shared_ptr<const FreeCore> core;
  std::vector<MalcevVector> relators;
  // Echelon basis of the relation subgroup over free coordinates.
  std::vector<MalcevVector> relation_rows;
  std::vector<std::size_t> relation_pivots;
  // Free Hall index of each quotient coordinate, or npos when the coordinate
  // is a product of several Hall elements of its weight.
  std::vector<std::size_t> kept;
  // Each quotient basis element as a free Mal'cev vector.
  std::vector<MalcevVector> coordinate_elements;
  // True when every coordinate is a Hall basis element and every relation
  // pivot is a unit, so reduction is plain sifting.
  bool simple = true;
  std::vector<Layer> layers;
  std::vector<int> weights;
  std::vector<std::size_t> weight_start;  // size class + 2
  std::vector<MalcevVector> generators;

  bool is_free() const { return relation_rows.empty(); }
  std::size_t dimension() const { return kept.size(); }

  MalcevVector lift(const MalcevVector& g) const;
  MalcevVector reduce(const MalcevVector& free_element) const;
  MalcevVector multiply(const MalcevVector& g, const MalcevVector& h) const;
  MalcevVector invert(const MalcevVector& g) const;
};

/// x^e in the free nilpotent group of `core`.
MalcevVector free_power(const FreeCore& core, const MalcevVector& x, const Integer& e);

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_GROUP_DATA_HPP
