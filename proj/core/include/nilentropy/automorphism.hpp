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

#ifndef NILENTROPY_AUTOMORPHISM_HPP
#define NILENTROPY_AUTOMORPHISM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "nilentropy/group.hpp"
#include "nilentropy/matrix.hpp"
#include "nilentropy/polynomial.hpp"

namespace nilentropy {

/// An endomorphism of a group given by the images of the free generators
/// x_1..x_m. Images of all Mal'cev basis elements are cached at construction
/// (higher ones as iterated group commutators of generator images), so the
/// object is immutable and apply() is a product of powers.
class Endomorphism {
 public:
  /// Throws std::invalid_argument when the image count differs from the rank,
  /// an image has the wrong length, or (for quotient groups) a relator is not
  /// sent to the identity.
  Endomorphism(GroupSpec spec, std::vector<MalcevVector> images);

  static Endomorphism identity(const GroupSpec& spec);
  /// Images given as words in the free generators.
  static Endomorphism from_words(const GroupSpec& spec, const std::vector<WordExpr>& words);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<MalcevVector>& images() const { return images_; }
  const MalcevVector& basis_image(std::size_t coord) const { return (*basis_images_)[coord]; }

  MalcevVector apply(const MalcevVector& g) const;
  MalcevVector operator()(const MalcevVector& g) const { return apply(g); }

  /// The same map on the class-(k-1) quotient N / gamma_k (2 <= k <= class + 1).
  Endomorphism truncate(int k) const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.spec_ == b.spec_ && a.images_ == b.images_;
  }

 private:
  GroupSpec spec_;
  std::vector<MalcevVector> images_;
  std::shared_ptr<const std::vector<MalcevVector>> basis_images_;
};

/// phi o psi.
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);
/// phi^n for n >= 0 by repeated squaring; negative n uses the inverse and
/// throws Error when phi is not an automorphism.
Endomorphism iterate(const Endomorphism& phi, long n);
/// Inverse automorphism, or nullopt when some graded matrix is not unimodular.
std::optional<Endomorphism> inverse(const Endomorphism& phi);

/// Columns are the weight-1 coordinates of the generator images.
IntegerMatrix abelianization_matrix(const Endomorphism& phi);
/// Induced map on gamma_i / gamma_{i+1}; throws std::out_of_range unless 1 <= i <= class.
IntegerMatrix graded_matrix(const Endomorphism& phi, int i);

bool is_automorphism(const Endomorphism& phi);
bool is_homologically_trivial(const Endomorphism& phi);

struct SpectralReport {
  IntPolynomial characteristic_polynomial;
  /// Midpoint estimate and a certified enclosure [radius_lower, radius_upper].
  double spectral_radius = 0.0;
  double radius_lower = 0.0;
  double radius_upper = 0.0;
  double error_bound = 0.0;
  bool unipotent = false;
  bool quasi_unipotent = false;
};

/// Throws std::invalid_argument for a non-square or empty matrix.
SpectralReport spectral_report(const IntegerMatrix& m);

}  // namespace nilentropy

#endif  // NILENTROPY_AUTOMORPHISM_HPP
