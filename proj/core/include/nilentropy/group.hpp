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

#ifndef NILENTROPY_GROUP_HPP
#define NILENTROPY_GROUP_HPP

#include <cstddef>
#include <compare>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilentropy/hall.hpp"
#include "nilentropy/integer.hpp"

namespace nilentropy {

/// A group element as its exponent tuple along the Mal'cev basis:
/// g = b_1^{e_1} b_2^{e_2} ... b_n^{e_n}. The identity is all zeros.
class MalcevVector {
 public:
  MalcevVector() = default;
  explicit MalcevVector(std::size_t dim) : exponents_(dim) {}
  explicit MalcevVector(std::vector<Integer> exponents) : exponents_(std::move(exponents)) {}
  MalcevVector(std::initializer_list<long> exponents);

  std::size_t size() const { return exponents_.size(); }
  const Integer& operator[](std::size_t i) const { return exponents_[i]; }
  Integer& operator[](std::size_t i) { return exponents_[i]; }
  const std::vector<Integer>& exponents() const { return exponents_; }
  std::span<const Integer> view() const { return exponents_; }
  bool is_identity() const;

  /// "(e1,e2,...)".
  std::string to_string() const;

  friend bool operator==(const MalcevVector&, const MalcevVector&) = default;
  friend auto operator<=>(const MalcevVector& a, const MalcevVector& b) {
    return std::lexicographical_compare_three_way(
        a.exponents_.begin(), a.exponents_.end(), b.exponents_.begin(), b.exponents_.end(),
        [](const Integer& x, const Integer& y) {
          const int c = cmp(x, y);
          return c < 0 ? std::strong_ordering::less
                       : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        });
  }

 private:
  std::vector<Integer> exponents_;
};

/// One letter s_i^{+-1} of a word over the generating set.
struct Letter {
  int generator = 0;  // 0-based index into the generating set
  int exponent = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word over the generating set.
class WordExpr {
 public:
  WordExpr() = default;
  explicit WordExpr(std::vector<Letter> letters);

  /// Parses whitespace/comma separated letters such as "x2 x1^-1 x1⁻¹ X1"
  /// (a capital X denotes an inverse letter). Generator names are 1-based.
  static WordExpr parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  WordExpr inverse() const;
  WordExpr freely_reduced() const;
  std::string to_string() const;

  friend WordExpr operator*(const WordExpr& a, const WordExpr& b);
  friend bool operator==(const WordExpr&, const WordExpr&) = default;

 private:
  std::vector<Letter> letters_;
};

namespace detail {
class GroupData;
}

/// A finitely generated torsion-free nilpotent group: the free nilpotent
/// group F_m / gamma_{c+1}, optionally divided by the normal closure of a set
/// of relators. Group commutators are [u,v] = u^-1 v^-1 u v and normal forms
/// are products of basis powers in increasing basis order.
///
/// Copies share the (immutable) structure data; they are cheap and safe to
/// use from several threads.
class GroupSpec {
 public:
  /// Free nilpotent group of the given rank and class. Throws
  /// std::invalid_argument for rank or class < 1.
  GroupSpec(int rank, int cls);

  /// Quotient of F_rank / gamma_{cls+1} by the normal closure of `relators`
  /// (Mal'cev vectors over the free Hall basis). Throws TorsionError when the
  /// quotient has torsion in some graded piece.
  GroupSpec(int rank, int cls, std::vector<MalcevVector> relators);

  int rank() const;
  int nilpotency_class() const;
  /// Hirsch length: number of Mal'cev coordinates.
  std::size_t dimension() const;
  int weight(std::size_t coord) const;
  /// Half-open coordinate range of the weight-d graded piece.
  std::pair<std::size_t, std::size_t> weight_range(int d) const;
  std::size_t graded_rank(int d) const;

  const HallBasis& hall_basis() const;
  std::shared_ptr<const HallBasis> hall_basis_ptr() const;
  bool is_free() const;
  /// Normal generators of the relation subgroup (free Mal'cev vectors).
  const std::vector<MalcevVector>& relators() const;
  /// Hall basis index of coordinate `coord`, or nullopt when that basis
  /// element of a quotient is a product of several Hall elements.
  std::optional<std::size_t> free_index(std::size_t coord) const;
  /// Basis element `coord` as a Mal'cev vector of the free cover.
  const MalcevVector& coordinate_element(std::size_t coord) const;
  std::string coordinate_name(std::size_t coord) const;

  std::span<const MalcevVector> generating_set() const;
  bool has_default_generating_set() const { return !custom_generators_; }
  GroupSpec with_generating_set(std::vector<MalcevVector> generators) const;

  MalcevVector identity() const;
  /// The image of the free generator x_{g+1}.
  MalcevVector generator(int g) const;
  /// Unit vector of coordinate `coord`, i.e. the corresponding basis element.
  MalcevVector basis_element(std::size_t coord) const;

  /// Embeds quotient coordinates into free coordinates (zeros at relation pivots).
  MalcevVector lift(const MalcevVector& g) const;
  /// Normal form in this group of an element of the free nilpotent cover.
  MalcevVector reduce(const MalcevVector& free_element) const;
  /// The free nilpotent group this spec is a quotient of.
  GroupSpec free_cover() const;

  const detail::GroupData& data() const { return *data_; }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);

 private:
  explicit GroupSpec(std::shared_ptr<const detail::GroupData> data);

  std::shared_ptr<const detail::GroupData> data_;
  std::shared_ptr<const std::vector<MalcevVector>> custom_generators_;
};

/// Raised when a construction would produce torsion in a graded piece.
class TorsionError : public Error {
 public:
  using Error::Error;
};

MalcevVector multiply(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec);
MalcevVector inverse(const MalcevVector& g, const GroupSpec& spec);
/// g^n by square-and-multiply; negative n uses the inverse.
MalcevVector power(const MalcevVector& g, const Integer& n, const GroupSpec& spec);
/// [g,h] = g^-1 h^-1 g h.
MalcevVector commutator(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec);
/// h^-1 g h.
MalcevVector conjugate(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec);

/// Evaluates a word over spec.generating_set(). Throws std::out_of_range for
/// a letter outside the generating set.
MalcevVector eval_word(const WordExpr& word, const GroupSpec& spec);

/// Karidi box-length proxy: max_i |e_i|^(1/weight_i).
struct KaridiEstimate {
  double value = 0.0;
  /// Fitted box constant a > 1 for the group, or NaN when none was supplied.
  double box_constant;
};

KaridiEstimate karidi_length(const MalcevVector& g, const GroupSpec& spec,
                             double box_constant = std::numeric_limits<double>::quiet_NaN());

/// Natural log of the Karidi value (finite for huge exponents); -inf at the identity.
double log_karidi_length(const MalcevVector& g, const GroupSpec& spec);

/// Image in N / gamma_k(N): keeps the coordinates of weight < k.
/// Throws std::out_of_range unless 1 <= k <= class + 1.
MalcevVector project(const MalcevVector& g, int k, const GroupSpec& spec);

/// Splits g = g' * z with z in the last lower-central term (top weight only)
/// and g' with zero top-weight coordinates. Throws std::invalid_argument for
/// class 1.
std::pair<MalcevVector, MalcevVector> rewrite_mod_last_term(const MalcevVector& g,
                                                            const GroupSpec& spec);

}  // namespace nilentropy

#endif  // NILENTROPY_GROUP_HPP
