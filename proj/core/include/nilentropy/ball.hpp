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

#ifndef NILENTROPY_BALL_HPP
#define NILENTROPY_BALL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nilentropy/group.hpp"

namespace nilentropy {

struct BallOptions {
  int radius = 10;
  /// Maximum number of stored normal forms before BudgetExceeded.
  std::size_t budget = 10'000'000;
};

/// Breadth-first enumeration of the Cayley-graph ball of spec with respect to
/// spec.generating_set() and its inverses. Elements are stored in BFS order
/// (so spheres are contiguous) as int32 coordinate rows; the result does not
/// depend on the worker count.
class CayleyBall {
 public:
  /// Throws BudgetExceeded when the ball would exceed options.budget
  /// elements, and Error when a coordinate leaves the int32 range.
  CayleyBall(const GroupSpec& spec, const BallOptions& options = {});

  const GroupSpec& spec() const { return spec_; }
  int radius() const { return radius_; }
  std::size_t size() const { return distance_.size(); }
  std::size_t dimension() const { return dim_; }

  /// Number of elements at exactly distance r, for r = 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

  /// Word length if g lies in the ball.
  std::optional<int> distance(const MalcevVector& g) const;
  std::optional<int> distance(std::span<const std::int32_t> coords) const;

  int distance_at(std::size_t i) const { return distance_[i]; }
  std::span<const std::int32_t> coordinates(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  MalcevVector element(std::size_t i) const;

 private:
  friend std::optional<int> geodesic_length(const MalcevVector&, const GroupSpec&, int,
                                            std::size_t);
  CayleyBall(const GroupSpec& spec, const BallOptions& options,
             const std::vector<std::int32_t>* target);

  std::optional<std::size_t> find(const std::int32_t* row) const;
  std::size_t insert(const std::int32_t* row, std::uint8_t dist);
  void grow_table();

  GroupSpec spec_;
  int radius_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::int32_t> coords_;
  std::vector<std::uint8_t> distance_;
  std::vector<std::uint32_t> table_;  // open addressing; stores index + 1
};

/// Exact word length of g when it is at most radius_cap, nullopt (unknown)
/// otherwise. Stops the search as soon as g is reached.
std::optional<int> geodesic_length(const MalcevVector& g, const GroupSpec& spec,
                                   int radius_cap = 10, std::size_t budget = 10'000'000);

/// Lower bound ceil(|ab(g)|_1 / max_s |ab(s)|_1) from the abelianization.
Integer abelian_lower_bound(const MalcevVector& g, const GroupSpec& spec);

/// Two-sided band for geodesic / max(karidi, 1) over a ball (identity excluded).
struct KaridiBand {
  double lower = 0.0;
  double upper = 0.0;
  /// a = max(upper, 1 / lower).
  double box_constant = 0.0;
  std::size_t samples = 0;
  int radius = 0;
};

KaridiBand fit_karidi_band(const CayleyBall& ball);

}  // namespace nilentropy

#endif  // NILENTROPY_BALL_HPP
