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

#include "nilentropy/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fastpoly.hpp"
#include "group_data.hpp"
#include "parallel.hpp"

namespace nilentropy {

namespace {

constexpr std::int64_t kInt32Limit = std::numeric_limits<std::int32_t>::max();

std::uint64_t hash_row(const std::int32_t* row, std::size_t dim) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < dim; ++i) {
    h ^= static_cast<std::uint32_t>(row[i]);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return h;
}

bool to_row(const MalcevVector& g, std::int32_t* out) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!mpz_fits_sint_p(g[i].get_mpz_t())) return false;
    const long v = mpz_get_si(g[i].get_mpz_t());
    if (v > kInt32Limit || v < -kInt32Limit) return false;
    out[i] = static_cast<std::int32_t>(v);
  }
  return true;
}

// Right multiplication by each generator and inverse.
class Stepper {
 public:
  explicit Stepper(const GroupSpec& spec) : spec_(spec), dim_(spec.dimension()) {
    for (const MalcevVector& s : spec.generating_set()) {
      steps_.push_back(s);
      steps_.push_back(inverse(s, spec));
    }
    if (!spec.is_free()) return;
    const detail::FreeCore& core = *spec.data().core;
    for (const MalcevVector& s : steps_) {
      std::vector<std::pair<std::uint16_t, Integer>> fixed;
      for (std::size_t j = 0; j < dim_; ++j)
        fixed.emplace_back(static_cast<std::uint16_t>(dim_ + j), s[j]);
      std::vector<detail::EvalPoly> coords;
      for (const detail::EvalPoly& p : core.product) coords.push_back(p.specialize(fixed));
      auto compiled = detail::CompiledMap::compile(coords);
      if (!compiled) {
        fast_.clear();
        return;
      }
      fast_.push_back(std::move(*compiled));
    }
  }

  std::size_t count() const { return steps_.size(); }

  // Writes row * step[k]; false when the result leaves the int32 range.
  bool apply(const std::int32_t* row, std::size_t k, std::int32_t* out,
             std::vector<std::int64_t>& scratch) const {
    if (!fast_.empty()) {
      scratch.resize(2 * dim_);
      for (std::size_t i = 0; i < dim_; ++i) scratch[i] = row[i];
      if (!fast_[k].apply(scratch.data(), scratch.data() + dim_)) return false;
      for (std::size_t i = 0; i < dim_; ++i) out[i] = static_cast<std::int32_t>(scratch[dim_ + i]);
      return true;
    }
    MalcevVector g(dim_);
    for (std::size_t i = 0; i < dim_; ++i) g[i] = row[i];
    return to_row(multiply(g, steps_[k], spec_), out);
  }

 private:
  GroupSpec spec_;
  std::size_t dim_;
  std::vector<MalcevVector> steps_;
  std::vector<detail::CompiledMap> fast_;
};

}  // namespace

CayleyBall::CayleyBall(const GroupSpec& spec, const BallOptions& options)
    : CayleyBall(spec, options, nullptr) {}

CayleyBall::CayleyBall(const GroupSpec& spec, const BallOptions& options,
                       const std::vector<std::int32_t>* target)
    : spec_(spec), dim_(spec.dimension()) {
  if (options.radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  if (options.radius > 250) throw std::invalid_argument("ball radius must be <= 250");
  table_.assign(1024, 0);
  std::vector<std::int32_t> origin(dim_, 0);
  insert(origin.data(), 0);
  if (target && std::equal(target->begin(), target->end(), origin.begin())) return;

  const Stepper stepper(spec);
  const std::size_t nsteps = stepper.count();
  constexpr std::size_t kBlock = 1 << 15;
  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  for (int r = 0; r < options.radius; ++r) {
    for (std::size_t block = layer_begin; block < layer_end; block += kBlock) {
      const std::size_t block_end = std::min(layer_end, block + kBlock);
      const std::size_t count = block_end - block;
      std::vector<std::int32_t> candidates(count * nsteps * dim_);
      std::vector<char> overflow(count, 0);
      detail::parallel_for(count, 2048, [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> scratch;
        for (std::size_t i = begin; i < end; ++i) {
          const std::int32_t* row = coords_.data() + (block + i) * dim_;
          for (std::size_t k = 0; k < nsteps; ++k) {
            std::int32_t* out = candidates.data() + (i * nsteps + k) * dim_;
            if (!stepper.apply(row, k, out, scratch)) overflow[i] = 1;
          }
        }
      });
      if (std::find(overflow.begin(), overflow.end(), 1) != overflow.end())
        throw Error("ball coordinates exceed the int32 range at radius " + std::to_string(r + 1));
      for (std::size_t c = 0; c < count * nsteps; ++c) {
        const std::int32_t* row = candidates.data() + c * dim_;
        if (find(row)) continue;
        if (distance_.size() >= options.budget)
          throw BudgetExceeded("Cayley ball exceeds the budget of " +
                               std::to_string(options.budget) + " elements at radius " +
                               std::to_string(r + 1));
        insert(row, static_cast<std::uint8_t>(r + 1));
        if (target && std::equal(target->begin(), target->end(), row)) {
          radius_ = r + 1;
          return;
        }
      }
    }
    layer_begin = layer_end;
    layer_end = distance_.size();
    radius_ = r + 1;
    if (layer_begin == layer_end) break;  // finite group; not reached for infinite N
  }
  radius_ = options.radius;
}

std::optional<std::size_t> CayleyBall::find(const std::int32_t* row) const {
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hash_row(row, dim_) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t entry = table_[slot];
    if (entry == 0) return std::nullopt;
    const std::size_t index = entry - 1;
    if (std::equal(row, row + dim_, coords_.data() + index * dim_)) return index;
  }
}

std::size_t CayleyBall::insert(const std::int32_t* row, std::uint8_t dist) {
  if (2 * (distance_.size() + 1) > table_.size()) grow_table();
  const std::size_t index = distance_.size();
  coords_.insert(coords_.end(), row, row + dim_);
  distance_.push_back(dist);
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash_row(row, dim_) & mask;
  while (table_[slot] != 0) slot = (slot + 1) & mask;
  table_[slot] = static_cast<std::uint32_t>(index + 1);
  return index;
}

void CayleyBall::grow_table() {
  std::vector<std::uint32_t> fresh(table_.size() * 2, 0);
  const std::size_t mask = fresh.size() - 1;
  for (std::size_t index = 0; index < distance_.size(); ++index) {
    std::size_t slot = hash_row(coords_.data() + index * dim_, dim_) & mask;
    while (fresh[slot] != 0) slot = (slot + 1) & mask;
    fresh[slot] = static_cast<std::uint32_t>(index + 1);
  }
  table_.swap(fresh);
}

std::vector<std::size_t> CayleyBall::sphere_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (std::uint8_t d : distance_) ++out[d];
  return out;
}

std::optional<int> CayleyBall::distance(const MalcevVector& g) const {
  if (g.size() != dim_) throw std::invalid_argument("element length does not match the group");
  std::vector<std::int32_t> row(dim_);
  if (!to_row(g, row.data())) return std::nullopt;
  return distance(row);
}

std::optional<int> CayleyBall::distance(std::span<const std::int32_t> coords) const {
  auto index = find(coords.data());
  if (!index) return std::nullopt;
  return distance_[*index];
}

MalcevVector CayleyBall::element(std::size_t i) const {
  MalcevVector g(dim_);
  for (std::size_t k = 0; k < dim_; ++k) g[k] = coords_[i * dim_ + k];
  return g;
}

std::optional<int> geodesic_length(const MalcevVector& g, const GroupSpec& spec, int radius_cap,
                                   std::size_t budget) {
  if (radius_cap < 0) throw std::invalid_argument("radius cap must be >= 0");
  if (g.size() != spec.dimension())
    throw std::invalid_argument("element length does not match the group");
  // A word of length L has abelianized l1-norm at most L * max_s |ab(s)|_1.
  if (abelian_lower_bound(g, spec) > radius_cap) return std::nullopt;
  std::vector<std::int32_t> row(g.size());
  if (!to_row(g, row.data())) return std::nullopt;
  CayleyBall ball(spec, BallOptions{radius_cap, budget}, &row);
  return ball.distance(row);
}

Integer abelian_lower_bound(const MalcevVector& g, const GroupSpec& spec) {
  const auto [first, last] = spec.weight_range(1);
  auto norm = [&](const MalcevVector& x) {
    Integer s = 0;
    for (std::size_t i = first; i < last; ++i) s += abs(x[i]);
    return s;
  };
  Integer step = 0;
  for (const MalcevVector& s : spec.generating_set()) step = std::max(step, norm(s));
  const Integer total = norm(g);
  if (step == 0) return 0;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), total.get_mpz_t(), step.get_mpz_t());
  return q;
}

KaridiBand fit_karidi_band(const CayleyBall& ball) {
  KaridiBand band;
  band.radius = ball.radius();
  band.lower = std::numeric_limits<double>::infinity();
  band.upper = 0.0;
  const GroupSpec& spec = ball.spec();
  std::vector<double> inv_weight(ball.dimension());
  for (std::size_t k = 0; k < ball.dimension(); ++k) inv_weight[k] = 1.0 / spec.weight(k);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const int d = ball.distance_at(i);
    if (d == 0) continue;
    const auto row = ball.coordinates(i);
    double karidi = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] == 0) continue;
      const double a = std::abs(static_cast<double>(row[k]));
      const int w = spec.weight(k);
      const double v = w == 1 ? a : (w == 2 ? std::sqrt(a) : (w == 3 ? std::cbrt(a)
                                                                    : std::pow(a, inv_weight[k])));
      karidi = std::max(karidi, v);
    }
    const double ratio = d / std::max(karidi, 1.0);
    band.lower = std::min(band.lower, ratio);
    band.upper = std::max(band.upper, ratio);
    ++band.samples;
  }
  if (band.samples == 0) {
    band.lower = band.upper = 1.0;
  }
  band.box_constant = std::max(band.upper, 1.0 / band.lower);
  return band;
}

}  // namespace nilentropy
