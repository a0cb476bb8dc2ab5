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

#include "nilentropy/lattice.hpp"

#include <deque>
#include <stdexcept>

namespace nilentropy {

namespace {

std::optional<std::size_t> leading(const MalcevVector& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) return i;
  return std::nullopt;
}

}  // namespace

SubgroupLattice::SubgroupLattice(GroupSpec ambient) : ambient_(std::move(ambient)) {}

SubgroupLattice SubgroupLattice::whole(const GroupSpec& ambient) {
  SubgroupLattice l(ambient);
  for (std::size_t i = 0; i < ambient.dimension(); ++i) {
    l.rows_.push_back(ambient.basis_element(i));
    l.pivots_.push_back(i);
  }
  return l;
}

std::optional<std::vector<Integer>> SubgroupLattice::coordinates(const MalcevVector& g) const {
  if (g.size() != ambient_.dimension())
    throw std::invalid_argument("element length does not match the ambient group");
  MalcevVector rest = g;
  std::vector<Integer> out(rows_.size());
  std::size_t row = 0;
  while (true) {
    auto lead = leading(rest);
    if (!lead) return out;
    while (row < rows_.size() && pivots_[row] < *lead) ++row;
    if (row == rows_.size() || pivots_[row] != *lead) return std::nullopt;
    const Integer& v = rows_[row][*lead];
    if (!mpz_divisible_p(rest[*lead].get_mpz_t(), v.get_mpz_t())) return std::nullopt;
    const Integer a = rest[*lead] / v;
    out[row] = a;
    rest = multiply(power(rows_[row], -a, ambient_), rest, ambient_);
    ++row;
  }
}

bool SubgroupLattice::contains(const MalcevVector& g) const { return coordinates(g).has_value(); }

std::vector<int> SubgroupLattice::pivot_weights() const {
  std::vector<int> out;
  for (std::size_t p : pivots_) out.push_back(ambient_.weight(p));
  return out;
}

std::size_t SubgroupLattice::graded_rank(int d) const {
  std::size_t count = 0;
  for (std::size_t p : pivots_)
    if (ambient_.weight(p) == d) ++count;
  return count;
}

bool SubgroupLattice::insert(const MalcevVector& g) {
  if (g.size() != ambient_.dimension())
    throw std::invalid_argument("element length does not match the ambient group");
  bool changed = false;
  std::deque<MalcevVector> work{g};
  while (!work.empty()) {
    MalcevVector x = std::move(work.front());
    work.pop_front();
    while (true) {
      auto lead = leading(x);
      if (!lead) break;
      const std::size_t p = *lead;
      std::size_t row = 0;
      while (row < rows_.size() && pivots_[row] < p) ++row;
      if (row == rows_.size() || pivots_[row] != p) {
        if (x[p] < 0) x = inverse(x, ambient_);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(row), std::move(x));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(row), p);
        changed = true;
        break;
      }
      const Integer v = rows_[row][p];
      const Integer a = x[p];
      if (mpz_divisible_p(a.get_mpz_t(), v.get_mpz_t())) {
        x = multiply(x, power(rows_[row], -(a / v), ambient_), ambient_);
        continue;
      }
      // New pivot gcd(v, a) = s v + t a realised by r^s x^t.
      Integer d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t());
      MalcevVector old = rows_[row];
      MalcevVector fresh = multiply(power(old, s, ambient_), power(x, t, ambient_), ambient_);
      if (fresh[p] < 0) fresh = inverse(fresh, ambient_);
      rows_[row] = std::move(fresh);
      changed = true;
      work.push_back(std::move(old));
      work.push_back(std::move(x));
      break;
    }
  }
  return changed;
}

std::optional<Integer> SubgroupLattice::index() const {
  if (rows_.size() != ambient_.dimension()) return std::nullopt;
  Integer idx = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) idx *= abs(rows_[r][pivots_[r]]);
  return idx;
}

SubgroupLattice stable_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                               const std::vector<ElementMap>& conjugators,
                               const ClosureOptions& options) {
  SubgroupLattice lattice(spec);
  for (const MalcevVector& g : generators) lattice.insert(g);
  for (std::size_t round = 0;; ++round) {
    if (round >= options.max_rounds)
      throw BudgetExceeded("subgroup closure did not stabilise within " +
                           std::to_string(options.max_rounds) + " rounds");
    bool changed = false;
    const std::vector<MalcevVector> rows = lattice.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        changed |= lattice.insert(commutator(rows[j], rows[i], spec));
        changed |= lattice.insert(commutator(rows[j], inverse(rows[i], spec), spec));
      }
      for (const ElementMap& f : conjugators) changed |= lattice.insert(f(rows[i]));
    }
    if (!changed) return lattice;
  }
}

SubgroupLattice subgroup_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                                 const ClosureOptions& options) {
  return stable_closure(generators, spec, {}, options);
}

SubgroupLattice normal_closure(std::span<const MalcevVector> generators, const GroupSpec& spec,
                               const ClosureOptions& options) {
  std::vector<ElementMap> conjugators;
  for (const MalcevVector& s : spec.generating_set()) {
    const MalcevVector s_inv = inverse(s, spec);
    conjugators.push_back([s, s_inv, spec](const MalcevVector& g) {
      return multiply(s_inv, multiply(g, s, spec), spec);
    });
    conjugators.push_back([s, s_inv, spec](const MalcevVector& g) {
      return multiply(s, multiply(g, s_inv, spec), spec);
    });
  }
  return stable_closure(generators, spec, conjugators, options);
}

}  // namespace nilentropy
