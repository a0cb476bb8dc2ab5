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

#include "nilentropy/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "lie.hpp"
#include "nilentropy/ball.hpp"
#include "nilentropy/matrix.hpp"

namespace nilentropy {

GroupSpec free_nilpotent(int m, int c) {
  if (m < 1 || c < 1) throw std::invalid_argument("free nilpotent group needs m >= 1 and c >= 1");
  return GroupSpec(m, c);
}

GroupSpec truncate(const GroupSpec& spec, int k) {
  const int c = spec.nilpotency_class();
  if (k < 2 || k > c + 1) throw std::out_of_range("truncation index must satisfy 2 <= k <= class + 1");
  if (k == c + 1) return spec;
  const GroupSpec free_spec = spec.free_cover();
  std::vector<MalcevVector> relators;
  for (const MalcevVector& r : spec.relators()) relators.push_back(project(r, k, free_spec));
  GroupSpec out = relators.empty() ? GroupSpec(spec.rank(), k - 1)
                                   : GroupSpec(spec.rank(), k - 1, std::move(relators));
  if (!spec.has_default_generating_set()) {
    std::vector<MalcevVector> gens;
    for (const MalcevVector& s : spec.generating_set()) gens.push_back(project(s, k, spec));
    out = out.with_generating_set(std::move(gens));
  }
  return out;
}

std::vector<SubgroupLattice> lower_central_series(const GroupSpec& spec) {
  std::vector<SubgroupLattice> series{SubgroupLattice::whole(spec)};
  while (!series.back().is_trivial()) {
    std::vector<MalcevVector> gens;
    for (const MalcevVector& r : series.back().rows())
      for (int g = 0; g < spec.rank(); ++g) gens.push_back(commutator(r, spec.generator(g), spec));
    series.push_back(normal_closure(gens, spec));
    if (series.size() > static_cast<std::size_t>(spec.nilpotency_class()) + 1)
      throw std::logic_error("lower central series longer than the class");
  }
  return series;
}

std::vector<std::size_t> lower_central_ranks(const GroupSpec& spec) {
  const auto series = lower_central_series(spec);
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    ranks.push_back(series[i].hirsch_length() - series[i + 1].hirsch_length());
  return ranks;
}

// ---------------------------------------------------------------------------
// Semidirect products

struct SemidirectSpec::PowerCache {
  std::mutex mutex;
  std::map<long, Endomorphism> powers;
};

SemidirectSpec::SemidirectSpec(GroupSpec base, Endomorphism monodromy)
    : base_(std::move(base)),
      monodromy_(std::move(monodromy)),
      monodromy_inverse_(monodromy_),
      powers_(std::make_shared<PowerCache>()) {
  if (!(monodromy_.spec() == base_))
    throw std::invalid_argument("monodromy must act on the base group");
  if (!is_automorphism(monodromy_))
    throw std::invalid_argument("monodromy is not an automorphism");
  if (!spectral_report(abelianization_matrix(monodromy_)).unipotent)
    throw std::invalid_argument("monodromy is not unipotent on H_1");
  monodromy_inverse_ = *nilentropy::inverse(monodromy_);

  const GroupSpec& n = base_;
  const Endomorphism phi = monodromy_;
  const Endomorphism phi_inv = monodromy_inverse_;
  std::vector<ElementMap> conjugators{
      [phi](const MalcevVector& g) { return phi.apply(g); },
      [phi_inv](const MalcevVector& g) { return phi_inv.apply(g); },
  };
  for (int j = 0; j < n.rank(); ++j) {
    const MalcevVector x = n.generator(j);
    conjugators.push_back([x, n](const MalcevVector& g) { return conjugate(g, x, n); });
    const MalcevVector xi = nilentropy::inverse(x, n);
    conjugators.push_back([xi, n](const MalcevVector& g) { return conjugate(g, xi, n); });
  }

  // gamma_2: [x_i, x_j] and [t, x_j] = phi^-1(x_j)^-1 x_j.
  std::vector<MalcevVector> gens;
  for (int i = 0; i < n.rank(); ++i) {
    const MalcevVector xi = n.generator(i);
    for (int j = i + 1; j < n.rank(); ++j) gens.push_back(commutator(xi, n.generator(j), n));
    gens.push_back(nilentropy::multiply(nilentropy::inverse(phi_inv.apply(xi), n), xi, n));
  }
  const std::size_t bound = hirsch_length() + 1;
  series_tail_.push_back(stable_closure(gens, n, conjugators));
  while (!series_tail_.back().is_trivial()) {
    if (series_tail_.size() + 1 > bound)
      throw Error("lower central series of the semidirect product exceeds Hirsch length + 1 = " +
                  std::to_string(bound));
    gens.clear();
    for (const MalcevVector& r : series_tail_.back().rows()) {
      for (int j = 0; j < n.rank(); ++j) gens.push_back(commutator(r, n.generator(j), n));
      // [r, t] = r^-1 t^-1 r t = r^-1 phi^-1(r)
      gens.push_back(nilentropy::multiply(nilentropy::inverse(r, n), phi_inv.apply(r), n));
    }
    series_tail_.push_back(stable_closure(gens, n, conjugators));
  }
  class_ = static_cast<int>(series_tail_.size());
  std::size_t previous = hirsch_length();
  for (const SubgroupLattice& term : series_tail_) {
    ranks_.push_back(previous - term.hirsch_length());
    previous = term.hirsch_length();
  }
}

SemidirectSpec::Element SemidirectSpec::identity() const { return {Integer(0), base_.identity()}; }
SemidirectSpec::Element SemidirectSpec::t() const { return {Integer(1), base_.identity()}; }
SemidirectSpec::Element SemidirectSpec::generator(int g) const {
  return {Integer(0), base_.generator(g)};
}

MalcevVector SemidirectSpec::twist(const Integer& k, const MalcevVector& n) const {
  if (k == 0) return n;
  if (!mpz_fits_slong_p(k.get_mpz_t())) throw std::overflow_error("twist exponent too large");
  const long e = mpz_get_si(k.get_mpz_t());
  const Endomorphism* map = nullptr;
  {
    std::lock_guard lock(powers_->mutex);
    auto it = powers_->powers.find(e);
    if (it == powers_->powers.end()) {
      Endomorphism p = e > 0 ? iterate(monodromy_, e) : iterate(monodromy_inverse_, -e);
      it = powers_->powers.emplace(e, std::move(p)).first;
    }
    map = &it->second;  // std::map nodes are stable
  }
  return map->apply(n);
}

SemidirectSpec::Element SemidirectSpec::multiply(const Element& a, const Element& b) const {
  return {a.k + b.k, nilentropy::multiply(twist(-b.k, a.n), b.n, base_)};
}

SemidirectSpec::Element SemidirectSpec::inverse(const Element& a) const {
  return {-a.k, nilentropy::inverse(twist(a.k, a.n), base_)};
}

SemidirectSpec semidirect_unipotent(const GroupSpec& base, const Endomorphism& phi) {
  return SemidirectSpec(base, phi);
}

int upper_central_lengths(const GroupSpec& spec) {
  return detail::upper_central_length(detail::group_lie_algebra(spec).algebra);
}

int upper_central_lengths(const SemidirectSpec& spec) {
  return detail::upper_central_length(detail::semidirect_lie_algebra(spec.monodromy()));
}

// ---------------------------------------------------------------------------
// Surface groups

MalcevVector surface_relator(const GroupSpec& free_spec, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (free_spec.rank() != 2 * genus) throw std::invalid_argument("surface relator needs rank 2g");
  MalcevVector r = free_spec.identity();
  for (int i = 0; i < genus; ++i) {
    r = multiply(r, commutator(free_spec.generator(2 * i), free_spec.generator(2 * i + 1), free_spec),
                 free_spec);
  }
  return r;
}

std::vector<std::size_t> surface_lie_ranks(int genus, int cls) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1 (genus 0 is unsupported)");
  if (cls < 1) throw std::invalid_argument("class must be >= 1");
  const HallBasis hb(2 * genus, cls);
  std::vector<std::size_t> ranks{static_cast<std::size_t>(2 * genus)};
  LieElement omega;
  for (int i = 0; i < genus; ++i)
    omega += hb.bracket(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1));
  std::vector<LieElement> level{omega};
  for (int d = 2; d <= cls; ++d) {
    if (d > 2) {
      std::vector<LieElement> next;
      for (const LieElement& v : level)
        for (int y = 0; y < hb.rank(); ++y)
          next.push_back(hb.bracket(v, LieElement::basis(static_cast<std::size_t>(y))));
      level.swap(next);
    }
    const auto [first, last] = hb.weight_range(d);
    IntegerMatrix m(level.size(), last - first);
    for (std::size_t r = 0; r < level.size(); ++r)
      for (const auto& [index, coefficient] : level[r].terms()) m(r, index - first) = coefficient;
    const auto invariants = smith_invariants(m);
    for (const Integer& f : invariants)
      if (abs(f) != 1)
        throw TorsionError("surface Lie ring has torsion in degree " + std::to_string(d));
    ranks.push_back((last - first) - invariants.size());
  }
  return ranks;
}

GroupSpec surface_quotient(int genus, int cls) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1 (genus 0 is unsupported)");
  if (cls < 1) throw std::invalid_argument("class must be >= 1");
  const GroupSpec free_spec(2 * genus, cls);
  GroupSpec spec(2 * genus, cls, {surface_relator(free_spec, genus)});
  const auto lie_ranks = surface_lie_ranks(genus, cls);
  for (int d = 1; d <= cls; ++d) {
    if (spec.graded_rank(d) != lie_ranks[static_cast<std::size_t>(d - 1)])
      throw std::logic_error("group and Lie constructions of the surface quotient disagree in degree " +
                             std::to_string(d));
  }
  return spec;
}

RelatorCheck relator_check(const std::vector<MalcevVector>& images, int genus, int cls,
                           int search_radius) {
  const GroupSpec free_spec(2 * genus, cls);
  if (images.size() != static_cast<std::size_t>(2 * genus))
    throw std::invalid_argument("relator check needs 2g images");
  for (const MalcevVector& g : images)
    if (g.size() != free_spec.dimension()) throw std::invalid_argument("image has the wrong length");
  const MalcevVector r = surface_relator(free_spec, genus);
  MalcevVector image = free_spec.identity();
  for (int i = 0; i < genus; ++i) {
    image = multiply(image,
                     commutator(images[static_cast<std::size_t>(2 * i)],
                                images[static_cast<std::size_t>(2 * i + 1)], free_spec),
                     free_spec);
  }
  RelatorCheck out;
  out.search_radius = search_radius;
  const MalcevVector targets[2] = {r, inverse(r, free_spec)};
  // Conjugation does not change coordinates of weight <= 2 here (r lies in
  // gamma_2), so those must already match r or r^-1.
  const int low = std::min(cls, 2);
  const std::size_t low_end = free_spec.weight_range(low).second;
  auto low_match = [&](const MalcevVector& t) {
    for (std::size_t i = 0; i < low_end; ++i)
      if (t[i] != image[i]) return false;
    return true;
  };
  if (!low_match(targets[0]) && !low_match(targets[1])) return out;
  CayleyBall ball(free_spec, BallOptions{search_radius, 10'000'000});
  for (int e = 0; e < 2; ++e) {
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (conjugate(targets[e], ball.element(i), free_spec) == image) {
        out.holds = true;
        out.exponent = e == 0 ? 1 : -1;
        return out;
      }
    }
  }
  return out;
}

}  // namespace nilentropy
