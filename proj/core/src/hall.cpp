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

#include "nilentropy/hall.hpp"

#include <cmath>
#include <stdexcept>

namespace nilentropy {

double log_abs(const Integer& v) {
  if (v == 0) return -INFINITY;
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

Integer binomial(const Integer& n, unsigned k) {
  // n (n-1) ... (n-k+1) / k!, exact for every integer n.
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::basis(std::size_t index, const Integer& coefficient) {
  LieElement e;
  e.add(index, coefficient);
  return e;
}

Integer LieElement::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LieElement::add(std::size_t index, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [k, v] : other.terms_) add(k, v);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [k, v] : other.terms_) add(k, -v);
  return *this;
}

LieElement& LieElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------
// HallBasis

HallBasis::HallBasis(int rank, int cls) : rank_(rank), class_(cls) {
  if (rank < 1) throw std::invalid_argument("Hall basis rank must be >= 1");
  if (cls < 1) throw std::invalid_argument("Hall basis class must be >= 1");

  weight_start_.assign(static_cast<std::size_t>(cls) + 2, 0);
  for (int g = 0; g < rank; ++g) {
    BasicCommutator b;
    b.generator = g;
    b.weight = 1;
    entries_.push_back(b);
  }
  weight_start_[1] = 0;
  weight_start_[2] = entries_.size();

  for (int d = 2; d <= cls; ++d) {
    const std::size_t existing = entries_.size();
    for (std::size_t u = 0; u < existing; ++u) {
      const BasicCommutator& bu = entries_[u];
      for (std::size_t v = 0; v < u; ++v) {
        const BasicCommutator& bv = entries_[v];
        if (bu.weight + bv.weight != d) continue;
        if (!bu.is_generator() && bu.right > v) continue;
        BasicCommutator b;
        b.left = u;
        b.right = v;
        b.weight = d;
        pair_index_.emplace(std::make_pair(u, v), entries_.size());
        entries_.push_back(b);
      }
    }
    weight_start_[static_cast<std::size_t>(d) + 1] = entries_.size();
  }

  const std::size_t n = entries_.size();
  table_.assign(n * n, LieElement{});
  table_ready_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) straighten(i, j);
}

std::pair<std::size_t, std::size_t> HallBasis::weight_range(int d) const {
  if (d < 1 || d > class_) throw std::out_of_range("weight out of range");
  return {weight_start_[static_cast<std::size_t>(d)],
          weight_start_[static_cast<std::size_t>(d) + 1]};
}

std::size_t HallBasis::graded_dimension(int d) const {
  auto [first, last] = weight_range(d);
  return last - first;
}

std::optional<std::size_t> HallBasis::find(std::size_t left, std::size_t right) const {
  auto it = pair_index_.find({left, right});
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

const LieElement& HallBasis::bracket(std::size_t i, std::size_t j) const {
  return table_[i * entries_.size() + j];
}

LieElement HallBasis::bracket(const LieElement& u, const LieElement& v) const {
  LieElement out;
  for (const auto& [i, a] : u.terms()) {
    for (const auto& [j, b] : v.terms()) {
      if (weight(i) + weight(j) > class_) continue;
      const Integer ab = a * b;
      for (const auto& [k, c] : bracket(i, j).terms()) out.add(k, ab * c);
    }
  }
  return out;
}

const LieElement& HallBasis::straighten(std::size_t i, std::size_t j) {
  const std::size_t n = entries_.size();
  const std::size_t slot = i * n + j;
  if (table_ready_[slot] == 2) return table_[slot];
  if (table_ready_[slot] == 1)
    throw std::logic_error("cyclic dependency while straightening Hall brackets");
  table_ready_[slot] = 1;

  LieElement result;
  if (i != j && entries_[i].weight + entries_[j].weight <= class_) {
    if (i < j) {
      result = -straighten(j, i);
    } else if (entries_[i].is_generator() || entries_[i].right <= j) {
      result = LieElement::basis(pair_index_.at({i, j}));
    } else {
      // [[p,q],r] = [[p,r],q] + [p,[q,r]] when q > r.
      const std::size_t p = entries_[i].left;
      const std::size_t q = entries_[i].right;
      const LieElement pr = straighten(p, j);
      for (const auto& [k, a] : pr.terms()) {
        if (entries_[k].weight + entries_[q].weight > class_) continue;
        LieElement t = straighten(k, q);
        result += a * t;
      }
      const LieElement qr = straighten(q, j);
      for (const auto& [k, a] : qr.terms()) {
        if (entries_[p].weight + entries_[k].weight > class_) continue;
        LieElement t = straighten(p, k);
        result += a * t;
      }
    }
  }
  table_[slot] = std::move(result);
  table_ready_[slot] = 2;
  return table_[slot];
}

std::string HallBasis::name(std::size_t i) const {
  const BasicCommutator& b = entries_[i];
  if (b.is_generator()) return "x" + std::to_string(b.generator + 1);
  return "[" + name(b.left) + "," + name(b.right) + "]";
}

Integer witt_number(int m, int d) {
  if (m < 1 || d < 1) throw std::invalid_argument("witt_number needs m, d >= 1");
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  Integer sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(d / e));
    sum += mobius(e) * power;
  }
  return sum / d;
}

}  // namespace nilentropy
