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

#include "mpoly.hpp"
#include "fastpoly.hpp"

#include <algorithm>
#include <iterator>

namespace nilentropy::detail {

MPoly::MPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MPoly MPoly::variable(std::uint16_t id) {
  MPoly p;
  p.terms_.emplace(Monomial{id}, Rational(1));
  return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  MPoly::Monomial merged;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      merged.clear();
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(merged));
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

MPoly binomial(const MPoly& p, unsigned k) {
  MPoly out(Rational(1));
  Integer factorial = 1;
  for (unsigned i = 0; i < k; ++i) {
    out = out * (p - MPoly(Rational(i)));
    factorial *= i + 1;
  }
  out *= Rational(1) / Rational(factorial);
  return out;
}

EvalPoly::EvalPoly(const MPoly& p) {
  Integer lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  denominator_ = lcm;
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (lcm / c.get_den());
    terms_.push_back(Term{scaled, m});
  }
}

Integer EvalPoly::evaluate(std::span<const Integer> values) const {
  Integer sum = 0;
  Integer prod;
  for (const Term& t : terms_) {
    prod = t.coefficient;
    for (std::uint16_t v : t.variables) {
      prod *= values[v];
      if (prod == 0) break;
    }
    sum += prod;
  }
  if (denominator_ != 1) mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), denominator_.get_mpz_t());
  return sum;
}

EvalPoly EvalPoly::specialize(
    const std::vector<std::pair<std::uint16_t, Integer>>& fixed) const {
  MPoly acc;
  for (const Term& t : terms_) {
    Rational coefficient(t.coefficient, denominator_);
    coefficient.canonicalize();
    MPoly::Monomial rest;
    for (std::uint16_t v : t.variables) {
      auto it = std::find_if(fixed.begin(), fixed.end(),
                             [v](const auto& f) { return f.first == v; });
      if (it == fixed.end()) {
        rest.push_back(v);
      } else {
        coefficient *= it->second;
      }
    }
    acc.add_term(rest, coefficient);
  }
  return EvalPoly(acc);
}

std::optional<CompiledPoly> CompiledPoly::compile(const EvalPoly& p) {
  CompiledPoly out;
  if (!fits_int64(p.denominator())) return std::nullopt;
  out.denominator_ = to_int64(p.denominator());
  for (const EvalPoly::Term& t : p.terms()) {
    if (!fits_int64(t.coefficient)) return std::nullopt;
    out.coefficient_.push_back(to_int64(t.coefficient));
    out.variables_.insert(out.variables_.end(), t.variables.begin(), t.variables.end());
    out.start_.push_back(static_cast<std::uint32_t>(out.variables_.size()));
  }
  return out;
}

std::optional<CompiledMap> CompiledMap::compile(const std::vector<EvalPoly>& coords) {
  CompiledMap out;
  for (const EvalPoly& p : coords) {
    auto c = CompiledPoly::compile(p);
    if (!c) return std::nullopt;
    out.coords_.push_back(std::move(*c));
  }
  return out;
}

}  // namespace nilentropy::detail
