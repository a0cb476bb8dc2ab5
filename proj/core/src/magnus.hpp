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

#ifndef NILENTROPY_SRC_MAGNUS_HPP
#define NILENTROPY_SRC_MAGNUS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "mpoly.hpp"
#include "nilentropy/hall.hpp"

namespace nilentropy::detail {

inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const Rational& v) { return v == 0; }
inline bool is_zero(const MPoly& v) { return v.is_zero(); }

inline Integer scale(const Rational& s, const Integer& v) {
  Rational r = s * v;
  if (r.get_den() != 1) throw std::logic_error("non-integral Magnus coordinate");
  return r.get_num();
}
inline Rational scale(const Rational& s, const Rational& v) { return s * v; }
inline MPoly scale(const Rational& s, const MPoly& v) { return v * s; }

inline Integer binomial_of(const Integer& v, unsigned k) { return nilentropy::binomial(v, k); }
inline Rational binomial_of(const Rational& v, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= (v - i) / Rational(i + 1);
  return out;
}
inline MPoly binomial_of(const MPoly& v, unsigned k) { return binomial(v, k); }

/// Index layout of words of length 0..degree over `rank` letters.
struct WordLayout {
  WordLayout() = default;
  WordLayout(int rank, int degree);

  std::size_t dim() const { return offset.back(); }
  std::size_t index(int length, std::size_t local) const {
    return offset[static_cast<std::size_t>(length)] + local;
  }

  int rank = 0;
  int degree = 0;
  std::vector<std::size_t> offset;  // offset[L] = first word of length L; size degree+2
  std::vector<std::size_t> power;   // rank^L
};

/// Element of the truncated free associative algebra Z<X_1..X_m>/(deg > c)
/// with coefficients in C. The constant term is coefficient 0.
template <class C>
struct MagnusElement {
  std::vector<C> coeffs;

  static MagnusElement zero(const WordLayout& layout) {
    return MagnusElement{std::vector<C>(layout.dim())};
  }
  static MagnusElement one(const WordLayout& layout) {
    MagnusElement e = zero(layout);
    e.coeffs[0] = C(1);
    return e;
  }
};

template <class C>
MagnusElement<C> multiply(const WordLayout& layout, const MagnusElement<C>& a,
                          const MagnusElement<C>& b) {
  MagnusElement<C> out = MagnusElement<C>::zero(layout);
  const int deg = layout.degree;
  for (int la = 0; la <= deg; ++la) {
    const std::size_t na = layout.power[static_cast<std::size_t>(la)];
    for (std::size_t ia = 0; ia < na; ++ia) {
      const C& ca = a.coeffs[layout.index(la, ia)];
      if (is_zero(ca)) continue;
      for (int lb = 0; la + lb <= deg; ++lb) {
        const std::size_t nb = layout.power[static_cast<std::size_t>(lb)];
        const std::size_t base = layout.index(la + lb, ia * nb);
        for (std::size_t ib = 0; ib < nb; ++ib) {
          const C& cb = b.coeffs[layout.index(lb, ib)];
          if (is_zero(cb)) continue;
          out.coeffs[base + ib] += ca * cb;
        }
      }
    }
  }
  return out;
}

template <class To, class From>
MagnusElement<To> convert(const MagnusElement<From>& e) {
  MagnusElement<To> out;
  out.coeffs.reserve(e.coeffs.size());
  for (const From& c : e.coeffs) out.coeffs.push_back(To(c));
  return out;
}

using IntMagnus = MagnusElement<Integer>;

/// Magnus embedding of the free nilpotent group F_m / gamma_{c+1}: images
/// of the Hall basis elements (as group commutators u^-1 v^-1 u v) and the
/// per-degree linear solves that read Mal'cev coordinates back off an
/// algebra element.
class MagnusModel {
 public:
  explicit MagnusModel(std::shared_ptr<const HallBasis> basis);

  const HallBasis& basis() const { return *basis_; }
  const WordLayout& layout() const { return layout_; }

  /// (B_k - 1)^j for basis element k; j ranges over 0..class/weight(k).
  const IntMagnus& beta_power(std::size_t k, unsigned j) const { return beta_powers_[k][j]; }
  unsigned max_power(std::size_t k) const {
    return static_cast<unsigned>(beta_powers_[k].size() - 1);
  }

  /// (1 + X_g)^sign for a generator letter.
  IntMagnus letter(int generator, int sign) const;

  /// B_k^e = sum_j C(e, j) (B_k - 1)^j.
  template <class C>
  MagnusElement<C> basis_power(std::size_t k, const C& e) const {
    MagnusElement<C> out = MagnusElement<C>::zero(layout_);
    const unsigned top = max_power(k);
    for (unsigned j = 0; j <= top; ++j) {
      C coefficient = binomial_of(e, j);
      if (is_zero(coefficient)) continue;
      const IntMagnus& bp = beta_powers_[k][j];
      for (std::size_t w = 0; w < bp.coeffs.size(); ++w) {
        if (bp.coeffs[w] == 0) continue;
        out.coeffs[w] += scale(Rational(bp.coeffs[w]), coefficient);
      }
    }
    return out;
  }

  /// Image of prod_k B_k^{coords[k]}.
  template <class C>
  MagnusElement<C> from_malcev(std::span<const C> coords) const {
    MagnusElement<C> out = MagnusElement<C>::one(layout_);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (is_zero(coords[k])) continue;
      out = multiply(layout_, out, basis_power(k, coords[k]));
    }
    return out;
  }

  /// Inverse of from_malcev: peels off basis powers weight by weight.
  template <class C>
  std::vector<C> peel(MagnusElement<C> element) const {
    const HallBasis& hb = *basis_;
    std::vector<C> coords(hb.size());
    for (int d = 1; d <= hb.nilpotency_class(); ++d) {
      auto [first, last] = hb.weight_range(d);
      const DegreeSolver& solver = solvers_[static_cast<std::size_t>(d)];
      for (std::size_t r = 0; r < last - first; ++r) {
        C value{};
        for (std::size_t s = 0; s < solver.words.size(); ++s) {
          const Rational& m = solver.inverse[r][s];
          if (m == 0) continue;
          const C& comp = element.coeffs[solver.words[s]];
          if (is_zero(comp)) continue;
          value += scale(m, comp);
        }
        coords[first + r] = std::move(value);
      }
      if (d == hb.nilpotency_class()) break;
      for (std::size_t k = first; k < last; ++k) {
        if (is_zero(coords[k])) continue;
        C negated = coords[k];
        negated *= -1;
        element = multiply(layout_, basis_power(k, negated), element);
      }
    }
    return coords;
  }

  /// Coordinates, in the Hall basis of Lie polynomials, of a homogeneous
  /// degree-d Lie element given by its word coefficients.
  std::vector<Rational> solve_degree(int d, const std::vector<Rational>& word_coeffs) const;

  /// Lie polynomial of basis entry k as word coefficients of degree weight(k).
  const std::vector<Integer>& lie_polynomial(std::size_t k) const { return lie_polys_[k]; }

 private:
  struct DegreeSolver {
    std::vector<std::size_t> words;               // absolute word indices
    std::vector<std::vector<Rational>> inverse;   // r_d x r_d
  };

  std::shared_ptr<const HallBasis> basis_;
  WordLayout layout_;
  std::vector<std::vector<IntMagnus>> beta_powers_;
  std::vector<std::vector<Integer>> lie_polys_;
  std::vector<DegreeSolver> solvers_;
};

/// Multiplicative inverse of an element with constant term 1.
template <class C>
MagnusElement<C> unit_inverse(const WordLayout& layout, const MagnusElement<C>& u) {
  MagnusElement<C> a = u;
  a.coeffs[0] = C(0);
  for (auto& c : a.coeffs) c *= -1;
  MagnusElement<C> out = MagnusElement<C>::one(layout);
  MagnusElement<C> term = MagnusElement<C>::one(layout);
  for (int j = 1; j <= layout.degree; ++j) {
    term = multiply(layout, term, a);
    for (std::size_t w = 0; w < out.coeffs.size(); ++w) out.coeffs[w] += term.coeffs[w];
  }
  return out;
}

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_MAGNUS_HPP
