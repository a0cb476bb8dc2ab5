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

#include "nilentropy/automorphism.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nilentropy/constructions.hpp"

namespace nilentropy {

namespace {

// Images of every free Hall basis entry, evaluated in spec.
std::vector<MalcevVector> free_basis_images(const GroupSpec& spec,
                                            const std::vector<MalcevVector>& images) {
  const HallBasis& hb = spec.hall_basis();
  std::vector<MalcevVector> out;
  out.reserve(hb.size());
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const BasicCommutator& b = hb[k];
    if (b.is_generator()) {
      out.push_back(images[static_cast<std::size_t>(b.generator)]);
    } else {
      out.push_back(commutator(out[b.left], out[b.right], spec));
    }
  }
  return out;
}

MalcevVector product_of_powers(const std::vector<MalcevVector>& factors,
                               const MalcevVector& exponents, const GroupSpec& spec) {
  MalcevVector acc = spec.identity();
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    acc = multiply(acc, power(factors[k], exponents[k], spec), spec);
  }
  return acc;
}

MalcevVector layer_element(const GroupSpec& spec, int w, const std::vector<Integer>& coords) {
  MalcevVector g = spec.identity();
  const auto [first, last] = spec.weight_range(w);
  for (std::size_t i = first; i < last; ++i) g[i] = coords[i - first];
  return g;
}

}  // namespace

Endomorphism::Endomorphism(GroupSpec spec, std::vector<MalcevVector> images)
    : spec_(std::move(spec)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(spec_.rank()))
    throw std::invalid_argument("endomorphism needs one image per generator (" +
                                std::to_string(spec_.rank()) + ")");
  for (const MalcevVector& g : images_) {
    if (g.size() != spec_.dimension())
      throw std::invalid_argument("generator image has the wrong length");
  }
  const std::vector<MalcevVector> free_images = free_basis_images(spec_, images_);
  for (const MalcevVector& r : spec_.relators()) {
    if (!product_of_powers(free_images, r, spec_).is_identity())
      throw std::invalid_argument("generator images do not respect the relators");
  }
  auto basis = std::make_shared<std::vector<MalcevVector>>();
  for (std::size_t c = 0; c < spec_.dimension(); ++c)
    basis->push_back(product_of_powers(free_images, spec_.coordinate_element(c), spec_));
  basis_images_ = std::move(basis);
}

Endomorphism Endomorphism::identity(const GroupSpec& spec) {
  std::vector<MalcevVector> images;
  for (int g = 0; g < spec.rank(); ++g) images.push_back(spec.generator(g));
  return Endomorphism(spec, std::move(images));
}

Endomorphism Endomorphism::from_words(const GroupSpec& spec, const std::vector<WordExpr>& words) {
  std::vector<MalcevVector> images;
  for (const WordExpr& w : words) {
    MalcevVector acc = spec.identity();
    for (const Letter& l : w.letters()) {
      MalcevVector x = spec.generator(l.generator);
      if (l.exponent < 0) x = inverse(x, spec);
      acc = multiply(acc, x, spec);
    }
    images.push_back(std::move(acc));
  }
  return Endomorphism(spec, std::move(images));
}

MalcevVector Endomorphism::apply(const MalcevVector& g) const {
  if (g.size() != spec_.dimension())
    throw std::invalid_argument("element length does not match the group");
  return product_of_powers(*basis_images_, g, spec_);
}

Endomorphism Endomorphism::truncate(int k) const {
  const GroupSpec target = nilentropy::truncate(spec_, k);
  std::vector<MalcevVector> images;
  for (const MalcevVector& g : images_) images.push_back(project(g, k, spec_));
  return Endomorphism(target, std::move(images));
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (!(phi.spec() == psi.spec())) throw std::invalid_argument("compose needs a common group");
  std::vector<MalcevVector> images;
  for (const MalcevVector& g : psi.images()) images.push_back(phi.apply(g));
  return Endomorphism(phi.spec(), std::move(images));
}

Endomorphism iterate(const Endomorphism& phi, long n) {
  if (n < 0) {
    auto inv = inverse(phi);
    if (!inv) throw Error("negative iterate of a non-invertible endomorphism");
    return iterate(*inv, -n);
  }
  Endomorphism acc = Endomorphism::identity(phi.spec());
  Endomorphism base = phi;
  while (n > 0) {
    if (n & 1) acc = compose(acc, base);
    n >>= 1;
    if (n > 0) base = compose(base, base);
  }
  return acc;
}

std::optional<Endomorphism> inverse(const Endomorphism& phi) {
  const GroupSpec& spec = phi.spec();
  const int c = spec.nilpotency_class();
  std::vector<IntegerMatrix> inverses;
  for (int w = 1; w <= c; ++w) {
    if (spec.graded_rank(w) == 0) {
      inverses.emplace_back();
      continue;
    }
    auto inv = graded_matrix(phi, w).unimodular_inverse();
    if (!inv) return std::nullopt;
    inverses.push_back(std::move(*inv));
  }
  auto solve_layer = [&](int w, const MalcevVector& target) {
    const IntegerMatrix& m = inverses[static_cast<std::size_t>(w - 1)];
    const auto [first, last] = spec.weight_range(w);
    std::vector<Integer> out(last - first);
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t j = 0; j < out.size(); ++j) out[r] += m(r, j) * target[first + j];
    return layer_element(spec, w, out);
  };
  std::vector<MalcevVector> images;
  for (int g = 0; g < spec.rank(); ++g) {
    const MalcevVector x = spec.generator(g);
    MalcevVector a = spec.identity();
    for (int w = 1; w <= c; ++w) {
      if (spec.graded_rank(w) == 0) continue;
      const MalcevVector error = multiply(inverse(phi.apply(a), spec), x, spec);
      a = multiply(a, solve_layer(w, error), spec);
    }
    if (phi.apply(a) != x) throw std::logic_error("layered inversion did not converge");
    images.push_back(std::move(a));
  }
  return Endomorphism(spec, std::move(images));
}

IntegerMatrix abelianization_matrix(const Endomorphism& phi) { return graded_matrix(phi, 1); }

IntegerMatrix graded_matrix(const Endomorphism& phi, int i) {
  const GroupSpec& spec = phi.spec();
  if (i < 1 || i > spec.nilpotency_class())
    throw std::out_of_range("graded weight out of range");
  const auto [first, last] = spec.weight_range(i);
  IntegerMatrix m(last - first, last - first);
  for (std::size_t col = first; col < last; ++col) {
    const MalcevVector& image = phi.basis_image(col);
    for (std::size_t row = first; row < last; ++row) m(row - first, col - first) = image[row];
  }
  return m;
}

bool is_automorphism(const Endomorphism& phi) {
  for (int i = 1; i <= phi.spec().nilpotency_class(); ++i) {
    if (phi.spec().graded_rank(i) == 0) continue;
    if (abs(graded_matrix(phi, i).determinant()) != 1) return false;
  }
  return true;
}

bool is_homologically_trivial(const Endomorphism& phi) {
  return abelianization_matrix(phi).is_identity();
}

namespace {

// Polynomial whose roots are the products lambda_i lambda_j (i <= j) of the
// roots of the monic polynomial p.
IntPolynomial symmetric_square(const IntPolynomial& p) {
  const int n = p.degree();
  const int big_n = n * (n + 1) / 2;
  // elementary symmetric functions of the roots of p
  std::vector<Integer> e(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    e[static_cast<std::size_t>(j)] = p.coefficient(n - j);
    if (j % 2 == 1) e[static_cast<std::size_t>(j)] = -e[static_cast<std::size_t>(j)];
  }
  // power sums s_k, k = 1..2N (Newton)
  std::vector<Integer> s(2 * static_cast<std::size_t>(big_n) + 1);
  for (int k = 1; k <= 2 * big_n; ++k) {
    Integer acc = 0;
    for (int i = 1; i < k && i <= n; ++i) {
      const Integer t = e[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) acc += t; else acc -= t;
    }
    if (k <= n) {
      const Integer t = e[static_cast<std::size_t>(k)] * k;
      if (k % 2 == 1) acc += t; else acc -= t;
    }
    s[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<Integer> power(static_cast<std::size_t>(big_n) + 1);
  for (int k = 1; k <= big_n; ++k) {
    Integer v = s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)] +
                s[static_cast<std::size_t>(2 * k)];
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    power[static_cast<std::size_t>(k)] = v;
  }
  std::vector<Integer> big_e(static_cast<std::size_t>(big_n) + 1);
  big_e[0] = 1;
  for (int k = 1; k <= big_n; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i) {
      const Integer t = big_e[static_cast<std::size_t>(k - i)] * power[static_cast<std::size_t>(i)];
      if (i % 2 == 1) acc += t; else acc -= t;
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    big_e[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<Integer> q(static_cast<std::size_t>(big_n) + 1);
  for (int k = 0; k <= big_n; ++k) {
    Integer v = big_e[static_cast<std::size_t>(k)];
    if (k % 2 == 1) v = -v;
    q[static_cast<std::size_t>(big_n - k)] = v;
  }
  return IntPolynomial(std::move(q));
}

double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace

SpectralReport spectral_report(const IntegerMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) throw std::invalid_argument("spectral report needs a non-empty matrix");
  SpectralReport report;
  report.characteristic_polynomial = characteristic_polynomial(m);

  const auto root = largest_real_root(symmetric_square(report.characteristic_polynomial), 80);
  if (!root) throw std::logic_error("symmetric square has no real root");
  const double lo = std::max(0.0, rational_to_double(root->lower));
  const double hi = std::max(0.0, rational_to_double(root->upper));
  report.radius_lower = std::nextafter(std::sqrt(lo), 0.0);
  report.radius_upper = std::nextafter(std::sqrt(hi), std::numeric_limits<double>::infinity());
  if (report.radius_lower < 0) report.radius_lower = 0;
  report.spectral_radius = 0.5 * (report.radius_lower + report.radius_upper);
  report.error_bound = report.radius_upper - report.radius_lower;

  IntegerMatrix shifted = m - IntegerMatrix::identity(n);
  IntegerMatrix acc = shifted;
  for (std::size_t k = 1; k < n; ++k) acc = acc * shifted;
  report.unipotent = acc.is_zero();
  report.quasi_unipotent = report.unipotent || is_cyclotomic_product(report.characteristic_polynomial);
  return report;
}

}  // namespace nilentropy
