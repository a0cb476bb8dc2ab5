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

#include "magnus.hpp"

#include <utility>

namespace nilentropy::detail {

WordLayout::WordLayout(int rank_, int degree_) : rank(rank_), degree(degree_) {
  offset.assign(static_cast<std::size_t>(degree) + 2, 0);
  power.assign(static_cast<std::size_t>(degree) + 1, 1);
  for (int l = 1; l <= degree; ++l)
    power[static_cast<std::size_t>(l)] =
        power[static_cast<std::size_t>(l) - 1] * static_cast<std::size_t>(rank);
  for (int l = 0; l <= degree; ++l)
    offset[static_cast<std::size_t>(l) + 1] =
        offset[static_cast<std::size_t>(l)] + power[static_cast<std::size_t>(l)];
}

namespace {

// Gauss-Jordan inverse over Q; the input is known to be invertible.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Hall/Magnus system");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

MagnusModel::MagnusModel(std::shared_ptr<const HallBasis> basis)
    : basis_(std::move(basis)),
      layout_(basis_->rank(), basis_->nilpotency_class()) {
  const HallBasis& hb = *basis_;
  const int cls = hb.nilpotency_class();
  const std::size_t n = hb.size();

  std::vector<IntMagnus> images(n);
  std::vector<IntMagnus> inverses(n);
  for (std::size_t k = 0; k < n; ++k) {
    const BasicCommutator& b = hb[k];
    if (b.is_generator()) {
      images[k] = letter(b.generator, 1);
      inverses[k] = letter(b.generator, -1);
    } else {
      // [u,v] = u^-1 v^-1 u v
      IntMagnus t = multiply(layout_, inverses[b.left], inverses[b.right]);
      t = multiply(layout_, t, images[b.left]);
      images[k] = multiply(layout_, t, images[b.right]);
      inverses[k] = unit_inverse(layout_, images[k]);
    }
  }

  beta_powers_.resize(n);
  lie_polys_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntMagnus beta = images[k];
    beta.coeffs[0] -= 1;
    const unsigned top = static_cast<unsigned>(cls / hb.weight(k));
    beta_powers_[k].push_back(IntMagnus::one(layout_));
    for (unsigned j = 1; j <= top; ++j)
      beta_powers_[k].push_back(multiply(layout_, beta_powers_[k].back(), beta));
    const int w = hb.weight(k);
    const std::size_t start = layout_.offset[static_cast<std::size_t>(w)];
    lie_polys_[k].assign(beta.coeffs.begin() + static_cast<std::ptrdiff_t>(start),
                         beta.coeffs.begin() +
                             static_cast<std::ptrdiff_t>(start + layout_.power[static_cast<std::size_t>(w)]));
  }

  solvers_.resize(static_cast<std::size_t>(cls) + 1);
  for (int d = 1; d <= cls; ++d) {
    auto [first, last] = hb.weight_range(d);
    const std::size_t r = last - first;
    const std::size_t words = layout_.power[static_cast<std::size_t>(d)];
    DegreeSolver& solver = solvers_[static_cast<std::size_t>(d)];

    // Greedily pick word columns whose restriction is independent.
    std::vector<std::vector<Rational>> echelon;  // reduced chosen columns
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen;
    for (std::size_t w = 0; w < words && chosen.size() < r; ++w) {
      std::vector<Rational> column(r);
      for (std::size_t i = 0; i < r; ++i) column[i] = lie_polys_[first + i][w];
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        const Rational f = column[pivots[e]];
        if (f == 0) continue;
        for (std::size_t i = 0; i < r; ++i) column[i] -= f * echelon[e][i];
      }
      std::size_t p = 0;
      while (p < r && column[p] == 0) ++p;
      if (p == r) continue;
      const Rational lead = column[p];
      for (auto& c : column) c /= lead;
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        const Rational f = echelon[e][p];
        if (f == 0) continue;
        for (std::size_t i = 0; i < r; ++i) echelon[e][i] -= f * column[i];
      }
      echelon.push_back(std::move(column));
      pivots.push_back(p);
      chosen.push_back(w);
    }
    if (chosen.size() != r) throw std::logic_error("Hall basis Lie polynomials are dependent");

    std::vector<std::vector<Rational>> t(r, std::vector<Rational>(r));
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t k = 0; k < r; ++k) t[s][k] = lie_polys_[first + k][chosen[s]];
    solver.inverse = invert(std::move(t));
    for (std::size_t w : chosen) solver.words.push_back(layout_.index(d, w));
  }
}

IntMagnus MagnusModel::letter(int generator, int sign) const {
  IntMagnus e = IntMagnus::one(layout_);
  const std::size_t x = layout_.index(1, static_cast<std::size_t>(generator));
  if (sign > 0) {
    e.coeffs[x] = 1;
    return e;
  }
  // (1 + X)^-1 = sum_j (-X)^j
  std::size_t idx = 0;
  for (int l = 1; l <= layout_.degree; ++l) {
    idx = idx * static_cast<std::size_t>(layout_.rank) + static_cast<std::size_t>(generator);
    e.coeffs[layout_.index(l, idx)] = (l % 2) ? -1 : 1;
  }
  return e;
}

std::vector<Rational> MagnusModel::solve_degree(int d,
                                                const std::vector<Rational>& word_coeffs) const {
  const DegreeSolver& solver = solvers_[static_cast<std::size_t>(d)];
  const std::size_t start = layout_.offset[static_cast<std::size_t>(d)];
  std::vector<Rational> out(solver.words.size());
  for (std::size_t r = 0; r < out.size(); ++r) {
    for (std::size_t s = 0; s < solver.words.size(); ++s) {
      out[r] += solver.inverse[r][s] * word_coeffs[solver.words[s] - start];
    }
  }
  return out;
}

}  // namespace nilentropy::detail
