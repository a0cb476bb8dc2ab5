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

#include "lie.hpp"

#include <stdexcept>

#include "group_data.hpp"
#include "magnus.hpp"

namespace nilentropy::detail {

namespace {

std::optional<std::size_t> first_nonzero(const RationalVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return std::nullopt;
}

RationalVector to_dense(const LieElement& e, std::size_t dim) {
  RationalVector v(dim);
  for (const auto& [index, coefficient] : e.terms()) v[index] = coefficient;
  return v;
}

}  // namespace

RationalVector RationalSubspace::reduce(RationalVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (rows_[r][i] != 0) v[i] -= f * rows_[r][i];
  }
  return v;
}

bool RationalSubspace::insert(RationalVector v) {
  v = reduce(std::move(v));
  const auto p = first_nonzero(v);
  if (!p) return false;
  const Rational lead = v[*p];
  for (Rational& x : v) x /= lead;
  for (RationalVector& row : rows_) {
    const Rational f = row[*p];
    if (f == 0) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] != 0) row[i] -= f * v[i];
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < *p) ++at;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), *p);
  return true;
}

RationalLieAlgebra::RationalLieAlgebra(std::size_t dim)
    : dim_(dim), constants_(dim * dim, RationalVector(dim)) {}

RationalVector RationalLieAlgebra::bracket(const RationalVector& a, const RationalVector& b) const {
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Rational f = a[i] * b[j];
      const RationalVector& c = constant(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (c[k] != 0) out[k] += f * c[k];
    }
  }
  return out;
}

RationalVector GroupLieAlgebra::project(const RationalVector& free_coords) const {
  const RationalVector reduced = ideal.reduce(free_coords);
  RationalVector out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = reduced[kept[i]];
  return out;
}

RationalVector lie_log(const GroupSpec& free_spec, const MalcevVector& g) {
  const MagnusModel& model = *free_spec.data().core->magnus;
  const WordLayout& layout = model.layout();
  const HallBasis& hb = model.basis();
  std::vector<Rational> coords(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) coords[i] = g[i];
  MagnusElement<Rational> u = model.from_malcev<Rational>(coords);
  u.coeffs[0] = 0;
  MagnusElement<Rational> log = MagnusElement<Rational>::zero(layout);
  MagnusElement<Rational> term = MagnusElement<Rational>::one(layout);
  for (int j = 1; j <= layout.degree; ++j) {
    term = multiply(layout, term, u);
    const Rational f(j % 2 == 1 ? 1 : -1, j);
    for (std::size_t w = 0; w < log.coeffs.size(); ++w)
      if (term.coeffs[w] != 0) log.coeffs[w] += f * term.coeffs[w];
  }
  RationalVector out(hb.size());
  for (int d = 1; d <= hb.nilpotency_class(); ++d) {
    const std::size_t start = layout.offset[static_cast<std::size_t>(d)];
    std::vector<Rational> words(layout.power[static_cast<std::size_t>(d)]);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] = log.coeffs[start + w];
    const auto hall = model.solve_degree(d, words);
    const auto [first, last] = hb.weight_range(d);
    for (std::size_t k = first; k < last; ++k) out[k] = hall[k - first];
  }
  return out;
}

GroupLieAlgebra group_lie_algebra(const GroupSpec& spec) {
  const HallBasis& hb = spec.hall_basis();
  const std::size_t n = hb.size();
  RationalLieAlgebra free(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) free.set_constant(i, j, to_dense(hb.bracket(i, j), n));

  GroupLieAlgebra out;
  out.ideal = RationalSubspace(n);
  const GroupSpec free_spec = spec.free_cover();
  std::vector<RationalVector> pending;
  for (const MalcevVector& r : spec.relators()) pending.push_back(lie_log(free_spec, r));
  while (!pending.empty()) {
    RationalVector v = std::move(pending.back());
    pending.pop_back();
    v = out.ideal.reduce(std::move(v));
    if (!first_nonzero(v)) continue;
    out.ideal.insert(v);
    for (int g = 0; g < hb.rank(); ++g) {
      RationalVector e(n);
      e[static_cast<std::size_t>(g)] = 1;
      pending.push_back(free.bracket(v, e));
    }
  }
  std::vector<char> pivot(n, 0);
  for (std::size_t p : out.ideal.pivots()) pivot[p] = 1;
  for (std::size_t k = 0; k < n; ++k)
    if (!pivot[k]) out.kept.push_back(k);
  out.algebra = RationalLieAlgebra(out.kept.size());
  for (std::size_t i = 0; i < out.kept.size(); ++i)
    for (std::size_t j = 0; j < out.kept.size(); ++j)
      out.algebra.set_constant(i, j, out.project(free.constant(out.kept[i], out.kept[j])));
  return out;
}

RationalLieAlgebra semidirect_lie_algebra(const Endomorphism& phi) {
  const GroupSpec& spec = phi.spec();
  const HallBasis& hb = spec.hall_basis();
  const GroupLieAlgebra lie = group_lie_algebra(spec);
  const RationalLieAlgebra& base = lie.algebra;
  const std::size_t n = base.dimension();
  const GroupSpec free_spec = spec.free_cover();

  // Phi on images of the free Hall entries.
  std::vector<RationalVector> image(hb.size());
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const BasicCommutator& b = hb[k];
    if (b.is_generator()) {
      const MalcevVector g = phi.images()[static_cast<std::size_t>(b.generator)];
      image[k] = lie.project(lie_log(free_spec, spec.lift(g)));
    } else {
      image[k] = base.bracket(image[b.left], image[b.right]);
    }
  }
  // N = Phi - I on the basis; D = log Phi = sum (-1)^{j+1} N^j / j.
  std::vector<RationalVector> nil(n);  // columns
  for (std::size_t i = 0; i < n; ++i) {
    nil[i] = image[lie.kept[i]];
    nil[i][i] -= 1;
  }
  auto apply_nil = [&](const RationalVector& v) {
    RationalVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (nil[i][r] != 0) out[r] += v[i] * nil[i][r];
    }
    return out;
  };
  std::vector<RationalVector> d(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector v(n);
    v[i] = 1;
    for (std::size_t j = 1; j <= n + 1; ++j) {
      v = apply_nil(v);
      if (!first_nonzero(v)) break;
      if (j > n) throw std::invalid_argument("monodromy is not unipotent on the Lie algebra");
      const Rational f(j % 2 == 1 ? 1 : -1, static_cast<unsigned long>(j));
      for (std::size_t r = 0; r < n; ++r) d[i][r] += f * v[r];
    }
  }
  RationalLieAlgebra out(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector col(n + 1), neg(n + 1);
    for (std::size_t r = 0; r < n; ++r) {
      col[r + 1] = d[i][r];
      neg[r + 1] = -d[i][r];
    }
    out.set_constant(0, i + 1, col);
    out.set_constant(i + 1, 0, neg);
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector c(n + 1);
      const RationalVector& bc = base.constant(i, j);
      for (std::size_t r = 0; r < n; ++r) c[r + 1] = bc[r];
      out.set_constant(i + 1, j + 1, std::move(c));
    }
  }
  return out;
}

int upper_central_length(const RationalLieAlgebra& algebra) {
  const std::size_t n = algebra.dimension();
  RationalSubspace z(n);
  int length = 0;
  while (z.dimension() < n) {
    // Z' = { v : [v, e_j] in Z for all j }: kernel of v -> ([v, e_j] mod Z)_j.
    RationalSubspace rows(n);  // row space of the transposed map
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<RationalVector> columns(n);  // columns[k] = [e_k, e_j] mod Z
      for (std::size_t k = 0; k < n; ++k) columns[k] = z.reduce(algebra.constant(k, j));
      for (std::size_t r = 0; r < n; ++r) {
        RationalVector row(n);
        for (std::size_t k = 0; k < n; ++k) row[k] = columns[k][r];
        rows.insert(std::move(row));
      }
    }
    // Kernel of the row space: free columns give basis vectors.
    RationalSubspace next(n);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t p : rows.pivots()) is_pivot[p] = 1;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      RationalVector v(n);
      v[f] = 1;
      for (std::size_t r = 0; r < rows.dimension(); ++r) v[rows.pivots()[r]] = -rows.rows()[r][f];
      next.insert(std::move(v));
    }
    if (next.dimension() <= z.dimension())
      throw Error("Lie algebra is not nilpotent (upper central series stalls)");
    z = std::move(next);
    ++length;
  }
  return length;
}

}  // namespace nilentropy::detail
