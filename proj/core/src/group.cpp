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

#include "nilentropy/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "group_data.hpp"
#include "nilentropy/lattice.hpp"
#include "nilentropy/matrix.hpp"

namespace nilentropy {

// ---------------------------------------------------------------------------
// MalcevVector / WordExpr

MalcevVector::MalcevVector(std::initializer_list<long> exponents) {
  exponents_.reserve(exponents.size());
  for (long e : exponents) exponents_.emplace_back(e);
}

bool MalcevVector::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const Integer& e) { return e == 0; });
}

std::string MalcevVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out += ',';
    out += exponents_[i].get_str();
  }
  return out + ")";
}

WordExpr::WordExpr(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("word letters must have exponent +1 or -1");
    if (l.generator < 0) throw std::invalid_argument("negative generator index");
  }
}

WordExpr WordExpr::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse word \"" + std::string(text) + "\": " + why);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '*' || ch == '.') {
      ++i;
      continue;
    }
    if (ch != 'x' && ch != 'X') fail("expected a letter x<i>");
    int sign = ch == 'X' ? -1 : 1;
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("missing generator number");
    const int index = std::stoi(std::string(text.substr(start, i - start)));
    if (index < 1) fail("generator numbers start at 1");
    int repeat = 1;
    if (text.substr(i).starts_with("^")) {
      ++i;
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("missing exponent");
      repeat = std::stoi(std::string(text.substr(start, i - start)));
      if (negative) sign = -sign;
    } else if (text.substr(i).starts_with("⁻¹")) {  // ⁻¹
      sign = -sign;
      i += std::string_view("⁻¹").size();
    }
    for (int r = 0; r < repeat; ++r) letters.push_back(Letter{index - 1, sign});
  }
  return WordExpr(std::move(letters));
}

WordExpr WordExpr::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l.exponent = -l.exponent;
  return WordExpr(std::move(out));
}

WordExpr WordExpr::freely_reduced() const {
  std::vector<Letter> stack;
  for (const Letter& l : letters_) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return WordExpr(std::move(stack));
}

std::string WordExpr::to_string() const {
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.generator + 1);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

WordExpr operator*(const WordExpr& a, const WordExpr& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return WordExpr(std::move(out));
}

// ---------------------------------------------------------------------------
// FreeCore

namespace detail {

MalcevVector FreeCore::multiply(const MalcevVector& x, const MalcevVector& y) const {
  const std::size_t n = basis->size();
  std::vector<Integer> values;
  values.reserve(2 * n);
  values.insert(values.end(), x.exponents().begin(), x.exponents().end());
  values.insert(values.end(), y.exponents().begin(), y.exponents().end());
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = product[k].evaluate(values);
  return MalcevVector(std::move(out));
}

MalcevVector FreeCore::invert(const MalcevVector& x) const {
  const std::size_t n = basis->size();
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = inverse[k].evaluate(x.view());
  return MalcevVector(std::move(out));
}

namespace {

std::shared_ptr<const FreeCore> derive_core(int rank, int cls) {
  auto core = std::make_shared<FreeCore>();
  core->basis = std::make_shared<const HallBasis>(rank, cls);
  core->magnus = std::make_shared<const MagnusModel>(core->basis);
  const MagnusModel& model = *core->magnus;
  const std::size_t n = core->basis->size();

  std::vector<MPoly> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = MPoly::variable(static_cast<std::uint16_t>(k));
    ys[k] = MPoly::variable(static_cast<std::uint16_t>(n + k));
  }
  const WordLayout& layout = model.layout();
  auto product = multiply(layout, model.from_malcev<MPoly>(xs), model.from_malcev<MPoly>(ys));
  for (MPoly& p : model.peel(std::move(product))) core->product.emplace_back(p);

  // (prod_k B_k^{x_k})^-1 = prod_{k descending} B_k^{-x_k}
  auto inv = MagnusElement<MPoly>::one(layout);
  for (std::size_t k = n; k-- > 0;) {
    inv = multiply(layout, inv, model.basis_power(k, xs[k] * Rational(-1)));
  }
  for (MPoly& p : model.peel(std::move(inv))) core->inverse.emplace_back(p);
  return core;
}

}  // namespace

std::shared_ptr<const FreeCore> free_core(int rank, int cls) {
  if (rank < 1 || cls < 1) throw std::invalid_argument("free nilpotent group needs rank, class >= 1");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FreeCore>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rank, cls}];
  if (!slot) slot = derive_core(rank, cls);
  return slot;
}

MalcevVector free_power(const FreeCore& core, const MalcevVector& x, const Integer& e) {
  MalcevVector base = e < 0 ? core.invert(x) : x;
  Integer n = abs(e);
  MalcevVector acc(core.basis->size());
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = core.multiply(acc, base);
    n >>= 1;
    if (n > 0) base = core.multiply(base, base);
  }
  return acc;
}

MalcevVector GroupData::lift(const MalcevVector& g) const {
  if (is_free()) return g;
  if (simple) {
    MalcevVector out(core->basis->size());
    for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = g[i];
    return out;
  }
  MalcevVector out(core->basis->size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    out = core->multiply(out, free_power(*core, coordinate_elements[i], g[i]));
  }
  return out;
}

MalcevVector GroupData::reduce(const MalcevVector& free_element) const {
  if (is_free()) return free_element;
  MalcevVector g = free_element;
  auto sift = [&](std::size_t r) {
    const std::size_t p = relation_pivots[r];
    if (g[p] == 0) return;
    const Integer& pivot = relation_rows[r][p];
    if (!mpz_divisible_p(g[p].get_mpz_t(), pivot.get_mpz_t()))
      throw std::logic_error("relation sifting left a non-divisible pivot");
    const Integer k = g[p] / pivot;
    g = core->multiply(g, free_power(*core, relation_rows[r], -k));
  };
  if (simple) {
    for (std::size_t r = 0; r < relation_rows.size(); ++r) sift(r);
    MalcevVector out(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) out[i] = g[kept[i]];
    return out;
  }
  MalcevVector out(kept.size());
  for (const Layer& layer : layers) {
    const std::size_t d = layer.last - layer.first;
    const std::size_t q = layer.solve.rows();
    if (q > 0) {
      MalcevVector head(core->basis->size());
      for (std::size_t j = 0; j < q; ++j) {
        Integer v = 0;
        for (std::size_t i = 0; i < d; ++i) v += layer.solve(j, i) * g[layer.first + i];
        out[layer.coord_first + j] = v;
        if (v != 0)
          head = core->multiply(head, free_power(*core, coordinate_elements[layer.coord_first + j], v));
      }
      g = core->multiply(core->invert(head), g);
    }
    for (std::size_t r : layer.rows) sift(r);
  }
  return out;
}

MalcevVector GroupData::multiply(const MalcevVector& g, const MalcevVector& h) const {
  if (is_free()) return core->multiply(g, h);
  return reduce(core->multiply(lift(g), lift(h)));
}

MalcevVector GroupData::invert(const MalcevVector& g) const {
  if (is_free()) return core->invert(g);
  return reduce(core->invert(lift(g)));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GroupSpec

namespace {

std::shared_ptr<detail::GroupData> free_data(int rank, int cls) {
  auto data = std::make_shared<detail::GroupData>();
  data->core = detail::free_core(rank, cls);
  const HallBasis& hb = *data->core->basis;
  for (std::size_t k = 0; k < hb.size(); ++k) {
    data->kept.push_back(k);
    data->weights.push_back(hb.weight(k));
    MalcevVector e(hb.size());
    e[k] = 1;
    data->coordinate_elements.push_back(std::move(e));
  }
  return data;
}

void finish(detail::GroupData& data) {
  const int cls = data.core->basis->nilpotency_class();
  data.weight_start.assign(static_cast<std::size_t>(cls) + 2, data.kept.size());
  for (std::size_t i = data.kept.size(); i-- > 0;) {
    data.weight_start[static_cast<std::size_t>(data.weights[i])] = i;
  }
  for (int d = cls; d >= 1; --d) {
    data.weight_start[static_cast<std::size_t>(d)] =
        std::min(data.weight_start[static_cast<std::size_t>(d)],
                 data.weight_start[static_cast<std::size_t>(d) + 1]);
  }
  const int rank = data.core->basis->rank();
  data.generators.clear();
  for (int g = 0; g < rank; ++g) {
    MalcevVector free_gen(data.core->basis->size());
    free_gen[static_cast<std::size_t>(g)] = 1;
    data.generators.push_back(data.reduce(free_gen));
  }
}

}  // namespace

namespace {

// Splits every weight layer of F_m / gamma_{c+1} into relation directions
// and a complement. When the echelon pivots of a layer are units the
// complement is spanned by the non-pivot Hall elements; otherwise a
// unimodular completion of the (saturated) relation lattice is used.
void build_layers(detail::GroupData& data) {
  const HallBasis& hb = *data.core->basis;
  const detail::FreeCore& core = *data.core;
  for (int w = 1; w <= hb.nilpotency_class(); ++w) {
    detail::GroupData::Layer layer;
    std::tie(layer.first, layer.last) = hb.weight_range(w);
    const std::size_t d = layer.last - layer.first;
    for (std::size_t r = 0; r < data.relation_rows.size(); ++r)
      if (hb.weight(data.relation_pivots[r]) == w) layer.rows.push_back(r);
    const std::size_t k = layer.rows.size();
    IntegerMatrix b(k, d);
    bool unit = true;
    for (std::size_t i = 0; i < k; ++i) {
      const MalcevVector& row = data.relation_rows[layer.rows[i]];
      for (std::size_t j = 0; j < d; ++j) b(i, j) = row[layer.first + j];
      if (abs(row[data.relation_pivots[layer.rows[i]]]) != 1) unit = false;
    }
    if (k > 0) {
      for (const Integer& f : smith_invariants(b)) {
        if (abs(f) != 1)
          throw TorsionError("quotient has torsion in graded piece of weight " + std::to_string(w));
      }
    }
    layer.coord_first = data.kept.size();
    // u: columns 0..k-1 span the relation lattice, the rest its complement.
    IntegerMatrix u(d, d);
    std::vector<std::size_t> complement_hall;
    if (unit) {
      std::vector<char> is_pivot(d, 0);
      for (std::size_t i = 0; i < k; ++i) {
        is_pivot[data.relation_pivots[layer.rows[i]] - layer.first] = 1;
        for (std::size_t j = 0; j < d; ++j) u(j, i) = b(i, j);
      }
      std::size_t col = k;
      for (std::size_t j = 0; j < d; ++j) {
        if (is_pivot[j]) continue;
        u(j, col++) = 1;
        complement_hall.push_back(layer.first + j);
      }
    } else {
      // Column operations b v = [h | 0]; the rows of v^-1 then start with a
      // basis of the lattice (h is unimodular since the lattice is saturated).
      IntegerMatrix m = b;
      IntegerMatrix v = IntegerMatrix::identity(d);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          if (m(i, j) == 0) continue;
          Integer g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(i, i).get_mpz_t(),
                     m(i, j).get_mpz_t());
          const Integer a = m(i, i) / g;
          const Integer c = m(i, j) / g;
          // [col_i, col_j] <- [s col_i + t col_j, -c col_i + a col_j]
          auto combine = [&](IntegerMatrix& x) {
            for (std::size_t r = 0; r < x.rows(); ++r) {
              const Integer xi = x(r, i);
              const Integer xj = x(r, j);
              x(r, i) = s * xi + t * xj;
              x(r, j) = a * xj - c * xi;
            }
          };
          combine(m);
          combine(v);
        }
      }
      auto w_inv = v.unimodular_inverse();
      if (!w_inv) throw std::logic_error("column reduction produced a singular transform");
      u = w_inv->transpose();
      data.simple = false;
    }
    auto u_inv = u.unimodular_inverse();
    if (!u_inv) throw std::logic_error("layer completion is not unimodular");
    layer.solve = IntegerMatrix(d - k, d);
    for (std::size_t j = 0; j < d - k; ++j)
      for (std::size_t i = 0; i < d; ++i) layer.solve(j, i) = (*u_inv)(k + j, i);
    for (std::size_t j = 0; j < d - k; ++j) {
      MalcevVector element(hb.size());
      if (unit) {
        element[complement_hall[j]] = 1;
        data.kept.push_back(complement_hall[j]);
      } else {
        for (std::size_t i = 0; i < d; ++i) {
          if (u(i, k + j) == 0) continue;
          element = core.multiply(element, detail::free_power(core, [&] {
            MalcevVector e(hb.size());
            e[layer.first + i] = 1;
            return e;
          }(), u(i, k + j)));
        }
        data.kept.push_back(std::string::npos);
      }
      data.coordinate_elements.push_back(std::move(element));
      data.weights.push_back(w);
    }
    data.layers.push_back(std::move(layer));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}

GroupSpec::GroupSpec(int rank, int cls) {
  auto data = free_data(rank, cls);
  finish(*data);
  data_ = std::move(data);
}

GroupSpec::GroupSpec(int rank, int cls, std::vector<MalcevVector> relators) {
  GroupSpec free(rank, cls);
  std::erase_if(relators, [](const MalcevVector& r) { return r.is_identity(); });
  for (const MalcevVector& r : relators) {
    if (r.size() != free.dimension())
      throw std::invalid_argument("relator length does not match the free Hall basis");
  }
  if (relators.empty()) {
    data_ = free.data_;
    return;
  }
  SubgroupLattice closure = normal_closure(relators, free);

  auto data = std::make_shared<detail::GroupData>();
  data->core = free.data_->core;
  data->relators = relators;
  for (std::size_t r = 0; r < closure.hirsch_length(); ++r) {
    data->relation_rows.push_back(closure.rows()[r]);
    data->relation_pivots.push_back(closure.pivot(r));
  }
  build_layers(*data);
  finish(*data);
  data_ = std::move(data);
}

int GroupSpec::rank() const { return data_->core->basis->rank(); }
int GroupSpec::nilpotency_class() const { return data_->core->basis->nilpotency_class(); }
std::size_t GroupSpec::dimension() const { return data_->dimension(); }
int GroupSpec::weight(std::size_t coord) const { return data_->weights.at(coord); }

std::pair<std::size_t, std::size_t> GroupSpec::weight_range(int d) const {
  if (d < 1 || d > nilpotency_class()) throw std::out_of_range("weight out of range");
  return {data_->weight_start[static_cast<std::size_t>(d)],
          data_->weight_start[static_cast<std::size_t>(d) + 1]};
}

std::size_t GroupSpec::graded_rank(int d) const {
  auto [first, last] = weight_range(d);
  return last - first;
}

const HallBasis& GroupSpec::hall_basis() const { return *data_->core->basis; }
std::shared_ptr<const HallBasis> GroupSpec::hall_basis_ptr() const { return data_->core->basis; }
bool GroupSpec::is_free() const { return data_->is_free(); }
const std::vector<MalcevVector>& GroupSpec::relators() const { return data_->relators; }
std::optional<std::size_t> GroupSpec::free_index(std::size_t coord) const {
  const std::size_t k = data_->kept.at(coord);
  if (k == std::string::npos) return std::nullopt;
  return k;
}

const MalcevVector& GroupSpec::coordinate_element(std::size_t coord) const {
  return data_->coordinate_elements.at(coord);
}

std::string GroupSpec::coordinate_name(std::size_t coord) const {
  if (auto k = free_index(coord)) return hall_basis().name(*k);
  const MalcevVector& e = coordinate_element(coord);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += hall_basis().name(i);
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  return out;
}

std::span<const MalcevVector> GroupSpec::generating_set() const {
  if (custom_generators_) return *custom_generators_;
  return data_->generators;
}

GroupSpec GroupSpec::with_generating_set(std::vector<MalcevVector> generators) const {
  if (generators.empty()) throw std::invalid_argument("generating set must be non-empty");
  for (const MalcevVector& g : generators) {
    if (g.size() != dimension())
      throw std::invalid_argument("generating set element has the wrong length");
  }
  GroupSpec out = *this;
  out.custom_generators_ = std::make_shared<const std::vector<MalcevVector>>(std::move(generators));
  return out;
}

MalcevVector GroupSpec::identity() const { return MalcevVector(dimension()); }

MalcevVector GroupSpec::generator(int g) const {
  if (g < 0 || g >= rank()) throw std::out_of_range("generator index out of range");
  return data_->generators[static_cast<std::size_t>(g)];
}

MalcevVector GroupSpec::basis_element(std::size_t coord) const {
  MalcevVector e(dimension());
  e[coord] = 1;
  return e;
}

MalcevVector GroupSpec::lift(const MalcevVector& g) const { return data_->lift(g); }
MalcevVector GroupSpec::reduce(const MalcevVector& free_element) const {
  return data_->reduce(free_element);
}
GroupSpec GroupSpec::free_cover() const { return GroupSpec(rank(), nilpotency_class()); }

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.rank() != b.rank() || a.nilpotency_class() != b.nilpotency_class()) return false;
  if (a.data_ != b.data_ && a.data_->relation_rows != b.data_->relation_rows) return false;
  if (a.has_default_generating_set() && b.has_default_generating_set()) return true;
  return std::ranges::equal(a.generating_set(), b.generating_set());
}

// ---------------------------------------------------------------------------
// Arithmetic

namespace {
void check_shape(const MalcevVector& g, const GroupSpec& spec) {
  if (g.size() != spec.dimension())
    throw std::invalid_argument("Mal'cev vector length " + std::to_string(g.size()) +
                                " does not match group dimension " +
                                std::to_string(spec.dimension()));
}
}  // namespace

MalcevVector multiply(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec) {
  check_shape(g, spec);
  check_shape(h, spec);
  return spec.data().multiply(g, h);
}

MalcevVector inverse(const MalcevVector& g, const GroupSpec& spec) {
  check_shape(g, spec);
  return spec.data().invert(g);
}

MalcevVector power(const MalcevVector& g, const Integer& n, const GroupSpec& spec) {
  check_shape(g, spec);
  MalcevVector base = n < 0 ? inverse(g, spec) : g;
  Integer e = abs(n);
  MalcevVector acc = spec.identity();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = spec.data().multiply(acc, base);
    e >>= 1;
    if (e > 0) base = spec.data().multiply(base, base);
  }
  return acc;
}

MalcevVector commutator(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec) {
  const MalcevVector gh = multiply(g, h, spec);
  const MalcevVector hg = multiply(h, g, spec);
  // g^-1 h^-1 g h = (hg)^-1 (gh)
  return multiply(inverse(hg, spec), gh, spec);
}

MalcevVector conjugate(const MalcevVector& g, const MalcevVector& h, const GroupSpec& spec) {
  return multiply(inverse(h, spec), multiply(g, h, spec), spec);
}

MalcevVector eval_word(const WordExpr& word, const GroupSpec& spec) {
  const auto gens = spec.generating_set();
  std::vector<MalcevVector> inverses(gens.size());
  std::vector<char> have_inverse(gens.size(), 0);
  MalcevVector acc = spec.identity();
  for (const Letter& l : word.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= gens.size())
      throw std::out_of_range("word letter x" + std::to_string(l.generator + 1) +
                              " outside the generating set");
    const auto idx = static_cast<std::size_t>(l.generator);
    if (l.exponent > 0) {
      acc = spec.data().multiply(acc, gens[idx]);
    } else {
      if (!have_inverse[idx]) {
        inverses[idx] = spec.data().invert(gens[idx]);
        have_inverse[idx] = 1;
      }
      acc = spec.data().multiply(acc, inverses[idx]);
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Length proxies and projections

double log_karidi_length(const MalcevVector& g, const GroupSpec& spec) {
  check_shape(g, spec);
  double best = -INFINITY;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    best = std::max(best, log_abs(g[i]) / spec.weight(i));
  }
  return best;
}

KaridiEstimate karidi_length(const MalcevVector& g, const GroupSpec& spec, double box_constant) {
  check_shape(g, spec);
  double best = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    const int w = spec.weight(i);
    double value;
    if (mpz_sizeinbase(g[i].get_mpz_t(), 2) < 1000) {
      const double a = std::fabs(g[i].get_d());
      value = w == 1 ? a : (w == 2 ? std::sqrt(a) : (w == 3 ? std::cbrt(a) : std::pow(a, 1.0 / w)));
    } else {
      value = std::exp(log_abs(g[i]) / w);
    }
    best = std::max(best, value);
  }
  return KaridiEstimate{best, box_constant};
}

MalcevVector project(const MalcevVector& g, int k, const GroupSpec& spec) {
  check_shape(g, spec);
  if (k < 1 || k > spec.nilpotency_class() + 1)
    throw std::out_of_range("projection class out of range");
  if (k == spec.nilpotency_class() + 1) return g;
  const std::size_t keep = spec.weight_range(k).first;
  return MalcevVector(std::vector<Integer>(g.exponents().begin(),
                                           g.exponents().begin() + static_cast<std::ptrdiff_t>(keep)));
}

std::pair<MalcevVector, MalcevVector> rewrite_mod_last_term(const MalcevVector& g,
                                                            const GroupSpec& spec) {
  check_shape(g, spec);
  const int cls = spec.nilpotency_class();
  if (cls < 2) throw std::invalid_argument("class-1 groups have nothing to split off");
  MalcevVector head = g;
  auto [first, last] = spec.weight_range(cls);
  for (std::size_t i = first; i < last; ++i) head[i] = 0;
  MalcevVector tail = multiply(inverse(head, spec), g, spec);
  return {std::move(head), std::move(tail)};
}

}  // namespace nilentropy
