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

#include "nilentropy/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "fastpoly.hpp"
#include "fit.hpp"
#include "group_data.hpp"
#include "nilentropy/ball.hpp"
#include "nilentropy/lattice.hpp"
#include "parallel.hpp"

namespace nilentropy {
namespace {

constexpr int kBasisLengthCap = 6;
constexpr std::size_t kBasisLengthBudget = 1'000'000;
constexpr std::size_t kDistortionBudget = 20'000'000;
constexpr std::size_t kMinLayerElements = 20;

double log_of(double length) {
  return length > 0 ? std::log(length) : -std::numeric_limits<double>::infinity();
}

GrowthEntry entry_from_log(long n, double log_length, LengthMode mode) {
  GrowthEntry e;
  e.n = n;
  e.mode = mode;
  e.log_length = log_length;
  e.length = std::isfinite(log_length) ? std::exp(log_length) : 0.0;
  return e;
}

GrowthEntry entry_from_integer(long n, const Integer& length, LengthMode mode) {
  GrowthEntry e = entry_from_log(
      n, length == 0 ? -std::numeric_limits<double>::infinity() : log_abs(length), mode);
  if (mpz_sizeinbase(length.get_mpz_t(), 2) <= 53) e.length = length.get_d();
  return e;
}

// Upper bounds for the word length of each Mal'cev basis element over the
// spec's generating set.
std::vector<Integer> basis_length_bounds(const GroupSpec& spec) {
  auto bfs = [&](const MalcevVector& g) -> std::optional<int> {
    try {
      return geodesic_length(g, spec, kBasisLengthCap, kBasisLengthBudget);
    } catch (const BudgetExceeded&) {
      return std::nullopt;
    }
  };
  const HallBasis& hb = spec.hall_basis();
  std::vector<Integer> hall(hb.size());
  for (std::size_t k = 0; k < hb.size(); ++k) {
    const BasicCommutator& b = hb[k];
    if (b.weight == 1) {
      if (spec.has_default_generating_set()) {
        hall[k] = 1;
      } else {
        auto d = bfs(spec.generator(b.generator));
        if (!d) throw Error("generator x" + std::to_string(b.generator + 1) +
                            " is not within reach of the generating set");
        hall[k] = *d;
      }
    } else {
      hall[k] = 2 * (hall[b.left] + hall[b.right]);
    }
  }
  std::vector<Integer> out(spec.dimension());
  for (std::size_t c = 0; c < spec.dimension(); ++c) {
    const MalcevVector& free = spec.coordinate_element(c);
    Integer bound = 0;
    for (std::size_t k = 0; k < free.size(); ++k) bound += abs(free[k]) * hall[k];
    if (spec.weight(c) > 1) {
      if (auto d = bfs(spec.basis_element(c)); d && *d < bound) bound = *d;
    }
    out[c] = bound;
  }
  return out;
}

double karidi_log_in_lattice(const std::vector<Integer>& coords, const std::vector<int>& weights) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    best = std::max(best, log_abs(coords[i]) / weights[i]);
  }
  return best;
}

void check_subject(const Endomorphism& phi, const MalcevVector& g) {
  if (g.size() != phi.spec().dimension()) {
    throw std::invalid_argument("element has " + std::to_string(g.size()) +
                                " coordinates, expected " +
                                std::to_string(phi.spec().dimension()));
  }
}

}  // namespace

std::string to_string(LengthMode mode) {
  switch (mode) {
    case LengthMode::kExactBfs:
      return "exact-bfs";
    case LengthMode::kKaridi:
      return "karidi";
    case LengthMode::kNormalFormUpper:
      return "normalform-upper";
    case LengthMode::kAbelianLower:
      return "abelian-lower";
  }
  return "unknown";
}

LengthMode parse_length_mode(std::string_view tag) {
  if (tag == "exact-bfs") return LengthMode::kExactBfs;
  if (tag == "karidi") return LengthMode::kKaridi;
  if (tag == "normalform-upper") return LengthMode::kNormalFormUpper;
  if (tag == "abelian-lower") return LengthMode::kAbelianLower;
  throw std::invalid_argument("unknown length mode '" + std::string(tag) + "'");
}

GrowthSeries growth_series(const Endomorphism& phi, const MalcevVector& g, long n_max,
                           LengthMode mode, const GrowthOptions& options) {
  check_subject(phi, g);
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  const GroupSpec& spec = phi.spec();
  GrowthSeries series;
  series.subject = g;

  std::unique_ptr<CayleyBall> ball;
  std::vector<Integer> bounds;
  if (mode == LengthMode::kExactBfs) {
    ball = std::make_unique<CayleyBall>(spec, BallOptions{options.radius_cap, options.budget});
  } else if (mode == LengthMode::kNormalFormUpper) {
    bounds = basis_length_bounds(spec);
  }

  long omitted_from = 0;
  MalcevVector x = g;
  for (long n = 1; n <= n_max; ++n) {
    x = phi.apply(x);
    switch (mode) {
      case LengthMode::kKaridi:
        series.entries.push_back(entry_from_log(n, log_karidi_length(x, spec), mode));
        break;
      case LengthMode::kAbelianLower: {
        Integer bound = abelian_lower_bound(x, spec);
        if (bound == 0 && !x.is_identity()) bound = 1;
        series.entries.push_back(entry_from_integer(n, bound, mode));
        break;
      }
      case LengthMode::kNormalFormUpper: {
        Integer total = 0;
        for (std::size_t k = 0; k < x.size(); ++k) total += abs(x[k]) * bounds[k];
        series.entries.push_back(entry_from_integer(n, total, mode));
        break;
      }
      case LengthMode::kExactBfs: {
        std::optional<int> d;
        if (abelian_lower_bound(x, spec) <= options.radius_cap) d = ball->distance(x);
        if (d) {
          series.entries.push_back(entry_from_integer(n, Integer(*d), mode));
        } else if (omitted_from == 0) {
          omitted_from = n;
        }
        break;
      }
    }
  }
  if (omitted_from != 0) {
    series.warnings.push_back("exact-bfs: lengths beyond radius " +
                              std::to_string(options.radius_cap) + " omitted (first at n = " +
                              std::to_string(omitted_from) + ")");
  }
  return series;
}

GrowthSeries make_series(const std::vector<double>& lengths, LengthMode mode) {
  GrowthSeries series;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] >= 0)) throw std::invalid_argument("lengths must be non-negative");
    series.entries.push_back(entry_from_log(static_cast<long>(i + 1), log_of(lengths[i]), mode));
    series.entries.back().length = lengths[i];
  }
  return series;
}

namespace {

struct Window {
  std::vector<double> n;
  std::vector<double> log_length;
  std::pair<long, long> range{0, 0};
};

Window fit_window(const GrowthSeries& series, const FitOptions& options) {
  if (series.entries.empty()) throw Error("insufficient data: empty series");
  const long n_max = series.entries.back().n;
  const long n_min = n_max / 2;
  Window w;
  bool any_nonzero = false;
  for (const GrowthEntry& e : series.entries) {
    if (std::isfinite(e.log_length)) any_nonzero = true;
    if (e.n < n_min || !std::isfinite(e.log_length)) continue;
    if (w.n.empty()) w.range.first = e.n;
    w.range.second = e.n;
    w.n.push_back(static_cast<double>(e.n));
    w.log_length.push_back(e.log_length);
  }
  if (!any_nonzero) throw Error("degenerate series: every length is zero");
  if (w.n.size() < options.min_entries) {
    throw Error("insufficient data: " + std::to_string(w.n.size()) + " entries in [" +
                std::to_string(n_min) + ", " + std::to_string(n_max) + "], need " +
                std::to_string(options.min_entries));
  }
  return w;
}

}  // namespace

EntropyEstimate entropy_estimate(const GrowthSeries& series, const FitOptions& options) {
  const Window w = fit_window(series, options);
  std::vector<double> rows;
  rows.reserve(w.n.size() * 3);
  for (double n : w.n) {
    rows.push_back(n);
    rows.push_back(std::log(n));
    rows.push_back(1.0);
  }
  const detail::LeastSquares ls = detail::least_squares(rows, 3, w.log_length);
  EntropyEstimate out;
  out.rate = ls.coefficients[0];
  out.poly_exponent = ls.coefficients[1];
  out.residual = ls.residual;
  out.window = w.range;
  out.value = std::max(1.0, std::exp(out.rate));
  if (!(ls.residual <= options.max_residual)) {
    throw Error("entropy fit residual " + std::to_string(ls.residual) + " exceeds threshold " +
                std::to_string(options.max_residual));
  }
  return out;
}

PolyFit poly_degree_fit(const GrowthSeries& series, const FitOptions& options) {
  const EntropyEstimate entropy = entropy_estimate(series, options);
  if (std::fabs(entropy.value - 1.0) > 0.05) {
    throw Error("series grows exponentially (entropy estimate " + std::to_string(entropy.value) +
                ")");
  }
  const Window w = fit_window(series, options);
  std::vector<double> log_n(w.n.size());
  std::transform(w.n.begin(), w.n.end(), log_n.begin(), [](double n) { return std::log(n); });
  const detail::LineFit line = detail::fit_line(log_n, w.log_length);
  return PolyFit{std::max(0.0, line.slope), line.correlation, w.n.size()};
}

AbelianComparison abelian_comparison(const Endomorphism& phi,
                                     const std::vector<MalcevVector>& subjects, long n_max,
                                     const FitOptions& options) {
  const SpectralReport report = spectral_report(abelianization_matrix(phi));
  std::vector<MalcevVector> targets = subjects;
  if (targets.empty()) {
    for (int g = 0; g < phi.spec().rank(); ++g) targets.push_back(phi.spec().generator(g));
  }
  AbelianComparison out;
  out.spectral_radius = report.spectral_radius;
  out.entropy_estimate = 0.0;
  for (const MalcevVector& s : targets) {
    const EntropyEstimate e =
        entropy_estimate(growth_series(phi, s, n_max, LengthMode::kKaridi), options);
    if (e.value > out.entropy_estimate) {
      out.entropy_estimate = e.value;
      out.residual = e.residual;
      out.window = e.window;
    }
  }
  out.ratio = out.entropy_estimate / std::max(1.0, out.spectral_radius);
  return out;
}

std::vector<TowerRow> quotient_tower(const Endomorphism& phi, const MalcevVector& g,
                                     const std::vector<int>& classes, long n_max,
                                     const FitOptions& options) {
  check_subject(phi, g);
  const int cls = phi.spec().nilpotency_class();
  std::vector<TowerRow> out;
  for (int k : classes) {
    if (k < 2 || k > cls + 1) {
      throw std::out_of_range("tower class " + std::to_string(k) + " outside [2, " +
                              std::to_string(cls + 1) + "]");
    }
    const Endomorphism induced = phi.truncate(k);
    const MalcevVector image = project(g, k, phi.spec());
    out.push_back(TowerRow{
        k, entropy_estimate(growth_series(induced, image, n_max, LengthMode::kKaridi), options)});
  }
  return out;
}

FiniteIndexReport finite_index_experiment(const Endomorphism& phi,
                                          const std::vector<MalcevVector>& subgroup_generators,
                                          long n_max, const FitOptions& options) {
  const GroupSpec& spec = phi.spec();
  if (subgroup_generators.empty()) throw std::invalid_argument("empty subgroup generating set");
  for (const MalcevVector& s : subgroup_generators) check_subject(phi, s);
  const SubgroupLattice lattice = subgroup_closure(subgroup_generators, spec);
  const std::optional<Integer> index = lattice.index();
  if (!index) throw Error("subgroup has infinite index");
  for (const MalcevVector& s : subgroup_generators) {
    if (!lattice.contains(phi.apply(s))) throw Error("subgroup is not invariant under the map");
  }
  const std::vector<int> weights = lattice.pivot_weights();

  FiniteIndexReport out;
  out.index = *index;
  out.subgroup_estimate = 0.0;
  for (const MalcevVector& s : subgroup_generators) {
    GrowthSeries series;
    series.subject = s;
    MalcevVector x = s;
    for (long n = 1; n <= n_max; ++n) {
      x = phi.apply(x);
      const auto coords = lattice.coordinates(x);
      if (!coords) throw std::logic_error("invariant subgroup lost an iterate");
      series.entries.push_back(
          entry_from_log(n, karidi_log_in_lattice(*coords, weights), LengthMode::kKaridi));
    }
    out.subgroup_estimate = std::max(out.subgroup_estimate, entropy_estimate(series, options).value);
  }
  out.ambient_estimate = abelian_comparison(phi, {}, n_max, options).entropy_estimate;
  out.ratio = out.subgroup_estimate / out.ambient_estimate;
  return out;
}

namespace {

struct RowHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int32_t x : v) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

// Products restricted to a block of output coordinates, with a compiled
// fast path for free groups.
class LayerProduct {
 public:
  LayerProduct(const GroupSpec& spec, std::size_t first, std::size_t last)
      : spec_(spec), first_(first), last_(last) {
    if (!spec.is_free()) return;
    const detail::FreeCore& core = *spec.data().core;
    std::vector<detail::EvalPoly> product(core.product.begin() + static_cast<std::ptrdiff_t>(first),
                                          core.product.begin() + static_cast<std::ptrdiff_t>(last));
    std::vector<detail::EvalPoly> inverse(core.inverse.begin(),
                                          core.inverse.begin() + static_cast<std::ptrdiff_t>(first));
    product_ = detail::CompiledMap::compile(product);
    inverse_ = detail::CompiledMap::compile(inverse);
  }

  // Coordinates [0, first) of a^-1.
  bool inverse_prefix(std::span<const std::int32_t> a, std::int64_t* out) const {
    if (inverse_) {
      std::vector<std::int64_t> in(a.begin(), a.end());
      return inverse_->apply(in.data(), out);
    }
    const MalcevVector inv = nilentropy::inverse(to_vector(a), spec_);
    return copy_out(inv, 0, first_, out);
  }

  // Coordinates [first, last) of a * b.
  bool layer(std::span<const std::int32_t> a, std::span<const std::int32_t> b,
             std::int64_t* scratch, std::int64_t* out) const {
    const std::size_t n = a.size();
    if (product_) {
      for (std::size_t k = 0; k < n; ++k) {
        scratch[k] = a[k];
        scratch[n + k] = b[k];
      }
      return product_->apply(scratch, out);
    }
    const MalcevVector p = nilentropy::multiply(to_vector(a), to_vector(b), spec_);
    return copy_out(p, first_, last_, out);
  }

 private:
  static MalcevVector to_vector(std::span<const std::int32_t> a) {
    MalcevVector v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[k];
    return v;
  }
  static bool copy_out(const MalcevVector& v, std::size_t first, std::size_t last,
                       std::int64_t* out) {
    for (std::size_t k = first; k < last; ++k) {
      if (!fits_int64(v[k])) return false;
      out[k - first] = to_int64(v[k]);
    }
    return true;
  }

  const GroupSpec& spec_;
  std::size_t first_;
  std::size_t last_;
  std::optional<detail::CompiledMap> product_;
  std::optional<detail::CompiledMap> inverse_;
};

}  // namespace

DistortionProfile distortion_profile(const GroupSpec& spec, int i, int radius) {
  const int cls = spec.nilpotency_class();
  if (i < 1 || i > cls) {
    throw std::out_of_range("layer " + std::to_string(i) + " outside [1, " + std::to_string(cls) +
                            "]");
  }
  if (radius < 4) throw std::invalid_argument("distortion radius must be at least 4");
  const auto [first, last] = spec.weight_range(i);
  const std::size_t width = last - first;
  if (width == 0) throw Error("layer " + std::to_string(i) + " is trivial");

  // best[L] = largest layer norm found with word length exactly L (upper bound).
  std::vector<double> best;
  std::set<std::vector<std::int32_t>> distinct;

  if (i == 1) {
    const CayleyBall ball(spec, BallOptions{radius, kDistortionBudget});
    best.assign(static_cast<std::size_t>(radius) + 1, 0.0);
    for (std::size_t e = 0; e < ball.size(); ++e) {
      const auto row = ball.coordinates(e);
      double norm = 0;
      for (std::size_t k = first; k < last; ++k) norm += std::abs(static_cast<double>(row[k]));
      auto& slot = best[static_cast<std::size_t>(ball.distance_at(e))];
      slot = std::max(slot, norm);
      if (distinct.size() < kMinLayerElements) distinct.insert({row.begin(), row.end()});
    }
  } else {
    const int half = (radius + 1) / 2;
    const CayleyBall ball(spec, BallOptions{half, kDistortionBudget});
    const std::size_t dim = ball.dimension();
    const LayerProduct product(spec, first, last);

    std::unordered_map<std::vector<std::int32_t>, std::vector<std::uint32_t>, RowHash> buckets;
    std::vector<std::vector<std::int32_t>> partner(ball.size());
    std::vector<std::int64_t> inv(first);
    for (std::size_t e = 0; e < ball.size(); ++e) {
      const auto row = ball.coordinates(e);
      buckets[std::vector<std::int32_t>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(first))]
          .push_back(static_cast<std::uint32_t>(e));
      if (!product.inverse_prefix(row, inv.data())) throw Error("coordinate overflow");
      partner[e].assign(inv.begin(), inv.end());
    }

    struct Partial {
      std::vector<double> best;
      std::set<std::vector<std::int32_t>> distinct;
      bool overflow = false;
    };
    const std::size_t blocks = std::max<std::size_t>(1, detail::worker_count() * 4);
    const std::size_t chunk = (ball.size() + blocks - 1) / blocks;
    std::vector<Partial> partials(blocks);
    detail::parallel_for(blocks, 1, [&](std::size_t b0, std::size_t b1) {
      std::vector<std::int64_t> scratch(2 * dim);
      std::vector<std::int64_t> out(width);
      std::vector<std::int32_t> key(width);
      for (std::size_t blk = b0; blk < b1; ++blk) {
        Partial& part = partials[blk];
        part.best.assign(static_cast<std::size_t>(2 * half) + 1, 0.0);
        const std::size_t end = std::min(ball.size(), (blk + 1) * chunk);
        for (std::size_t a = blk * chunk; a < end; ++a) {
          const auto it = buckets.find(partner[a]);
          if (it == buckets.end()) continue;
          const auto ra = ball.coordinates(a);
          const int da = ball.distance_at(a);
          for (std::uint32_t bi : it->second) {
            if (!product.layer(ra, ball.coordinates(bi), scratch.data(), out.data())) {
              part.overflow = true;
              continue;
            }
            double norm = 0;
            for (std::size_t k = 0; k < width; ++k) {
              norm += std::abs(static_cast<double>(out[k]));
              key[k] = static_cast<std::int32_t>(out[k]);
            }
            auto& slot = part.best[static_cast<std::size_t>(da + ball.distance_at(bi))];
            slot = std::max(slot, norm);
            if (part.distinct.size() < kMinLayerElements) part.distinct.insert(key);
          }
        }
      }
    });
    best.assign(static_cast<std::size_t>(2 * half) + 1, 0.0);
    for (const Partial& part : partials) {
      if (part.overflow) throw Error("coordinate overflow in distortion products");
      for (std::size_t l = 0; l < part.best.size(); ++l) best[l] = std::max(best[l], part.best[l]);
      for (const auto& k : part.distinct) {
        if (distinct.size() < kMinLayerElements) distinct.insert(k);
      }
    }
  }

  DistortionProfile profile;
  profile.radius = radius;
  profile.layer_elements = distinct.size();
  if (distinct.size() < kMinLayerElements) {
    throw Error("too few elements of gamma_" + std::to_string(i) + " within radius " +
                std::to_string(radius) + " (" + std::to_string(distinct.size()) + ")");
  }
  // Only lengths where Delta strictly grows enter the fit; the plateaus in
  // between (e.g. odd L for subgroups inside the commutator) carry no data.
  double running = 0;
  std::vector<double> log_l, log_d;
  for (int l = 1; l <= radius; ++l) {
    const double previous = running;
    running = std::max(running, best[static_cast<std::size_t>(l)]);
    profile.points.emplace_back(l, running);
    if (2 * l >= radius && running > previous) {
      log_l.push_back(std::log(static_cast<double>(l)));
      log_d.push_back(std::log(running));
    }
  }
  if (log_l.size() < 2) throw Error("too few distortion samples");
  const detail::LineFit line = detail::fit_line(log_l, log_d);
  profile.fit = PolyFit{line.slope, line.correlation, log_l.size()};
  return profile;
}

double isoperimetric_constant(const GroupSpec& spec, int radius) {
  const int cls = spec.nilpotency_class();
  if (cls < 2) throw std::invalid_argument("class-1 groups have nothing to split off");
  const CayleyBall ball(spec, BallOptions{radius, kDistortionBudget});
  const auto [first, last] = spec.weight_range(cls);
  double best = 0;
  for (std::size_t e = 1; e < ball.size(); ++e) {
    const auto [head, tail] = rewrite_mod_last_term(ball.element(e), spec);
    double norm = 0;
    for (std::size_t k = first; k < last; ++k) norm += std::fabs(tail[k].get_d());
    best = std::max(best, norm / std::pow(static_cast<double>(ball.distance_at(e)), cls));
  }
  return best;
}

std::vector<RankSweepRow> rank_sweep(int max_rank, int cls, long n_max) {
  if (max_rank < 2) throw std::invalid_argument("rank sweep needs max_rank >= 2");
  std::vector<RankSweepRow> rows;
  for (int m = 2; m <= max_rank; ++m) {
    const GroupSpec spec(m, cls);
    std::vector<MalcevVector> images{spec.generator(0)};
    for (int j = 1; j < m; ++j) {
      images.push_back(multiply(spec.generator(j - 1), spec.generator(j), spec));
    }
    const Endomorphism shear(spec, images);
    double degree = 0;
    for (int g = 0; g < m; ++g) {
      const PolyFit fit =
          poly_degree_fit(growth_series(shear, spec.generator(g), n_max, LengthMode::kKaridi));
      degree = std::max(degree, fit.degree);
    }
    rows.push_back(RankSweepRow{m, degree});
  }
  return rows;
}

}  // namespace nilentropy
