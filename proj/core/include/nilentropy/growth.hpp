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

#ifndef NILENTROPY_GROWTH_HPP
#define NILENTROPY_GROWTH_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilentropy/automorphism.hpp"
#include "nilentropy/group.hpp"

namespace nilentropy {

enum class LengthMode { kExactBfs, kKaridi, kNormalFormUpper, kAbelianLower };

/// "exact-bfs", "karidi", "normalform-upper", "abelian-lower".
std::string to_string(LengthMode mode);
/// Throws std::invalid_argument for an unknown tag.
LengthMode parse_length_mode(std::string_view tag);

struct GrowthEntry {
  long n = 0;
  /// Length of phi^n(g); may be +inf in double range for huge Karidi values,
  /// in which case log_length is still finite.
  double length = 0.0;
  double log_length = -std::numeric_limits<double>::infinity();
  LengthMode mode = LengthMode::kKaridi;
};

struct GrowthSeries {
  MalcevVector subject;
  std::vector<GrowthEntry> entries;
  /// Diagnostics such as exact-bfs entries omitted beyond the radius cap.
  std::vector<std::string> warnings;
};

struct GrowthOptions {
  int radius_cap = 10;
  std::size_t budget = 10'000'000;
};

/// Lengths of phi^n(g) for n = 1..n_max in the requested mode. exact-bfs
/// entries past the radius cap are omitted with a warning.
GrowthSeries growth_series(const Endomorphism& phi, const MalcevVector& g, long n_max,
                           LengthMode mode, const GrowthOptions& options = {});

/// Series from given lengths (n = 1, 2, ...), for synthetic data.
GrowthSeries make_series(const std::vector<double>& lengths, LengthMode mode = LengthMode::kKaridi);

struct FitOptions {
  /// Entries required in the window [n_max / 2, n_max].
  std::size_t min_entries = 8;
  /// Largest accepted root-mean-square residual of the log fit.
  double max_residual = 0.25;
};

struct EntropyEstimate {
  /// max(1, exp(rate)).
  double value = 1.0;
  /// Fitted exponential rate log K before clamping.
  double rate = 0.0;
  /// Polynomial correction exponent r.
  double poly_exponent = 0.0;
  double residual = 0.0;
  std::pair<long, long> window{0, 0};
};

/// Fits log l_n = n log K + r log n + C by least squares over the window.
/// Throws Error for insufficient data, all-zero lengths or a residual above
/// the threshold.
EntropyEstimate entropy_estimate(const GrowthSeries& series, const FitOptions& options = {});

struct PolyFit {
  double degree = 0.0;
  /// Pearson correlation of the log-log data (0 when a coordinate is constant).
  double correlation = 0.0;
  std::size_t samples = 0;
};

/// Slope of log l_n against log n over the window. Throws Error when the
/// entropy fit is more than 0.05 away from 1 (exponential series).
PolyFit poly_degree_fit(const GrowthSeries& series, const FitOptions& options = {});

struct AbelianComparison {
  double spectral_radius = 1.0;
  double entropy_estimate = 1.0;
  double ratio = 1.0;
  double residual = 0.0;
  std::pair<long, long> window{0, 0};
};

/// Spectral radius on H_1 against the largest Karidi-mode entropy estimate
/// over the subjects.
AbelianComparison abelian_comparison(const Endomorphism& phi,
                                     const std::vector<MalcevVector>& subjects, long n_max,
                                     const FitOptions& options = {});

struct TowerRow {
  int k = 0;  // the quotient F_m / gamma_k
  EntropyEstimate estimate;
};

/// Entropy of the induced automorphism on each N / gamma_k acting on
/// project(g, k). Classes must lie in [2, class + 1].
std::vector<TowerRow> quotient_tower(const Endomorphism& phi, const MalcevVector& g,
                                     const std::vector<int>& classes, long n_max,
                                     const FitOptions& options = {});

struct FiniteIndexReport {
  Integer index;
  double subgroup_estimate = 1.0;
  double ambient_estimate = 1.0;
  double ratio = 1.0;
};

/// Entropy of phi restricted to the subgroup generated by the given
/// elements, measured with the Karidi proxy in the subgroup's own echelon
/// coordinates, against the ambient estimate. Throws Error when the
/// subgroup is not phi-invariant or has infinite index.
FiniteIndexReport finite_index_experiment(const Endomorphism& phi,
                                          const std::vector<MalcevVector>& subgroup_generators,
                                          long n_max, const FitOptions& options = {});

struct DistortionProfile {
  PolyFit fit;
  /// (L, Delta(L)): largest weight-i layer l1-norm among elements of gamma_i
  /// of word length at most L.
  std::vector<std::pair<int, double>> points;
  std::size_t layer_elements = 0;  // distinct gamma_i elements seen (capped)
  int radius = 0;
};

/// Distortion of gamma_i in N from exact ball data up to word length
/// `radius` (meet in the middle over a ball of radius ceil(radius / 2)),
/// fitted log-log over L in [radius / 2, radius]. Throws std::out_of_range
/// unless 1 <= i <= class, Error when fewer than 20 elements of gamma_i are
/// found.
DistortionProfile distortion_profile(const GroupSpec& spec, int i, int radius);

/// Largest |z|_1 / l(g)^c over the ball, where g = g' z is the split of
/// rewrite_mod_last_term and |z|_1 the top-layer l1-norm.
double isoperimetric_constant(const GroupSpec& spec, int radius);

struct RankSweepRow {
  int rank = 0;
  double degree = 0.0;
};

/// Fitted polynomial degree for the unipotent Jordan shear
/// x_1 -> x_1, x_j -> x_{j-1} x_j on F_m / gamma_{c+1}, m = 2..max_rank,
/// using the largest Karidi-mode degree over the generators.
std::vector<RankSweepRow> rank_sweep(int max_rank, int cls, long n_max);

}  // namespace nilentropy

#endif  // NILENTROPY_GROWTH_HPP
