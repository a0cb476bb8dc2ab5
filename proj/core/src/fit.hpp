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

#ifndef NILENTROPY_SRC_FIT_HPP
#define NILENTROPY_SRC_FIT_HPP

#include <vector>

namespace nilentropy::detail {

struct LeastSquares {
  std::vector<double> coefficients;
  /// Root-mean-square residual.
  double residual = 0.0;
};

/// Least-squares solution of rows * c ~ y. rows is row-major with `columns`
/// entries per row.
LeastSquares least_squares(const std::vector<double>& rows, int columns,
                           const std::vector<double>& y);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double correlation = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_FIT_HPP
