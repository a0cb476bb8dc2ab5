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

#include "fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace nilentropy::detail {

LeastSquares least_squares(const std::vector<double>& rows, int columns,
                           const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(y.size());
  if (columns <= 0 || rows.size() != y.size() * static_cast<std::size_t>(columns)) {
    throw std::invalid_argument("least_squares: shape mismatch");
  }
  Eigen::MatrixXd a(n, columns);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j < columns; ++j) a(i, j) = rows[static_cast<std::size_t>(i * columns + j)];
    b(i) = y[static_cast<std::size_t>(i)];
  }
  // Column scaling keeps the n and log n columns comparable.
  Eigen::VectorXd scale(columns);
  for (int j = 0; j < columns; ++j) {
    const double norm = a.col(j).norm();
    scale(j) = norm > 0 ? norm : 1.0;
    a.col(j) /= scale(j);
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = a * c - b;
  LeastSquares out;
  out.coefficients.resize(static_cast<std::size_t>(columns));
  for (int j = 0; j < columns; ++j) out.coefficients[static_cast<std::size_t>(j)] = c(j) / scale(j);
  out.residual = n > 0 ? std::sqrt(r.squaredNorm() / static_cast<double>(n)) : 0.0;
  return out;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: need two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit out;
  if (sxx == 0) throw std::invalid_argument("fit_line: constant abscissa");
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.correlation = syy > 1e-24 * sxx ? sxy / std::sqrt(sxx * syy) : 0.0;
  return out;
}

}  // namespace nilentropy::detail
