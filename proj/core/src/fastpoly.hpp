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

#ifndef NILENTROPY_SRC_FASTPOLY_HPP
#define NILENTROPY_SRC_FASTPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mpoly.hpp"

namespace nilentropy::detail {

/// Machine-word version of an EvalPoly for small arguments. Evaluation uses
/// 128-bit accumulation; callers keep arguments within +-2^31.
class CompiledPoly {
 public:
  /// nullopt when a coefficient or the denominator does not fit in int64.
  static std::optional<CompiledPoly> compile(const EvalPoly& p);

  __int128 evaluate(const std::int64_t* values) const {
    __int128 acc = 0;
    for (std::size_t t = 0; t + 1 < start_.size(); ++t) {
      __int128 term = coefficient_[t];
      for (std::uint32_t v = start_[t]; v < start_[t + 1]; ++v) term *= values[variables_[v]];
      acc += term;
    }
    return acc / denominator_;
  }

 private:
  std::int64_t denominator_ = 1;
  std::vector<std::int64_t> coefficient_;
  std::vector<std::uint32_t> start_{0};
  std::vector<std::uint16_t> variables_;
};

/// A polynomial map Z^k -> Z^n, one CompiledPoly per output coordinate.
class CompiledMap {
 public:
  static std::optional<CompiledMap> compile(const std::vector<EvalPoly>& coords);

  std::size_t size() const { return coords_.size(); }
  /// Returns false when an output leaves the int32 range.
  bool apply(const std::int64_t* in, std::int64_t* out) const {
    constexpr __int128 limit = (static_cast<__int128>(1) << 31) - 1;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      const __int128 v = coords_[k].evaluate(in);
      if (v > limit || v < -limit) return false;
      out[k] = static_cast<std::int64_t>(v);
    }
    return true;
  }

 private:
  std::vector<CompiledPoly> coords_;
};

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_FASTPOLY_HPP
