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

#ifndef NILENTROPY_INTEGER_HPP
#define NILENTROPY_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilentropy {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for computation errors (as opposed to precondition violations,
/// which throw std::invalid_argument / std::out_of_range).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or closure loop exceeds its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_int64(const Integer& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer exceeds int64 range");
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline Integer from_int64(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

/// Natural logarithm of |v| for arbitrarily large v; -inf for zero.
double log_abs(const Integer& v);

/// Binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
Integer binomial(const Integer& n, unsigned k);

}  // namespace nilentropy

#endif  // NILENTROPY_INTEGER_HPP
