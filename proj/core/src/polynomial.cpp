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

#include "nilentropy/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nilentropy {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at_dyadic(const Integer& num, unsigned long shift) const {
  if (is_zero()) return 0;
  Integer acc = coefficients_.back();
  Integer term;
  const int d = degree();
  for (int i = d - 1; i >= 0; --i) {
    acc *= num;
    mpz_mul_2exp(term.get_mpz_t(), coefficients_[static_cast<std::size_t>(i)].get_mpz_t(),
                 shift * static_cast<unsigned long>(d - i));
    acc += term;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coefficients_.size(); ++i)
    out.push_back(coefficients_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(out));
}

namespace {

Integer content(const std::vector<Integer>& c) {
  Integer g = 0;
  for (const Integer& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// Divides by the (positive) content, keeping signs.
IntPolynomial remove_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const Integer g = content(p.coefficients());
  std::vector<Integer> out = p.coefficients();
  for (Integer& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

// |lc(b)|^(deg a - deg b + 1) * a mod b, so the sign of a is preserved.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const Integer lc = b.leading();
  const Integer alc = abs(lc);
  for (int d = a.degree(); d >= db; --d) {
    const Integer top = r[static_cast<std::size_t>(d)];
    for (Integer& v : r) v *= alc;
    // subtract (top * sign(lc)) x^(d-db) b
    const Integer f = lc > 0 ? top : Integer(-top);
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(d - db + i)] -= f * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial IntPolynomial::primitive_part() const {
  IntPolynomial p = remove_content(*this);
  if (!p.is_zero() && p.leading() < 0)
    for (Integer& v : p.coefficients_) v = -v;
  return p;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Integer> r = coefficients_;
  std::vector<Integer> q(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Integer& lc = divisor.leading();
  for (int d = degree(); d >= divisor.degree(); --d) {
    Integer& top = r[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    const Integer f = top / lc;
    q[static_cast<std::size_t>(d - divisor.degree())] = f;
    for (int i = 0; i <= divisor.degree(); ++i)
      r[static_cast<std::size_t>(d - divisor.degree() + i)] -=
          f * divisor.coefficients_[static_cast<std::size_t>(i)];
  }
  for (const Integer& v : r)
    if (v != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] -= b.coefficients_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial characteristic_polynomial(const IntegerMatrix& m) {
  const std::size_t n = m.dimension();
  // Berkowitz: coefficient vector, highest degree first.
  std::vector<Integer> v{Integer(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // size of the previous block
    // column of the Toeplitz matrix: 1, -a_rr, -R S, -R A S, ..., -R A^{k-1} S
    std::vector<Integer> col(r + 1);
    col[0] = 1;
    col[1] = -m(k, k);
    std::vector<Integer> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = m(i, k);
    for (std::size_t j = 2; j <= r; ++j) {
      Integer dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += m(k, i) * s[i];
      col[j] = -dot;
      std::vector<Integer> next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) next[i] += m(i, l) * s[l];
      s.swap(next);
    }
    std::vector<Integer> w(r + 1);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < v.size() && j <= i; ++j) w[i] += col[i - j] * v[j];
    v.swap(w);
  }
  std::reverse(v.begin(), v.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> xk(k + 1);
  xk[0] = -1;
  xk[k] = 1;
  IntPolynomial p(std::move(xk));
  for (unsigned d = 1; d < k; ++d)
    if (k % d == 0) p = *p.divide_exact(cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  cache.emplace(k, p);
  return p;
}

IntPolynomial polynomial_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = remove_content(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  const IntPolynomial g = polynomial_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  // p / g over Q: scale p so the division is exact over Z.
  IntPolynomial scaled = p;
  Integer factor;
  mpz_pow_ui(factor.get_mpz_t(), g.leading().get_mpz_t(),
             static_cast<unsigned long>(p.degree() - g.degree() + 1));
  std::vector<Integer> c = scaled.coefficients();
  for (Integer& v : c) v *= factor;
  auto q = IntPolynomial(std::move(c)).divide_exact(g);
  if (!q) throw std::logic_error("squarefree division failed");
  return q->primitive_part();
}

namespace {

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    const IntPolynomial r = pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(remove_content(IntPolynomial() - r));
  }
  return seq;
}

std::size_t variations(const std::vector<IntPolynomial>& seq, const Integer& num,
                       unsigned long shift) {
  std::size_t count = 0;
  int last = 0;
  for (const IntPolynomial& q : seq) {
    const int s = q.sign_at_dyadic(num, shift);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::size_t count_real_roots(const IntPolynomial& p, const Integer& a_num, const Integer& b_num,
                             unsigned long shift) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(p);
  const std::size_t va = variations(seq, a_num, shift);
  const std::size_t vb = variations(seq, b_num, shift);
  return va >= vb ? va - vb : 0;
}

std::optional<RootInterval> largest_real_root(const IntPolynomial& input, unsigned precision_bits) {
  const IntPolynomial p = squarefree_part(input);
  if (p.degree() <= 0) return std::nullopt;
  Integer bound = 0;
  for (const Integer& c : p.coefficients()) bound = std::max(bound, Integer(abs(c)));
  bound += 1;
  const auto seq = sturm_sequence(p);
  unsigned long shift = 0;
  Integer lo = -bound;
  Integer hi = bound;
  std::size_t v_hi = variations(seq, hi, shift);
  if (variations(seq, lo, shift) == v_hi) return std::nullopt;
  // Invariant: a root in (lo, hi], none above hi.
  while (true) {
    // width = (hi - lo) / 2^shift
    const Integer width = hi - lo;
    if (shift >= precision_bits && mpz_sizeinbase(width.get_mpz_t(), 2) <= shift - precision_bits)
      break;
    lo *= 2;
    hi *= 2;
    ++shift;
    const Integer mid = (lo + hi) / 2;
    const std::size_t v_mid = variations(seq, mid, shift);
    if (v_mid > v_hi) {
      lo = mid;
    } else {
      hi = mid;
      v_hi = v_mid;
    }
  }
  Integer den = 1;
  den <<= shift;
  RootInterval out{Rational(lo, den), Rational(hi, den)};
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

bool is_cyclotomic_product(const IntPolynomial& input) {
  if (input.is_zero()) return false;
  IntPolynomial p = input;
  const int n = p.degree();
  // phi(k) >= sqrt(k / 2), so only k <= 2 n^2 can contribute.
  const unsigned limit = static_cast<unsigned>(2 * n * n + 2);
  for (unsigned k = 1; k <= limit && p.degree() > 0; ++k) {
    const IntPolynomial phi = cyclotomic_polynomial(k);
    if (phi.degree() > p.degree()) continue;
    while (p.degree() >= phi.degree()) {
      auto q = p.divide_exact(phi);
      if (!q) break;
      p = std::move(*q);
    }
  }
  return p.degree() == 0 && abs(p.leading()) == 1;
}

}  // namespace nilentropy
