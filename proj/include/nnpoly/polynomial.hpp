/*
   Copyright 2026 The nnpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NNPOLY_POLYNOMIAL_HPP
#define NNPOLY_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nnpoly/rational.hpp"

namespace nnpoly {

// Dense univariate polynomial over a commutative ring T, coefficient index =
// exponent.  The zero polynomial is the empty coefficient vector; every
// operation trims trailing zeros so the leading coefficient is nonzero.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(std::size_t k, T c = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is "none".
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  const std::vector<T>& coefficients() const { return coeffs_; }

  // a_k, zero beyond the stored range.
  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  const T& leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  bool all_coefficients_nonnegative() const {
    for (const T& c : coeffs_)
      if (c < T(0)) return false;
    return true;
  }

  // Horner evaluation.
  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  // k-th formal derivative; k = 0 is the identity, k > deg gives zero.
  Polynomial derivative(std::size_t k = 1) const {
    std::vector<T> cur = coeffs_;
    for (std::size_t round = 0; round < k; ++round) {
      if (cur.size() <= 1) return Polynomial();
      std::vector<T> next(cur.size() - 1);
      for (std::size_t i = 1; i < cur.size(); ++i) next[i - 1] = cur[i] * T(static_cast<int>(i));
      cur = std::move(next);
    }
    return Polynomial(std::move(cur));
  }

  // p(q(x)) via Horner over polynomial arithmetic.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  // Exact convolution product.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> out = a.coeffs_;
    for (T& c : out) c = s * c;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Poly = Polynomial<Rational>;

// Exponent set I_(m,n,r) = { 0 <= k <= m : k mod n == r }.
struct ResidueIndexSet {
  std::size_t degree_bound = 0;  // m
  std::size_t modulus = 1;       // n
  std::size_t residue = 0;       // r
  std::vector<std::size_t> members;
};

inline ResidueIndexSet residue_index_set(std::size_t m, std::size_t n, std::size_t r) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  if (r >= n) throw std::domain_error("residue out of range");
  ResidueIndexSet s{m, n, r, {}};
  for (std::size_t k = r; k <= m; k += n) s.members.push_back(k);
  return s;
}

// The r mod n-part of p: the sub-polynomial supported on exponents == r (mod n).
template <typename T>
Polynomial<T> residue_part(const Polynomial<T>& p, std::size_t n, std::size_t r) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  if (r >= n) throw std::domain_error("residue out of range");
  if (p.is_zero()) return {};
  std::vector<T> out(p.coefficients().size(), T(0));
  for (std::size_t k = r; k < out.size(); k += n) out[k] = p.coefficient(k);
  return Polynomial<T>(std::move(out));
}

// All n parts; index r holds the r mod n-part.  Their exact sum is p.
template <typename T>
struct ResidueDecomposition {
  std::size_t modulus = 1;
  std::vector<Polynomial<T>> parts;
};

template <typename T>
ResidueDecomposition<T> residue_decompose(const Polynomial<T>& p, std::size_t n) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  ResidueDecomposition<T> d{n, {}};
  d.parts.reserve(n);
  for (std::size_t r = 0; r < n; ++r) d.parts.push_back(residue_part(p, n, r));
  return d;
}

// Horner evaluation at a complex point, coefficients converted to double.
inline std::complex<double> evaluate_complex(const Poly& p, std::complex<double> x) {
  std::complex<double> acc(0.0, 0.0);
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + to_double(c[i]);
  return acc;
}

// Roots-of-unity averaging form of the r mod n-part, evaluated numerically:
//   (1/n) sum_k w^{-kr} p(w^k x),  w = exp(2*pi*i/n).
// Float-only validation oracle; the exact construction is residue_part.
inline std::complex<double> roots_of_unity_part(const Poly& p, std::size_t n, std::size_t r,
                                                std::complex<double> x) {
  if (n == 0) throw std::domain_error("modulus must be positive");
  if (r >= n) throw std::domain_error("residue out of range");
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    const std::complex<double> wk = std::polar(1.0, angle);
    const std::complex<double> w_mkr =
        std::polar(1.0, -angle * static_cast<double>(r));
    acc += w_mkr * evaluate_complex(p, wk * x);
  }
  return acc / static_cast<double>(n);
}

}  // namespace nnpoly

#endif  // NNPOLY_POLYNOMIAL_HPP
