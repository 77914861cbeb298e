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

#ifndef NNPOLY_MATRIX_HPP
#define NNPOLY_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nnpoly/polynomial.hpp"
#include "nnpoly/rational.hpp"

namespace nnpoly {

// Dense square matrix, row-major.  Storage is 0-based; serialized forms and
// certificate entry locations are reported 1-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}
  Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) throw std::invalid_argument("entry count does not match order");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t order() const { return n_; }

  T& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_nonnegative() const {
    for (const T& x : a_)
      if (x < T(0)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_order(b);
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same_order(b);
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) m.at(i, j) += aik * b.at(k, j);
      }
    return m;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix m(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  void check_same_order(const Matrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("matrix order mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> a_;
};

using MatrixQ = Matrix<Rational>;
using MatrixF = Matrix<double>;

// p(A) by Horner's scheme; the zero polynomial gives the zero matrix.
template <typename T>
Matrix<T> mat_poly_eval(const Polynomial<T>& p, const Matrix<T>& a) {
  const std::size_t n = a.order();
  Matrix<T> acc(n);
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c[i];
  }
  return acc;
}

// Circulant with reference vector v: a_ij = v_{(j-i) mod n + 1} (1-based).
struct CirculantSpec {
  std::vector<Rational> v;
};

template <typename T>
Matrix<T> circulant(const std::vector<T>& v) {
  const std::size_t n = v.size();
  if (n == 0) throw std::domain_error("circulant needs a nonempty reference vector");
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[(j + n - i) % n];
  return m;
}

inline MatrixQ circulant_realize(const CirculantSpec& spec) { return circulant(spec.v); }

// The basic cyclic shift C_n: circulant with reference vector e_2 (n = 1: [1]).
template <typename T>
Matrix<T> cyclic_shift(std::size_t n) {
  std::vector<T> v(n, T(0));
  v[n > 1 ? 1 : 0] = T(1);
  return circulant(v);
}

// q(x) = sum v_{k+1} x^k, the polynomial with q(C_n) = circ(v).
template <typename T>
Polynomial<T> circulant_poly_identity(const std::vector<T>& v) {
  if (v.empty()) throw std::domain_error("circulant needs a nonempty reference vector");
  return Polynomial<T>(std::vector<T>(v));
}

// Jordan block J_n(lambda): lambda on the diagonal, ones on the superdiagonal.
struct JordanSpec {
  std::size_t n = 1;
  Rational lambda;
};

template <typename T>
Matrix<T> jordan_block(std::size_t n, const T& lambda) {
  if (n == 0) throw std::domain_error("Jordan block needs order >= 1");
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = lambda;
    if (i + 1 < n) m.at(i, i + 1) = T(1);
  }
  return m;
}

inline MatrixQ jordan_realize(const JordanSpec& spec) { return jordan_block(spec.n, spec.lambda); }

// p(tC_n) = circ(p_(0,n)(t), ..., p_(n-1,n)(t)), computed from the residue
// parts and scalar evaluation, never via dense matrix powers.
template <typename T>
Matrix<T> eval_on_scaled_circulant(const Polynomial<T>& p, std::size_t n, const T& t) {
  std::vector<T> ref(n);
  for (std::size_t r = 0; r < n; ++r) ref[r] = residue_part(p, n, r)(t);
  return circulant(ref);
}

// p(J_n(t)): upper-triangular Toeplitz with (i, i+k) entry p^{(k)}(t)/k!,
// computed from formal derivatives.
template <typename T>
Matrix<T> eval_on_jordan(const Polynomial<T>& p, std::size_t n, const T& t) {
  if (n == 0) throw std::domain_error("Jordan block needs order >= 1");
  std::vector<T> band(n);  // p^{(k)}(t)/k!
  Polynomial<T> d = p;
  T factorial(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      d = d.derivative();
      factorial *= T(static_cast<int>(k));
    }
    band[k] = d(t) / factorial;
  }
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.at(i, j) = band[j - i];
  return m;
}

// diag(A, 0): A in the leading block of an order n+1 matrix, zeros elsewhere.
// Note p(diag(A, 0)) = diag(p(A), p(0)); the corner entry is a_0, not 0.
template <typename T>
Matrix<T> embed_diag(const Matrix<T>& a) {
  Matrix<T> m(a.order() + 1);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) m.at(i, j) = a.at(i, j);
  return m;
}

}  // namespace nnpoly

#endif  // NNPOLY_MATRIX_HPP
