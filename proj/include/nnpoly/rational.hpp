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

#ifndef NNPOLY_RATIONAL_HPP
#define NNPOLY_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nnpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign_of(const Rational& q) { return q.sign(); }

// "num/den" with the "/den" part optional.  Whitespace around either
// component is accepted; the denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = t.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(t)));
    Int num((std::string(trim(t.substr(0, slash)))));
    Int den((std::string(trim(t.substr(slash + 1)))));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "': " + e.what());
  }
}

// Canonical serialization, always with an explicit denominator.
inline std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Truncate a float toward zero onto the grid with denominator `den`.
// Used when promoting numerically found matrices to exact certificates.
inline Rational rationalize(double x, const Int& den = Int(1000000)) {
  if (!std::isfinite(x)) throw std::domain_error("cannot rationalize a non-finite value");
  const double scaled = std::trunc(x * den.convert_to<double>());
  if (std::abs(scaled) > 9.0e18) throw std::domain_error("value too large to rationalize");
  return Rational(Int(static_cast<long long>(scaled)), den);
}

}  // namespace nnpoly

#endif  // NNPOLY_RATIONAL_HPP
