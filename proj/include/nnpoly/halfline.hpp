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

#ifndef NNPOLY_HALFLINE_HPP
#define NNPOLY_HALFLINE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nnpoly/polynomial.hpp"
#include "nnpoly/rational.hpp"

namespace nnpoly {

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

inline PolyDivMod poly_divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.is_zero() || num.coefficients().size() < den.coefficients().size()) return {Poly(), num};
  std::vector<Rational> rem = num.coefficients();
  const auto& d = den.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  for (std::size_t i = rem.size(); i > dd; --i) {
    const std::size_t top = i - 1;
    if (rem[top] == 0) continue;
    const Rational f = rem[top] / d.back();
    quot[top - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[top - dd + j] -= f * d[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Scale by 1/|lc| — a positive factor, so all point signs are preserved.
inline Poly normalize_scale(const Poly& p) {
  if (p.is_zero()) return p;
  Rational s = p.leading_coefficient();
  if (s < 0) s = -s;
  return (Rational(1) / s) * p;
}

// Monic gcd (Euclidean); gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).remainder;
    a = std::move(b);
    b = normalize_scale(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading_coefficient()) * a;
}

// p / gcd(p, p'): same roots as p, all simple.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  const Poly g = poly_gcd(p, p.derivative());
  return poly_divmod(p, g).quotient;
}

// Sturm chain of q: s0 = q, s1 = q', s_{i+1} = -rem(s_{i-1}, s_i), each
// element rescaled by a positive factor to slow coefficient growth.
inline std::vector<Poly> sturm_chain(const Poly& q) {
  std::vector<Poly> chain;
  if (q.is_zero()) return chain;
  chain.push_back(q);
  Poly d = q.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(normalize_scale(-r));
  }
  return chain;
}

inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const Poly& s : chain) {
    const int sg = sign_of(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++variations;
    prev = sg;
  }
  return variations;
}

// Number of distinct roots of q in the open interval (a, b).
// Requires q(a) != 0 and q(b) != 0.
inline int sturm_count_open(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// B = 1 + max_k |a_k / a_m|.  Every root z satisfies |z| < B strictly,
// so B itself is never a root.
inline Rational cauchy_root_bound(const Poly& p) {
  if (p.is_zero() || *p.degree() == 0) return Rational(1);
  Rational maxratio(0);
  const auto& c = p.coefficients();
  Rational lead = c.back();
  if (lead < 0) lead = -lead;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational v = c[k];
    if (v < 0) v = -v;
    v /= lead;
    if (v > maxratio) maxratio = v;
  }
  return maxratio + 1;
}

// Open interval (lo, hi) with non-root endpoints containing exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

namespace detail {

// A split point strictly inside (lo, hi) where q does not vanish.  Scanning
// deg q + 1 equally spaced candidates always finds one, even when rational
// roots coincide with some candidates.  prefer_low picks the leftmost
// non-root candidate; otherwise the one nearest the midpoint.
inline Rational choose_nonroot_split(const Poly& q, const Rational& lo, const Rational& hi,
                                     bool prefer_low = false) {
  const std::size_t d = q.degree().value_or(0);
  const Rational width = hi - lo;
  const Rational mid = (lo + hi) / 2;
  std::optional<Rational> best;
  Rational best_dist(0);
  for (std::size_t j = 1; j <= d + 1; ++j) {
    const Rational c = lo + width * Rational(static_cast<int>(j), static_cast<int>(d + 2));
    if (q(c) == 0) continue;
    if (prefer_low) return c;
    Rational dist = c - mid;
    if (dist < 0) dist = -dist;
    if (!best || dist < best_dist) {
      best = c;
      best_dist = dist;
    }
  }
  if (!best) throw std::logic_error("no non-root split point found");
  return *best;
}

}  // namespace detail

// Isolates the roots of a squarefree q inside (0, bound) into disjoint open
// intervals with non-root rational endpoints, sorted ascending.
// Requires q(0) != 0 and q(bound) != 0.
inline std::vector<RootInterval> isolate_positive_roots(const Poly& q, const Rational& bound) {
  std::vector<RootInterval> out;
  if (q.is_zero() || *q.degree() == 0) return out;
  const std::vector<Poly> chain = sturm_chain(q);

  struct Task {
    Rational lo, hi;
    int count;
  };
  std::vector<Task> stack;
  const int total = sturm_count_open(chain, Rational(0), bound);
  if (total > 0) stack.push_back({Rational(0), bound, total});
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.count == 1) {
      out.push_back({t.lo, t.hi});
      continue;
    }
    const Rational c = detail::choose_nonroot_split(q, t.lo, t.hi);
    const int left = sturm_count_open(chain, t.lo, c);
    if (left > 0) stack.push_back({t.lo, c, left});
    if (t.count - left > 0) stack.push_back({c, t.hi, t.count - left});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

// Shrinks an isolating interval once, keeping exactly one root inside.
inline RootInterval shrink_interval(const Poly& q, const std::vector<Poly>& chain,
                                    const RootInterval& iv, bool prefer_low = false) {
  const Rational c = detail::choose_nonroot_split(q, iv.lo, iv.hi, prefer_low);
  if (sturm_count_open(chain, iv.lo, c) == 1) return {iv.lo, c};
  return {c, iv.hi};
}

struct HalflineCheck {
  bool nonnegative = true;
  std::optional<Rational> violation_point;  // x* >= 0 with p(x*) < 0
  std::optional<Rational> violation_value;  // p(x*)
};

// Decides p(x) >= 0 for all x in [0, inf).  Exact throughout: the squarefree
// part is isolated with Sturm sequences, and the sign of p is sampled at 0,
// at rational points between consecutive isolated roots, and beyond the
// Cauchy root bound.  Any negative sample is returned as a certificate.
inline HalflineCheck is_nonneg_on_halfline(const Poly& p) {
  if (p.is_zero()) return {};

  const auto fail_at = [&](const Rational& x) -> HalflineCheck { return {false, x, p(x)}; };

  const Rational at_zero = p(Rational(0));
  if (at_zero < 0) return fail_at(Rational(0));

  // Roots of p with multiplicities removed; strip a root at the origin so the
  // isolation interval (0, far) keeps non-root endpoints.
  Poly q = squarefree_part(p);
  if (q(Rational(0)) == 0) {
    std::vector<Rational> shifted(q.coefficients().begin() + 1, q.coefficients().end());
    q = Poly(std::move(shifted));
  }
  Rational far = cauchy_root_bound(q);
  if (far < 1) far = 1;

  if (p.leading_coefficient() < 0) return fail_at(far);

  std::vector<RootInterval> intervals = isolate_positive_roots(q, far);

  std::vector<Rational> samples;
  if (!intervals.empty()) {
    if (at_zero == 0) {
      // p vanishes at 0: the sign on (0, first root) needs its own sample,
      // so push the first interval's left endpoint strictly above 0.
      const std::vector<Poly> chain = sturm_chain(q);
      while (intervals.front().lo == 0)
        intervals.front() = shrink_interval(q, chain, intervals.front(), /*prefer_low=*/true);
    }
    if (intervals.front().lo > 0) samples.push_back(intervals.front().lo);
    for (const RootInterval& iv : intervals) samples.push_back(iv.hi);
  }
  samples.push_back(far);

  for (const Rational& x : samples)
    if (p(x) < 0) return fail_at(x);
  return {};
}

}  // namespace nnpoly

#endif  // NNPOLY_HALFLINE_HPP
