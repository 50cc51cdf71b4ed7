#pragma once
// Power sums of polynomial roots via the Newton identities, templated over the
// coefficient ring (exact rationals, univariate polynomials, complex doubles).
// Working from coefficients keeps everything exact: no root is ever extracted.

#include <vector>

#include "tuttekit/polynomial.hpp"

namespace tk {

// e holds monic coefficients e[0] = 1, e[1], ..., e[d] of
//   p(t) = t^d + e[1] t^(d-1) + ... + e[d].
// Returns s[0..M] with s[m] = sum of m-th powers of the d roots (s[0] = d).
// Newton: s_m + e_1 s_{m-1} + ... + e_{m-1} s_1 + m e_m = 0       (m <= d)
//         s_m + e_1 s_{m-1} + ... + e_d s_{m-d} = 0               (m > d)
template <class R, class FromInt>
std::vector<R> power_sums_monic(const std::vector<R>& e, int M, FromInt from_int) {
  int d = (int)e.size() - 1;
  if (d < 0) throw guard_error("power_sums_monic: empty coefficient list");
  std::vector<R> s;
  s.reserve(M + 1);
  s.push_back(from_int(d));
  for (int m = 1; m <= M; ++m) {
    R acc = from_int(0);
    int top = std::min(m - 1, d);
    for (int i = 1; i <= top; ++i) acc = acc + e[i] * s[m - i];
    if (m <= d) acc = acc + e[m] * from_int(m);
    s.push_back(from_int(0) - acc);
  }
  return s;
}

// Exact power sum of the roots of an arbitrary nonzero rational polynomial
// (normalized monic internally).  m >= 0.
Rat power_sums(const UniPoly& p, int m);

// All power sums 0..M at once (one Newton pass).
std::vector<Rat> power_sums_upto(const UniPoly& p, int M);

}  // namespace tk
