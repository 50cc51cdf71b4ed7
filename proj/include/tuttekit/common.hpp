#pragma once
// Shared numeric typedefs, error taxonomy, and small exact-arithmetic helpers.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tk {

using Int = mpz_class;
using Rat = mpq_class;
using Cx = std::complex<double>;

// Error taxonomy, mirrored by CLI exit codes: parse_error -> 2, guard_error -> 3.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& w) : std::runtime_error(w) {}
};

struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& w) : std::runtime_error(w) {}
};

// Root-finder non-convergence; carries the best iterate for diagnostics.
struct convergence_error : std::runtime_error {
  std::vector<Cx> best;
  double residual;
  convergence_error(const std::string& w, std::vector<Cx> b, double r)
      : std::runtime_error(w), best(std::move(b)), residual(r) {}
};

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  unsigned long k = e < 0 ? (unsigned long)(-e) : (unsigned long)e;
  Rat b = base, r = 1;
  while (k) {
    if (k & 1UL) r *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) r = Rat(1) / r;
  return r;
}

inline Int binom_int(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial_int(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Falling factorial a_(k) = a(a-1)...(a-k+1); rising a^(k) = a(a+1)...(a+k-1).
template <class T>
T falling(T a, int k) {
  T r(1);
  for (int s = 0; s < k; ++s) r *= (a - s);
  return r;
}

template <class T>
T rising(T a, int k) {
  T r(1);
  for (int s = 0; s < k; ++s) r *= (a + s);
  return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

// Natural log of a positive big integer (growth-rate checks on huge counts).
inline double log_int(const Int& v) {
  long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + double(exp2) * std::log(2.0);
}

// Accepts "3", "-7/2", and plain decimals like "-0.9".
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

}  // namespace tk
