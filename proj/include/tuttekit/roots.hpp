#pragma once
// Numeric root extraction for exact polynomials: exact stripping of zero and
// small integer roots first, then simultaneous (Aberth-Ehrlich) iteration on
// what remains, with a Newton polish.  Deterministic: fixed initial
// configuration, no randomness.

#include <vector>

#include "tuttekit/polynomial.hpp"

namespace tk {

struct RootOptions {
  int max_iters = 500;
  // Convergence: |p(z)| <= tol * sum_i |c_i| |z|^i  (backward-error style).
  double tol = 1e-13;
};

// Roots of a complex-coefficient polynomial, multiplicities repeated.
// Throws convergence_error (with best iterate) if not converged in max_iters.
std::vector<Cx> aberth_roots(const std::vector<Cx>& coeffs, const RootOptions& opt = {});

struct ExactRoot {
  Rat value;
  int multiplicity;
};

struct RootSet {
  std::vector<ExactRoot> exact;  // stripped exactly (zero and small integer roots)
  std::vector<Cx> numeric;       // the rest, multiplicities repeated
  std::vector<Cx> all() const;   // exact (as complex) + numeric, in that order
};

// Full pipeline on an exact polynomial.  degree >= 1 required.
RootSet poly_roots(const UniPoly& p, const RootOptions& opt = {});

}  // namespace tk
