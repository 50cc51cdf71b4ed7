#pragma once
// Closed forms for the ring-of-cliques families.  The m-dependence of every
// invariant here is a finite sum  sum_d mu_d(q) * sum_j lambda_{d,j}^m  whose
// amplitudes mu_d depend only on q = (x-1)(y-1) and whose lambda-blocks are
// roots of fixed polynomials in (x, y); everything is evaluated through Newton
// power sums of those blocks, so no root is ever extracted symbolically.
//
// The number of lambdas per block is the "structure count" n_T(r, d), with
// total N_r = (r+3) 2^{r-2}; lambda-blocks are explicit for r <= 3, structure
// counts and the chromatic specialization for all r.

#include <vector>

#include "tuttekit/polynomial.hpp"

namespace tk {

// mu_0 = 1 and mu_d = C(q, d) - C(q, d-1) for d >= 1, as a polynomial / value.
UniPoly mu_poly(int d);                 // variable "q"
Rat mu_coeff(int d, const Rat& q);

struct StructureCounts {
  int r;
  std::vector<Int> n_by_level;  // n_T(r, d) for d = 0..r
  Int total;                    // (r+3) 2^{r-2}
};
// Computed two ways (closed form and the Pascal-style recursion) and
// cross-checked internally.
StructureCounts structure_counts(int r);

// One lambda-block: the d-level, its characteristic polynomials in (x, y)
// (several irreducible parts per level), all monic.
struct ClanBlock {
  int d;
  std::vector<std::vector<BiPoly>> parts;  // each: monic coefficient list e0=1,e1,...
};
// The full two-variable transfer spectrum of the all-to-all-linked ring.
// Explicit for r in {1, 2, 3}; guard_error otherwise.
std::vector<ClanBlock> clan_spectrum(int r);

// Transverse chromatic lambdas, any r >= 1:
//   lambda_{P,r,d}(q) = (-1)^d r_(d) (q - r - d)_(r-d),  d = 0..r.
UniPoly clan_chromatic_lambda(int r, int d);  // variable "q"

// ---- assembled invariants of the all-to-all ring ("jn" linkage) ----

// Exact chromatic polynomial  P = sum_d mu_d lambda_{P,r,d}^m  (any r).
UniPoly chromatic_clan_poly(int r, int m);
Rat chromatic_clan_closed(int r, int m, const Rat& q);

// Exact Tutte evaluation for r in {1,2,3}.  The 1/(x-1) prefactor is removed
// by building the numerator as a univariate polynomial in x (y held fixed)
// and dividing exactly, so x = 1 needs no limit.
Rat tutte_clan_closed(int r, int m, const Rat& x, const Rat& y);
// The whole sequence m = 1..M at one point (shares the Newton tables).
std::vector<Rat> tutte_clan_sequence(int r, int M, const Rat& x, const Rat& y);

// Exact flow polynomial of the r = 2 ring (uses the explicit flow lambdas).
UniPoly flow_clan_poly(int m);
Rat flow_clan_closed(int r, int m, const Rat& q);  // r must be 2

// Exact all-terminal reliability of the r = 2 ring.
UniPoly reliability_clan_poly(int m);
Rat reliability_clan_closed(int r, int m, const Rat& p);  // r must be 2

// Acyclic orientations: a = [(2r)_(r)]^m + 2 sum_{d>=1} (-1)^d [r_(d)(2r)_(r-d)]^m,
// and the per-site growth constant alpha = [(2r)_(r)]^{1/r}.
Int acyclic_clan(int r, int m);
double alpha_clan(int r);

// ---- numeric lambda values (locus machinery) ----

// Per-level lists of transfer eigenvalues at a complex point; r in {1,2,3}.
std::vector<std::vector<Cx>> clan_lambda_values(int r, const Cx& x, const Cx& y);
// Chromatic lambdas at complex q, any r: d = 0..r.
std::vector<Cx> clan_chromatic_lambda_values(int r, const Cx& q);
// Explicit flow lambdas of the r = 2 ring at complex q, fixed order:
// [d0 +, d0 -, d1 +, d1 -, d2]; the +/- branches use the principal square root.
std::vector<Cx> flow_lambda_values_r2(const Cx& q);
// Reliability transfer values [alpha_1, alpha_2, alpha_3] at complex p
// (alpha_{1,2} = (s +- sqrt(R))/2, alpha_3 = 2(1-p)^3).
std::vector<Cx> reliability_alpha_values(const Cx& p);
// The discriminant R(p) whose roots are the reliability arc endpoints.
UniPoly reliability_discriminant();

}  // namespace tk
