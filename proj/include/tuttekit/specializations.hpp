#pragma once
// One-variable specializations of the two-variable polynomial:
//   chromatic   P(G,q) = (-1)^{n-k} q^k T(1-q, 0)       (zero if G has a loop)
//   flow        F(G,q) = (-1)^{|E|-n+k} T(0, 1-q)        (zero if G has a bridge)
//   reliability R(G,p) = p^{n-1} (1-p)^{|E|-n+1} T(1, 1/(1-p))   (G connected)
// plus the classical point evaluations (spanning trees/forests, connected
// spanning subgraphs, acyclic orientations), and independent brute-force
// oracles for each.

#include "tuttekit/multigraph.hpp"
#include "tuttekit/polynomial.hpp"
#include "tuttekit/tutte_engine.hpp"

namespace tk {

UniPoly chromatic(const Multigraph& g);                  // variable "q"
UniPoly chromatic_from_tutte(const TutteResult& t);
UniPoly flow_poly(const Multigraph& g);                  // variable "q"
UniPoly flow_from_tutte(const TutteResult& t);
UniPoly reliability(const Multigraph& g);                // variable "p"; connected only
UniPoly reliability_from_tutte(const TutteResult& t);

struct Valuations {
  Int n_st;    // spanning trees            T(1,1)  (maximal forests if disconnected)
  Int n_sf;    // spanning forests          T(2,1)
  Int n_cssg;  // connected spanning subgraphs (per component)  T(1,2)
  Int n_ssg;   // all spanning subgraphs    2^|E|
  Int a;       // acyclic orientations      T(2,0) = (-1)^n P(-1)
  Int a_s;     // (-1)^n P(-s) for the requested integer s
  long s = 1;
};

Valuations valuations(const Multigraph& g, long s = 1);

// Brute-force oracles (guards in parentheses).  All are deterministic; the
// parallel ones split a fixed enumeration range and merge in thread order.
Int chromatic_oracle(const Multigraph& g, int q0);         // n <= 10, q0 <= 6
Int chromatic_oracle_serial(const Multigraph& g, int q0);
// Counts nowhere-zero Z_q flows; the orientation gives each edge a reference
// direction, flipping any subset of directions leaves the count unchanged.
Int flow_oracle(const Multigraph& g, int q0);              // |E| <= 14, q0 <= 5
Int flow_oracle_oriented(const Multigraph& g, int q0, unsigned flip_mask);
Rat reliability_oracle(const Multigraph& g, const Rat& p0);  // |E| <= 16
Rat reliability_oracle_serial(const Multigraph& g, const Rat& p0);
Int acyclic_oracle(const Multigraph& g);                   // |E| <= 16
Int acyclic_oracle_serial(const Multigraph& g);

}  // namespace tk
