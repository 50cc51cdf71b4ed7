#pragma once
// Whole-graph polynomial computation.
//
// Three independent routes:
//   * subset-expansion oracles (exponential in |E|, the ground truth),
//   * deletion-contraction with isomorphism memoization (the workhorse),
//   * a frontier dynamic program over edge-ordered set partitions (fast on
//     long thin graphs; exact, used for strip/clan sequences and as a second
//     opinion on the partition function).
//
// T(G;x,y) = sum over spanning subgraphs A of (x-1)^{k(A)-k(G)} (y-1)^{c(A)},
// Z(G;q,v) = sum over A of q^{k(A)} v^{|A|};  Z = (x-1)^{k} (y-1)^{n} T under
// q = (x-1)(y-1), v = y-1, which at the coefficient level is the basis shift
// implemented by z_from_t / t_from_z.

#include <functional>

#include "tuttekit/multigraph.hpp"
#include "tuttekit/polynomial.hpp"

namespace tk {

struct TutteResult {
  BiPoly polynomial;  // variables (x, y)
  int n = 0, e = 0, k = 0;
  std::string source;  // "oracle" or "recursion"
};

struct PottsResult {
  BiPoly polynomial;  // variables (q, v)
  int n = 0, e = 0, k = 0;
};

// Subset expansion; guarded at |E| <= 20.  The parallel versions partition the
// subset range across threads and merge per-thread tallies deterministically.
TutteResult tutte_oracle(const Multigraph& g);
TutteResult tutte_oracle_serial(const Multigraph& g);
PottsResult potts_oracle(const Multigraph& g);
PottsResult potts_oracle_serial(const Multigraph& g);

// Deletion-contraction on the highest-index non-loop non-bridge edge, with
// loop/bridge peeling, per-component factoring, and memoization on canonical
// forms (skipped transparently when a graph outgrows the canonical-form guard).
TutteResult tutte_dc(const Multigraph& g);

// Coefficient-level basis conversion.  Inexactness (which cannot happen for
// polynomials that actually arise from graphs) is reported as guard_error.
PottsResult z_from_t(const BiPoly& t, int k, int n);
TutteResult t_from_z(const BiPoly& z, int k, int n);
PottsResult z_from_t(const TutteResult& t);
TutteResult t_from_z(const PottsResult& z);

// Frontier DP.  Exact; state count guarded.  The polynomial version returns
// the full bivariate partition function, the point version evaluates at
// rational (q0, v0) without building the polynomial.
PottsResult potts_frontier(const Multigraph& g);
Rat potts_frontier_value(const Multigraph& g, const Rat& q0, const Rat& v0);

// Number of acyclic orientations of the underlying graph (loop => 0),
// computed through the frontier DP at (q,v) = (-1,-1).
Int acyclic_count_frontier(const Multigraph& g);

}  // namespace tk
