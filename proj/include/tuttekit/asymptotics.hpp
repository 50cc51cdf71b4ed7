#pragma once
// Growth constants for acyclic-orientation counts on lattice strips and rings:
// exact minimal linear-recurrence fitting of integer sequences, dominant-root
// extraction, a catalog of closed-form values for cross-checking, and exact
// verification of the known strip counting formulas.

#include <optional>
#include <string>
#include <vector>

#include "tuttekit/families.hpp"
#include "tuttekit/polynomial.hpp"

namespace tk {

struct RecurrenceFit {
  int order = 0;                  // minimal: order-1 provably fails on the data
  std::vector<Rat> coeffs;        // s_n = sum_i coeffs[i] s_{n-1-i}
  UniPoly charpoly;               // xi^k - sum coeffs[i] xi^{k-1-i}
  std::vector<Cx> roots;          // numeric characteristic roots
  Cx dominant;                    // largest-modulus root...
  bool dominant_tie = false;      // ...unless two moduli agree to 1e-9 relative
};

// Exact fit over the rationals; needs |seq| >= 2*max_order + 2 so at least
// order+2 equations witness each candidate order.  Underdetermined-but-
// consistent systems are allowed (free coefficients set to zero); every term
// of the sequence is re-verified against the fitted recurrence.  If nothing
// fits by max_order, the report below says so explicitly.
struct FitOutcome {
  bool fitted = false;
  RecurrenceFit fit;       // valid when fitted
  std::string message;     // "order exceeded" diagnostics when not
};
FitOutcome fit_recurrence(const std::vector<Rat>& seq, int max_order);

struct AlphaValue {
  std::string lattice;  // "sq" or "tri"
  int ly = 0;
  Bc bcy = Bc::Free;
  double alpha = 0;
  std::string route;  // "fit", "closed", "stored", "anchor"
};

// Recomputes alpha(Ly) from scratch: exact acyclic-orientation counts of
// strips of growing length (free longitudinal ends), minimal recurrence fit,
// dominant root, alpha = root^{1/Ly}.  M = sequence length (m = 1..M).
AlphaValue alpha_strip(const std::string& lattice, int ly, Bc bcy, int M);

// Closed-form / stored catalog (guard_error on uncataloged parameters,
// listing what is supported).
AlphaValue alpha_closed_form(const std::string& lattice, int ly, Bc bcy);

// Every catalog row, ordered for table output.
std::vector<AlphaValue> alpha_catalog(const std::string& lattice);

// Exact verification of a counting formula against the orientation counts
// computed from the graphs.  Supported keys: sq2FF, sq2FP, sq2FT, sq3FP,
// sq3FT, sq3PF, tri2FF, tri2FP, tri2FT, tri3FP, tri3PF, clan (with r).
struct FormulaCheck {
  std::string key;
  int m_lo = 1, m_hi = 6;
  std::vector<Int> from_formula;
  std::vector<Int> from_graphs;
  bool pass = false;
};
FormulaCheck acyclic_formula_check(const std::string& key, int r = 0, int m_hi = 6);
std::vector<std::string> acyclic_formula_keys();

// a(m) for the strip with free longitudinal boundary and m+1 columns
// (m = number of longitudinal links), or the closed ring with m columns.
Int strip_acyclic_count(const std::string& lattice, int ly, Bc bcy, Bc bcx, int m);

}  // namespace tk
