#pragma once
// Spanning-tree counts: exact Kirchhoff determinants (fraction-free), closed
// product formulas for the two clan linkages, and per-site growth rates with
// the classical degree-based upper-bound ratios.

#include <vector>

#include "tuttekit/multigraph.hpp"

namespace tk {

// Any cofactor of the Laplacian, computed by Bareiss elimination over the
// integers.  Loops never contribute.  Disconnected graphs give 0 by
// convention (the determinant vanishes).
Int kirchhoff_count(const Multigraph& g);

// All-to-all ring: N = 3^{(r-1)m} r^{rm-2} m  (r = 1 degenerates to m).
// Valid for every m >= 1 with the multigraph reading of short rings.
Int nst_clan_jn(int r, int m);

// Vertex-to-vertex ring: closed product for m >= 3 (split by parity of m),
// delegated to Kirchhoff for the degenerate short rings m < 3.
Int nst_clan_id(int r, int m);

struct GrowthReport {
  int r;
  double ez;        // exp(z) = lim N^{1/(rm)}
  double degree;    // the regular degree Delta
  double bound_deg; // R_1 = ez / Delta
  double bound_c;   // R_2 = ez / C_Delta, C_D = (D-1)^{D-1} / [D(D-2)]^{D/2-1}
};

// family: "jn" or "id"; r >= 2 (degree bounds need Delta >= 3).
GrowthReport growth_and_bounds(const std::string& family, int r);

}  // namespace tk
