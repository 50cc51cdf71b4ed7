#pragma once
// Recursive graph families: ring-coupled clique blocks ("clan" graphs with
// all-to-all or identity linkage), square/triangular lattice strips with
// free/periodic/twisted boundaries, and the small standards (cycle, path,
// complete graph).  Degenerate lengths are taken literally: a length-1 ring
// self-couples (loops and doubled pairs), a length-2 ring doubles its
// coupling layer.  Edge orderings keep the frontier DP narrow.

#include <string>

#include "tuttekit/multigraph.hpp"

namespace tk {

// m blocks of K_r in a ring; consecutive blocks joined by all r^2 cross pairs.
// |V| = m r, |E| = m r (3r-1)/2, (3r-1)-regular.
Multigraph clan_cyclic(int r, int m);

// Variant used to exercise twist invariance: the closing layer of cross pairs
// is generated with one block's vertex order reversed.  Produces the same
// edge multiset as clan_cyclic (the linkage is complete bipartite), possibly
// in a different edge order.
Multigraph clan_cyclic_twisted(int r, int m);

// m blocks of K_r in a ring; consecutive blocks joined vertex-to-vertex.
// |V| = m r, |E| = m r (r+1)/2, (r+1)-regular.
Multigraph clan_identity(int r, int m);

enum class Bc { Free, Periodic, Twisted };

// Column-major strips, vertex (column j, row i) -> j*Ly + i.  The transverse
// boundary admits Free/Periodic, the longitudinal one Free/Periodic/Twisted
// (twist = row reversal on the wrap).  Duplicate edges produced by small
// periodic dimensions are retained.
Multigraph sq_strip(int ly, int lx, Bc bcy, Bc bcx);
// Adds the (j, i+1)-(j+1, i) diagonal in every square face (and the wrap face
// when the transverse boundary is periodic).
Multigraph tri_strip(int ly, int lx, Bc bcy, Bc bcx);

Multigraph circuit(int m);   // m >= 3
Multigraph tree_path(int n); // path on n vertices
Multigraph complete(int r);

// Mini-language: "clan:jn:r=3,m=4" | "clan:id:r=2,m=6"
//   | "sq:Ly=2,Lx=5,BCy=F,BCx=P" | "tri:Ly=2,Lx=4,BCy=F,BCx=T"
//   | "circuit:m=7" | "tree:n=5" | "complete:r=4".
struct FamilySpec {
  std::string kind;  // "clan-jn", "clan-id", "sq", "tri", "circuit", "tree", "complete"
  int r = 0, m = 0, ly = 0, lx = 0, n = 0;
  Bc bcy = Bc::Free, bcx = Bc::Free;
  Multigraph graph;
  std::string canonical_text;  // normalized spelling of the spec
};

FamilySpec parse_family(const std::string& text);

}  // namespace tk
