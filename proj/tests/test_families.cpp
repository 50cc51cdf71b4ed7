#include <algorithm>
#include <vector>

#include "doctest.h"
#include "tuttekit/canonical.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/tutte_engine.hpp"

using namespace tk;

TEST_SUITE("families") {

TEST_CASE("ring-of-cliques sizes and regularity") {
  for (int r = 1; r <= 4; ++r)
    for (int m = 1; m <= 5; ++m) {
      Multigraph jn = clan_cyclic(r, m);
      CHECK(jn.n == r * m);
      CHECK(jn.num_edges() == m * r * (3 * r - 1) / 2);
      Multigraph id = clan_identity(r, m);
      CHECK(id.n == r * m);
      CHECK(id.num_edges() == m * r * (r + 1) / 2);
      if (m >= 3) {
        for (int d : jn.degrees()) CHECK(d == 3 * r - 1);
        for (int d : id.degrees()) CHECK(d == r + 1);
        CHECK(jn.connected());
        CHECK(id.connected());
      }
    }
}

TEST_CASE("width-1 rings degenerate to cycles and multi-cycles") {
  CHECK(canonical_key(clan_cyclic(1, 5)) == canonical_key(circuit(5)));
  Multigraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  CHECK(canonical_key(clan_cyclic(1, 2)) == canonical_key(doubled));
  Multigraph looped(1);
  looped.add_edge(0, 0);
  CHECK(canonical_key(clan_cyclic(1, 1)) == canonical_key(looped));
}

TEST_CASE("twisted closure produces the same edge multiset") {
  for (int r = 2; r <= 3; ++r)
    for (int m = 2; m <= 4; ++m) {
      Multigraph a = clan_cyclic(r, m);
      Multigraph b = clan_cyclic_twisted(r, m);
      CHECK(a.n == b.n);
      auto ea = a.edges, eb = b.edges;
      std::sort(ea.begin(), ea.end());
      std::sort(eb.begin(), eb.end());
      CHECK(ea == eb);
    }
  CHECK((tutte_dc(clan_cyclic(2, 2)).polynomial ==
         tutte_dc(clan_cyclic_twisted(2, 2)).polynomial));
}

TEST_CASE("strip sizes, free and periodic") {
  for (int lx = 2; lx <= 5; ++lx) {
    CHECK(sq_strip(2, lx, Bc::Free, Bc::Free).num_edges() == 3 * lx - 2);
    CHECK(tri_strip(2, lx, Bc::Free, Bc::Free).num_edges() == 4 * lx - 3);
    CHECK(sq_strip(2, lx, Bc::Free, Bc::Periodic).num_edges() == 3 * lx);
    CHECK(sq_strip(2, lx, Bc::Free, Bc::Twisted).num_edges() == 3 * lx);
    CHECK(sq_strip(3, lx, Bc::Periodic, Bc::Free).num_edges() == 3 * lx + 3 * (lx - 1));
  }
}

TEST_CASE("width-1 periodic strip is the cycle") {
  for (int m = 4; m <= 6; ++m)
    CHECK(canonical_key(sq_strip(1, m, Bc::Free, Bc::Periodic)) ==
          canonical_key(circuit(m)));
}

TEST_CASE("twisted ring is a genuinely different graph: prism vs moebius ladder") {
  // Width-2 ring of odd length: the periodic closure is the (non-bipartite)
  // pentagonal prism, the twisted closure is the bipartite Moebius ladder.
  Multigraph per = sq_strip(2, 5, Bc::Free, Bc::Periodic);
  Multigraph twi = sq_strip(2, 5, Bc::Free, Bc::Twisted);
  CHECK(per.num_edges() == twi.num_edges());
  CHECK(canonical_key(per) != canonical_key(twi));
}

TEST_CASE("family mini-language round trips") {
  FamilySpec a = parse_family("clan:jn:r=3,m=4");
  CHECK(a.kind == "clan-jn");
  CHECK(a.r == 3);
  CHECK(a.m == 4);
  CHECK(a.graph.n == 12);
  CHECK(canonical_key(a.graph) == canonical_key(clan_cyclic(3, 4)));

  FamilySpec b = parse_family("sq:Ly=2,Lx=5,BCy=F,BCx=P");
  CHECK(b.kind == "sq");
  CHECK(b.ly == 2);
  CHECK(b.lx == 5);
  CHECK(b.bcy == Bc::Free);
  CHECK(b.bcx == Bc::Periodic);
  CHECK(canonical_key(b.graph) == canonical_key(sq_strip(2, 5, Bc::Free, Bc::Periodic)));
  CHECK(b.canonical_text == "sq:Ly=2,Lx=5,BCy=F,BCx=P");

  CHECK(parse_family("circuit:m=7").graph.num_edges() == 7);
  CHECK(parse_family("tree:n=5").graph.num_edges() == 4);
  CHECK(parse_family("complete:r=4").graph.num_edges() == 6);
  FamilySpec c = parse_family("clan:id:r=2,m=6");
  CHECK(c.kind == "clan-id");
  CHECK(canonical_key(c.graph) == canonical_key(clan_identity(2, 6)));
  FamilySpec d = parse_family("tri:Ly=2,Lx=4,BCy=F,BCx=T");
  CHECK(d.bcx == Bc::Twisted);
}

TEST_CASE("family mini-language rejects malformed specs") {
  CHECK_THROWS_AS((void)parse_family("nonsense:z=1"), parse_error);
  CHECK_THROWS_AS((void)parse_family("clan:jn:m=4"), parse_error);
  CHECK_THROWS_AS((void)parse_family("sq:Ly=2,Lx=5,BCy=Q,BCx=P"), parse_error);
  CHECK_THROWS_AS((void)parse_family(""), parse_error);
}

TEST_CASE("degenerate parameters are guarded") {
  CHECK_THROWS_AS((void)circuit(2), guard_error);
  CHECK_THROWS_AS((void)clan_cyclic(0, 3), guard_error);
  CHECK_THROWS_AS((void)sq_strip(0, 3, Bc::Free, Bc::Free), guard_error);
}

}  // TEST_SUITE
