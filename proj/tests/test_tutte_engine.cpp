#include <random>
#include <vector>

#include "doctest.h"
#include "tuttekit/families.hpp"
#include "tuttekit/specializations.hpp"
#include "tuttekit/tutte_engine.hpp"

using namespace tk;

namespace {

// Small random multigraphs with loops and parallel edges allowed.
std::vector<Multigraph> small_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<Multigraph> out;
  while ((int)out.size() < count) {
    int n = 2 + (int)(rng() % 5);
    int e = 1 + (int)(rng() % 8);
    Multigraph g(n);
    for (int k = 0; k < e; ++k) {
      int u = (int)(rng() % n), v = (int)(rng() % n);
      g.add_edge(u, v);  // u == v makes a loop
    }
    out.push_back(std::move(g));
  }
  return out;
}

BiPoly swap_xy(const BiPoly& p) {
  BiPoly r(p.var_x(), p.var_y());
  for (const auto& [k, c] : p.sorted_terms()) r.add_term(k.second, k.first, c);
  return r;
}

Multigraph cycle_graph(int n) {  // valid from n = 2 (doubled edge)
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph dipole(int n) {  // two vertices joined by n parallel edges
  Multigraph g(2);
  for (int i = 0; i < n; ++i) g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_SUITE("tutte_engine") {

TEST_CASE("four-cycle and K4 golden polynomials") {
  BiPoly c4;
  c4.add_term(3, 0, Int(1));
  c4.add_term(2, 0, Int(1));
  c4.add_term(1, 0, Int(1));
  c4.add_term(0, 1, Int(1));
  CHECK((tutte_oracle(circuit(4)).polynomial == c4));
  CHECK((tutte_dc(circuit(4)).polynomial == c4));
  CHECK(tutte_dc(circuit(4)).polynomial.str() == "x^3 + x^2 + x + y");

  BiPoly k4;
  k4.add_term(3, 0, Int(1));
  k4.add_term(2, 0, Int(3));
  k4.add_term(1, 0, Int(2));
  k4.add_term(1, 1, Int(4));
  k4.add_term(0, 1, Int(2));
  k4.add_term(0, 2, Int(3));
  k4.add_term(0, 3, Int(1));
  CHECK((tutte_oracle(complete(4)).polynomial == k4));
  CHECK((tutte_dc(complete(4)).polynomial == k4));
  CHECK(tutte_dc(complete(4)).source == "recursion");
  CHECK(tutte_oracle(complete(4)).source == "oracle");
}

TEST_CASE("single loop gives y, single bridge gives x") {
  Multigraph loop(1);
  loop.add_edge(0, 0);
  CHECK((tutte_dc(loop).polynomial == BiPoly::monomial(0, 1, Int(1))));
  CHECK((tutte_dc(tree_path(2)).polynomial == BiPoly::monomial(1, 0, Int(1))));
  Multigraph both(2);
  both.add_edge(0, 1);
  both.add_edge(1, 1);
  CHECK((tutte_dc(both).polynomial == BiPoly::monomial(1, 1, Int(1))));
}

TEST_CASE("cycle / parallel-class duality swaps the variables") {
  for (int n = 2; n <= 8; ++n) {
    BiPoly cyc = tutte_oracle(cycle_graph(n)).polynomial;
    BiPoly par = tutte_oracle(dipole(n)).polynomial;
    CHECK((cyc == swap_xy(par)));
  }
}

TEST_CASE("multiplicativity over components and one-point joins") {
  Multigraph two_tri(6);
  for (int s : {0, 3})
    for (int i = 0; i < 3; ++i) two_tri.add_edge(s + i, s + (i + 1) % 3);
  BiPoly t3 = tutte_oracle(circuit(3)).polynomial;
  CHECK((tutte_oracle(two_tri).polynomial == t3 * t3));

  Multigraph bowtie(5);  // two triangles sharing vertex 0
  bowtie.add_edge(0, 1);
  bowtie.add_edge(1, 2);
  bowtie.add_edge(0, 2);
  bowtie.add_edge(0, 3);
  bowtie.add_edge(3, 4);
  bowtie.add_edge(0, 4);
  CHECK((tutte_dc(bowtie).polynomial == t3 * t3));
}

TEST_CASE("recursion equals oracle and all coefficients are nonnegative") {
  for (const auto& g : small_corpus(20240817u, 25)) {
    TutteResult a = tutte_oracle(g);
    TutteResult b = tutte_dc(g);
    CHECK((a.polynomial == b.polynomial));
    for (const auto& [k, c] : a.polynomial.sorted_terms()) CHECK((c > 0));
  }
}

TEST_CASE("partition-function map matches the subset expansion") {
  for (const auto& g : small_corpus(777u, 15)) {
    TutteResult t = tutte_oracle(g);
    PottsResult z = z_from_t(t);
    CHECK((z.polynomial == potts_oracle(g).polynomial));
    TutteResult back = t_from_z(z);
    CHECK((back.polynomial == t.polynomial));
  }
}

TEST_CASE("ring partition function closed form") {
  for (int m = 3; m <= 5; ++m) {
    BiPoly q = BiPoly::monomial(1, 0, Int(1), "q", "v");
    BiPoly v = BiPoly::monomial(0, 1, Int(1), "q", "v");
    BiPoly expect = (q + v).pow(m) + (q - BiPoly::constant(Int(1), "q", "v")) * v.pow(m);
    CHECK((potts_frontier(circuit(m)).polynomial == expect));
  }
}

TEST_CASE("frontier point evaluation agrees with the full polynomial") {
  Multigraph g = sq_strip(2, 4, Bc::Free, Bc::Free);
  PottsResult z = potts_frontier(g);
  Rat q0(3), v0(-7, 2);
  CHECK((potts_frontier_value(g, q0, v0) == z.polynomial.eval_exact(q0, v0)));
  CHECK((z.polynomial == potts_oracle(g).polynomial));
}

TEST_CASE("serial and parallel oracles tally identically") {
  Multigraph g = complete(4);
  CHECK((tutte_oracle(g).polynomial == tutte_oracle_serial(g).polynomial));
  CHECK((potts_oracle(g).polynomial == potts_oracle_serial(g).polynomial));
  for (const auto& h : small_corpus(99u, 5))
    CHECK((tutte_oracle(h).polynomial == tutte_oracle_serial(h).polynomial));
}

TEST_CASE("acyclic orientation count through the frontier") {
  CHECK((acyclic_count_frontier(complete(4)) == 24));
  CHECK((acyclic_count_frontier(circuit(5)) == 30));  // 2^5 - 2
  for (const auto& g : small_corpus(4242u, 10)) {
    if (g.num_edges() > 16) continue;
    CHECK((acyclic_count_frontier(g) == acyclic_oracle(g)));
  }
}

TEST_CASE("oracle guard rejects oversized edge sets") {
  Multigraph g(2);
  for (int i = 0; i < 21; ++i) g.add_edge(0, 1);
  CHECK_THROWS_AS((void)tutte_oracle(g), guard_error);
}

}  // TEST_SUITE
