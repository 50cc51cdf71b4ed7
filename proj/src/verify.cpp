#include "tuttekit/verify.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "tuttekit/asymptotics.hpp"
#include "tuttekit/canonical.hpp"
#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/loci.hpp"
#include "tuttekit/multigraph.hpp"
#include "tuttekit/spanning_trees.hpp"
#include "tuttekit/specializations.hpp"
#include "tuttekit/tutte_engine.hpp"

namespace tk {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

Multigraph random_graph(std::mt19937& rng, int max_n, int max_e) {
  std::uniform_int_distribution<int> nd(2, max_n);
  int n = nd(rng);
  std::uniform_int_distribution<int> ed(1, max_e);
  int e = ed(rng);
  Multigraph g(n);
  std::uniform_int_distribution<int> vd(0, n - 1);
  for (int i = 0; i < e; ++i) g.add_edge(vd(rng), vd(rng));
  return g;
}

std::vector<Check> engine_checks() {
  return {
      {"circuit4-tutte",
       [] {
         BiPoly want = BiPoly::monomial(3, 0, 1) + BiPoly::monomial(2, 0, 1) +
                       BiPoly::monomial(1, 0, 1) + BiPoly::monomial(0, 1, 1);
         return tutte_dc(circuit(4)).polynomial == want;
       }},
      {"k4-tutte",
       [] {
         BiPoly want = BiPoly::monomial(3, 0, 1) + BiPoly::monomial(2, 0, 3) +
                       BiPoly::monomial(1, 0, 2) + BiPoly::monomial(1, 1, 4) +
                       BiPoly::monomial(0, 1, 2) + BiPoly::monomial(0, 2, 3) +
                       BiPoly::monomial(0, 3, 1);
         return tutte_dc(complete(4)).polynomial == want;
       }},
      {"dc-vs-subset-sum",
       [] {
         std::mt19937 rng(424243);
         for (int t = 0; t < 10; ++t) {
           Multigraph g = random_graph(rng, 6, 8);
           if (tutte_dc(g).polynomial != tutte_oracle(g).polynomial) return false;
         }
         return true;
       }},
      {"tutte-to-potts-map",
       [] {
         Multigraph g = complete(4);
         return z_from_t(tutte_dc(g)).polynomial == potts_oracle(g).polynomial;
       }},
      {"frontier-vs-subset-sum",
       [] {
         Multigraph g = sq_strip(2, 4, Bc::Free, Bc::Free);
         PottsResult z = potts_oracle(g);
         Rat q0(3), v0(-7, 2);
         return potts_frontier_value(g, q0, v0) == z.polynomial.eval_exact(q0, v0);
       }},
  };
}

std::vector<Check> structure_checks() {
  return {
      {"counts-consistency-r1-12",
       [] {
         for (int r = 1; r <= 12; ++r) {
           StructureCounts sc = structure_counts(r);  // cross-checks internally
           Int total = (Int(r) + 3) * pow_int(Int(2), r - 2 >= 0 ? r - 2 : 0);
           if (r == 1) total = 2;  // (r+3) 2^{r-2} = 4/2
           if (sc.total != total) return false;
         }
         return true;
       }},
      {"amplitude-sum-identity",
       [] {
         // sum_d n_T(r,d) mu_d(q) = q(q+1)...(q+r-1)/r! as exact polynomials.
         for (int r = 1; r <= 8; ++r) {
           StructureCounts sc = structure_counts(r);
           UniPoly lhs("q", {});
           for (int d = 0; d <= r; ++d)
             lhs = lhs + mu_poly(d).scaled(Rat(sc.n_by_level[d]));
           UniPoly rhs = UniPoly::constant("q", 1);
           for (int s = 0; s < r; ++s) rhs = rhs * UniPoly("q", {Rat(s), Rat(1)});
           rhs = rhs.scaled(Rat(1) / Rat(factorial_int(r)));
           if (!(lhs == rhs)) return false;
         }
         return true;
       }},
  };
}

std::vector<Check> clan_r3_checks() {
  return {
      {"r3-m1-vs-deletion-contraction",
       [] {
         BiPoly t = tutte_dc(clan_cyclic(3, 1)).polynomial;
         for (auto [x, y] : {std::pair<Rat, Rat>{Rat(2), Rat(3)},
                             {Rat(1), Rat(5, 2)},
                             {Rat(-3, 2), Rat(7)}})
           if (tutte_clan_closed(3, 1, x, y) != t.eval_exact(x, y)) return false;
         return true;
       }},
      {"r3-m2-vs-frontier",
       [] {
         Multigraph g = clan_cyclic(3, 2);
         for (auto [x, y] : {std::pair<Rat, Rat>{Rat(3), Rat(2)},
                             {Rat(5, 3), Rat(-1, 2)}}) {
           Rat q = (x - 1) * (y - 1), v = y - 1;
           Rat z = potts_frontier_value(g, q, v);
           Rat t = tutte_clan_closed(3, 2, x, y);
           // Z = (x-1)^k (y-1)^n T with k = 1, n = 6.
           if (z != (x - 1) * pow_rat(v, 6) * t) return false;
         }
         return true;
       }},
      {"r3-chromatic-closed",
       [] {
         for (int m = 2; m <= 4; ++m)
           for (int q = 2; q <= 5; ++q)
             if (chromatic_clan_closed(3, m, Rat(q)) !=
                 potts_frontier_value(clan_cyclic(3, m), Rat(q), Rat(-1)))
               return false;
         return true;
       }},
      {"r3-circle-tangency",
       [] {
         ChromaticCircles cc = chromatic_circles(3);
         for (const auto& c : cc.circles)
           if (std::abs(std::abs(cc.qc - c.center) - c.radius) > 1e-12) return false;
         return true;
       }},
  };
}

std::vector<Check> flow_r2_checks() {
  return {
      {"flow-m1",
       [] {
         UniPoly q1 = UniPoly("q", {Rat(-1), Rat(1)});
         UniPoly q2 = UniPoly("q", {Rat(-2), Rat(1)});
         return flow_clan_poly(1) == q1 * q1 * q1 * q2;
       }},
      {"flow-m2-vs-subset-sum",
       [] {
         Multigraph g = clan_cyclic(2, 2);
         UniPoly f = flow_clan_poly(2);
         for (int q = 2; q <= 5; ++q)
           if (f.eval_exact(Rat(q)) != Rat(flow_oracle(g, q))) return false;
         return true;
       }},
      {"flow-small-factors",
       [] {
         UniPoly q1 = UniPoly("q", {Rat(-1), Rat(1)});
         UniPoly q2 = UniPoly("q", {Rat(-2), Rat(1)});
         for (int m = 1; m <= 4; ++m) {
           UniPoly f = flow_clan_poly(m);
           f = f.divexact(q1);  // throws if not divisible
           f = f.divexact(q2);
         }
         return true;
       }},
      {"flow-real-crossings",
       [] {
         FlowLocusInfo fi = flow_locus_info();
         if (fi.real_crossings.size() != 3) return false;
         return std::abs(fi.real_crossings[0] - 2.0) < 1e-6 &&
                std::abs(fi.real_crossings[1] - fi.q1) < 1e-6 &&
                std::abs(fi.real_crossings[2] - fi.qc) < 1e-6;
       }},
  };
}

std::vector<Check> reliability_r2_checks() {
  return {
      {"rel-m1",
       [] {
         return reliability_clan_poly(1) ==
                UniPoly("p", {Rat(0), Rat(3), Rat(-3), Rat(1)});
       }},
      {"rel-m2-vs-subset-sum",
       [] {
         Multigraph g = clan_cyclic(2, 2);
         UniPoly r = reliability_clan_poly(2);
         for (auto p : {Rat(1, 2), Rat(1, 3), Rat(3, 4)})
           if (r.eval_exact(p) != reliability_oracle(g, p)) return false;
         return true;
       }},
      {"rel-unit-range",
       [] {
         UniPoly r = reliability_clan_poly(3);
         for (int i = 1; i < 10; ++i) {
           Rat p(i, 10);
           p.canonicalize();
           Rat v = r.eval_exact(p);
           if (v < 0 || v > 1) return false;
         }
         return true;
       }},
      {"rel-zero-disk",
       [] {
         for (int m = 2; m <= 10; ++m)
           for (const auto& z : finite_zeros(reliability_clan_poly(m)))
             if (std::abs(z - Cx(1, 0)) > 1 + 1e-6) return false;
         return true;
       }},
  };
}

std::vector<Check> strips_checks() {
  return {
      {"sq-width2-open",
       [] { return acyclic_formula_check("sq2FF", 0, 4).pass; }},
      {"sq-width2-ring",
       [] { return acyclic_formula_check("sq2FP", 0, 4).pass; }},
      {"tri-width2-reversed-ring",
       [] { return acyclic_formula_check("tri2FT", 0, 4).pass; }},
      {"width1-ring-is-circuit",
       [] {
         return canonical_key(sq_strip(1, 5, Bc::Free, Bc::Periodic)) ==
                canonical_key(circuit(5));
       }},
  };
}

std::vector<Check> spanning_checks() {
  return {
      {"jn-closed-vs-kirchhoff",
       [] {
         for (int r = 1; r <= 3; ++r)
           for (int m = 3; m <= 5; ++m)
             if (nst_clan_jn(r, m) != kirchhoff_count(clan_cyclic(r, m)))
               return false;
         return true;
       }},
      {"id-closed-vs-kirchhoff",
       [] {
         for (int r = 1; r <= 3; ++r)
           for (int m = 3; m <= 6; ++m)
             if (nst_clan_id(r, m) != kirchhoff_count(clan_identity(r, m)))
               return false;
         return true;
       }},
      {"growth-digits",
       [] {
         GrowthReport jn = growth_and_bounds("jn", 2);
         GrowthReport id = growth_and_bounds("id", 2);
         return std::abs(jn.ez - 3.464) < 5e-4 && std::abs(jn.bound_deg - 0.693) < 5e-4 &&
                std::abs(id.ez - 1.932) < 5e-4 && std::abs(id.bound_c - 0.837) < 5e-4;
       }},
  };
}

std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> registry() {
  return {
      {"engine", engine_checks},        {"structure", structure_checks},
      {"clan-r3", clan_r3_checks},      {"flow-r2", flow_r2_checks},
      {"reliability-r2", reliability_r2_checks},
      {"strips", strips_checks},        {"spanning", spanning_checks},
  };
}

}  // namespace

std::vector<std::string> verify_suites() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

int run_verify_suite(const std::string& suite, std::ostream& os) {
  std::vector<Check> checks;
  bool known = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == name || suite == "all") {
      auto c = fn();
      checks.insert(checks.end(), c.begin(), c.end());
      known = true;
    }
  }
  if (!known) {
    std::string names;
    for (const auto& s : verify_suites()) names += " " + s;
    throw parse_error("unknown verify suite '" + suite + "'; available:" + names);
  }
  int failures = 0;
  for (const auto& c : checks) {
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) failures++;
    os << (ok ? "[PASS] " : "[FAIL] ") << c.name << note << "\n";
  }
  os << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
     << " in suite " << suite << "\n";
  return failures;
}

}  // namespace tk
