// End-to-end acceptance run: twelve independent checks covering the exact
// engines, the closed forms, the growth constants, and the zero loci.  Each
// check prints one [PASS]/[FAIL] line; the exit status is the number of
// failures.  Tolerances are pinned next to the checks that use them.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tuttekit/asymptotics.hpp"
#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/loci.hpp"
#include "tuttekit/spanning_trees.hpp"
#include "tuttekit/specializations.hpp"
#include "tuttekit/tutte_engine.hpp"

using namespace tk;

namespace {

// ------------------------------------------------------------ pinned bounds
constexpr double kTableDigits = 5e-4;   // 3-decimal table entries
constexpr double kAlphaStored = 1e-5;   // refit vs catalog value
constexpr double kAlphaRoutes = 1e-9;   // fit route vs closed-form route
constexpr double kFlowPoints = 1e-4;    // q_c, q_1 as roots and as crossings
constexpr double kAngle = 0.05;         // far-field tie angle vs asymptote
constexpr double kHausdorff = 0.02;     // sampled scan <-> circle union
constexpr double kZeroReal = 1e-8;      // real chromatic zeros
constexpr double kRelCross = 1e-6;      // reliability real crossing
constexpr double kEndpoint = 1e-8;      // arc endpoints vs discriminant roots
constexpr double kDisk = 1e-6;          // reliability zero disk slack
constexpr double kContinuity = 1e-3;    // |lambda_dom|^{1/3} across the boundary
constexpr double kStraddleOff = 5e-5;   // straddle offset (pair separation 1e-4)

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

UniPoly upoly(std::initializer_list<long> asc) {
  std::vector<Rat> c;
  for (long v : asc) c.emplace_back(v);
  return UniPoly("q", c);
}

UniPoly ppoly(std::initializer_list<long> asc) {
  std::vector<Rat> c;
  for (long v : asc) c.emplace_back(v);
  return UniPoly("p", c);
}

Rat rnd_rat(std::mt19937& rng) {
  long num = (long)(rng() % 19) - 9;
  long den = 1 + (long)(rng() % 4);
  Rat v(num, den);
  v.canonicalize();
  return v;
}

// --------------------------------------------------------------- criterion 1

bool c1_engines(std::string& detail) {
  std::mt19937 rng(424243u);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    int n = 2 + (int)(rng() % 7);       // 2..8 vertices
    int e = 1 + (int)(rng() % 8);       // 1..8 random edges, 2 forced below
    Multigraph g(n);
    for (int j = 0; j < e; ++j) {
      int u = (int)(rng() % n), v = (int)(rng() % n);
      g.add_edge(std::min(u, v), std::max(u, v));
    }
    if (i % 10 == 0) g.add_edge(0, 0);                    // force a loop
    if (i % 7 == 0) g.add_edge(g.edges[0].first, g.edges[0].second);
    TutteResult oracle = tutte_oracle(g);
    if (!(tutte_dc(g).polynomial == oracle.polynomial)) {
      detail = "deletion-contraction disagrees with the subset oracle";
      return false;
    }
    if (!(z_from_t(oracle).polynomial == potts_oracle(g).polynomial)) {
      detail = "basis shift of the oracle disagrees with the direct Z oracle";
      return false;
    }
    checked++;
  }
  detail = std::to_string(checked) + " random multigraphs, exact agreement";
  return true;
}

// --------------------------------------------------------------- criterion 2

bool c2_structure(std::string& detail) {
  const std::vector<std::vector<long>> table = {
      {1, 1}, {2, 2, 1}, {4, 4, 3, 1}, {8, 8, 7, 4, 1},
      {16, 16, 15, 11, 5, 1}, {32, 32, 31, 26, 16, 6, 1},
      {64, 64, 63, 57, 42, 22, 7, 1}, {128, 128, 127, 120, 99, 64, 29, 8, 1}};
  const long totals[8] = {2, 5, 12, 28, 64, 144, 320, 704};
  for (int r = 1; r <= 8; ++r) {
    StructureCounts sc = structure_counts(r);
    if ((int)sc.n_by_level.size() != r + 1) return false;
    for (int d = 0; d <= r; ++d)
      if (sc.n_by_level[d] != table[r - 1][d]) {
        detail = "level count off at r=" + std::to_string(r) +
                 " d=" + std::to_string(d);
        return false;
      }
    if (sc.total != totals[r - 1]) {
      detail = "total off at r=" + std::to_string(r);
      return false;
    }
  }
  for (int r = 1; r <= 12; ++r) {
    StructureCounts sc = structure_counts(r);
    Int closed = r >= 2 ? Int(r + 3) * pow_int(Int(2), r - 2) : Int(2);
    Int sum = 0;
    for (const auto& v : sc.n_by_level) sum += v;
    if (sc.total != closed || sum != closed) {
      detail = "recursion vs closed form diverges at r=" + std::to_string(r);
      return false;
    }
  }
  detail = "all table entries and totals through r=12";
  return true;
}

// --------------------------------------------------------------- criterion 3

bool c3_clan_tutte(std::string& detail) {
  std::mt19937 rng(777001u);
  BiPoly cache[4][4];
  for (int r = 1; r <= 3; ++r)
    for (int m = 1; m <= 3; ++m)
      cache[r][m] = tutte_dc(clan_cyclic(r, m)).polynomial;
  for (int i = 0; i < 20; ++i) {
    int r = 1 + i % 3, m = 1 + (i / 3) % 3;
    Rat x0 = rnd_rat(rng), y0 = rnd_rat(rng);
    if (tutte_clan_closed(r, m, x0, y0) != cache[r][m].eval_exact(x0, y0)) {
      detail = "mismatch at r=" + std::to_string(r) + " m=" + std::to_string(m) +
               " x=" + rat_to_string(x0) + " y=" + rat_to_string(y0);
      return false;
    }
  }
  detail = "20 random rational points across r,m in {1,2,3}, exact";
  return true;
}

// --------------------------------------------------------------- criterion 4

bool c4_flow_rel_polys(std::string& detail) {
  UniPoly f1 = upoly({-1, 1}).pow(3) * upoly({-2, 1});
  UniPoly f2 = upoly({-1, 1}) * upoly({-2, 1}).pow(2) *
               upoly({10, -16, 12, -5, 1});
  UniPoly f3 = upoly({-1, 1}) * upoly({-2, 1}).pow(2) * upoly({5, -4, 1}) *
               upoly({-28, 37, -34, 18, -6, 1});
  if (!(flow_clan_poly(1) == f1) || !(flow_clan_poly(2) == f2) ||
      !(flow_clan_poly(3) == f3)) {
    detail = "flow polynomial differs from its frozen factorization";
    return false;
  }
  UniPoly r2 = UniPoly::monomial("p", 3) * ppoly({2, -1}) *
               ppoly({36, -140, 246, -242, 139, -44, 6});
  UniPoly r3 = UniPoly::monomial("p", 5) *
               ppoly({1296, -9300, 31080, -63195, 86110, -81840, 54780, -25440,
                      7830, -1440, 120});
  if (!(reliability_clan_poly(2) == r2) || !(reliability_clan_poly(3) == r3)) {
    detail = "reliability polynomial differs from its frozen form";
    return false;
  }
  if (!(reliability(circuit(3)) == ppoly({0, 0, 3, -2}))) {
    detail = "triangle reliability is not p^2(3-2p)";
    return false;
  }
  detail = "frozen flow m<=3 and reliability m<=3 polynomials, exact";
  return true;
}

// --------------------------------------------------------------- criterion 5

bool c5_spanning(std::string& detail) {
  for (int r = 1; r <= 4; ++r) {
    for (int m = 1; m <= 6; ++m)
      if (nst_clan_jn(r, m) != kirchhoff_count(clan_cyclic(r, m))) {
        detail = "all-to-all count off at r=" + std::to_string(r) +
                 " m=" + std::to_string(m);
        return false;
      }
    for (int m = 3; m <= 6; ++m)
      if (nst_clan_id(r, m) != kirchhoff_count(clan_identity(r, m))) {
        detail = "vertex-to-vertex count off at r=" + std::to_string(r) +
                 " m=" + std::to_string(m);
        return false;
      }
  }
  const double jn_tab[9][3] = {
      {3.464, 0.693, 0.786}, {6.240, 0.780, 0.838}, {9.118, 0.829, 0.871},
      {12.041, 0.860, 0.894}, {14.988, 0.882, 0.910}, {17.950, 0.897, 0.921},
      {20.920, 0.910, 0.931}, {23.897, 0.919, 0.938}, {26.879, 0.927, 0.944}};
  const double id_tab[9][3] = {
      {1.932, 0.644, 0.837}, {2.842, 0.711, 0.842}, {3.751, 0.750, 0.851},
      {4.664, 0.777, 0.860}, {5.582, 0.797, 0.867}, {6.505, 0.813, 0.874},
      {7.433, 0.826, 0.879}, {8.365, 0.836, 0.884}, {9.301, 0.846, 0.889}};
  for (int r = 2; r <= 10; ++r) {
    GrowthReport jn = growth_and_bounds("jn", r);
    GrowthReport id = growth_and_bounds("id", r);
    const double* ej = jn_tab[r - 2];
    const double* ei = id_tab[r - 2];
    if (std::fabs(jn.ez - ej[0]) > kTableDigits ||
        std::fabs(jn.bound_deg - ej[1]) > kTableDigits ||
        std::fabs(jn.bound_c - ej[2]) > kTableDigits ||
        std::fabs(id.ez - ei[0]) > kTableDigits ||
        std::fabs(id.bound_deg - ei[1]) > kTableDigits ||
        std::fabs(id.bound_c - ei[2]) > kTableDigits) {
      detail = "growth table row r=" + std::to_string(r) + " off";
      return false;
    }
  }
  detail = "counts r<=4 m<=6 exact; growth tables r=2..10 to 3 decimals";
  return true;
}

// --------------------------------------------------------------- criterion 6

bool c6_orientations(std::string& detail) {
  Int pow7 = 1;
  for (int m = 1; m <= 10; ++m) {
    pow7 *= 7;
    if (m <= 3 &&
        acyclic_oracle(sq_strip(2, m + 1, Bc::Free, Bc::Free)) != 2 * pow7) {
      detail = "orientation enumeration off at m=" + std::to_string(m);
      return false;
    }
    if (strip_acyclic_count("sq", 2, Bc::Free, Bc::Free, m) != 2 * pow7) {
      detail = "chromatic-route count off at m=" + std::to_string(m);
      return false;
    }
  }
  for (const std::string& key : {"sq2FP", "sq2FT", "tri2FP"}) {
    FormulaCheck fc = acyclic_formula_check(key, 0, 6);
    if (!fc.pass) {
      detail = "closed formula " + key + " disagrees with the graph counts";
      return false;
    }
  }
  detail = "open-strip counts two ways; ring formulas exact to m=6";
  return true;
}

// --------------------------------------------------------------- criterion 7

bool c7_alpha(std::string& detail) {
  struct Probe {
    const char* lattice;
    int ly;
    Bc bcy;
    int M;
  };
  const Probe probes[] = {{"sq", 2, Bc::Free, 10},     {"sq", 3, Bc::Free, 14},
                          {"sq", 4, Bc::Free, 12},     {"tri", 2, Bc::Free, 10},
                          {"tri", 3, Bc::Free, 14},    {"sq", 3, Bc::Periodic, 10},
                          {"tri", 3, Bc::Periodic, 10}};
  double worst = 0;
  for (const Probe& p : probes) {
    AlphaValue fit = alpha_strip(p.lattice, p.ly, p.bcy, p.M);
    AlphaValue closed = alpha_closed_form(p.lattice, p.ly, p.bcy);
    double diff = std::fabs(fit.alpha - closed.alpha);
    worst = std::max(worst, diff);
    if (diff > kAlphaStored || diff > kAlphaRoutes) {
      detail = std::string(p.lattice) + " Ly=" + std::to_string(p.ly) +
               " refit differs by " + fmt(diff);
      return false;
    }
  }
  for (const std::string& lattice : {"sq", "tri"}) {
    double prev_f = 0, prev_p = 0;
    for (const AlphaValue& av : alpha_catalog(lattice)) {
      if (av.route == "anchor") continue;
      double& prev = av.bcy == Bc::Free ? prev_f : prev_p;
      if (av.alpha <= prev) {
        detail = lattice + " catalog not increasing at Ly=" + std::to_string(av.ly);
        return false;
      }
      prev = av.alpha;
    }
    for (const AlphaValue& f : alpha_catalog(lattice)) {
      if (f.bcy != Bc::Free) continue;
      for (const AlphaValue& p : alpha_catalog(lattice)) {
        if (p.bcy != Bc::Periodic || p.route == "anchor" || p.ly != f.ly) continue;
        if (p.alpha <= f.alpha) {
          detail = lattice + " periodic not above free at Ly=" + std::to_string(f.ly);
          return false;
        }
      }
    }
  }
  detail = "7 refits match closed forms (worst " + fmt(worst) +
           "); catalog monotone, periodic above free";
  return true;
}

// --------------------------------------------------------------- criterion 8

bool c8_flow_locus(std::string& detail) {
  FlowLocusInfo fi = flow_locus_info();
  if (std::fabs(fi.qc - 4.079828) > kFlowPoints ||
      std::fabs(fi.q1 - 2.7760454) > kFlowPoints) {
    detail = "polynomial roots off: qc=" + fmt(fi.qc) + " q1=" + fmt(fi.q1);
    return false;
  }
  auto nearest = [&](double target) {
    double best = 1e300;
    for (double c : fi.real_crossings) best = std::min(best, std::fabs(c - target));
    return best;
  };
  if (nearest(fi.qc) > kFlowPoints || nearest(fi.q1) > kFlowPoints) {
    detail = "equimodular crossings miss the algebraic points";
    return false;
  }
  if (fi.farfield_angles.size() != 6) {
    detail = "expected 6 far-field tie angles, got " +
             std::to_string(fi.farfield_angles.size());
    return false;
  }
  double worst = 0;
  for (double a : fi.farfield_angles) {
    double best = 1e300;
    for (double s : fi.asymptote_angles) best = std::min(best, std::fabs(a - s));
    worst = std::max(worst, best);
  }
  if (worst > kAngle) {
    detail = "far-field angle deviates by " + fmt(worst);
    return false;
  }
  detail = "qc=" + fmt(fi.qc) + ", q1=" + fmt(fi.q1) +
           " both routes; asymptote deviation " + fmt(worst);
  return true;
}

// --------------------------------------------------------------- criterion 9

void write_cloud(const std::string& path, const std::vector<LocusPoint>& pts) {
  std::ofstream out(path);
  out.precision(10);
  out << "re, im, id_a, id_b\n";
  for (const auto& p : pts)
    out << p.q.real() << ", " << p.q.imag() << ", " << p.id_a << ", " << p.id_b
        << "\n";
}

bool c9_chromatic_locus(std::string& detail) {
  auto prov = [](Cx q) { return clan_chromatic_lambda_values(3, q); };
  Window w{-1.0, 7.0, -3.5, 3.5};
  LocusOptions opt;
  opt.res = 600;
  auto pts = equimodular_locus(prov, w, opt);
  write_cloud("locus_clan_r3_chromatic.csv", pts);
  ChromaticCircles cc = chromatic_circles(3);
  double d1 = 0;
  for (const auto& p : pts) d1 = std::max(d1, distance_to_circles(cc, p.q));
  double d2 = 0;
  const double pi = 3.14159265358979323846;
  for (const auto& c : cc.circles)
    for (int k = 0; k < 500; ++k) {
      double th = 2 * pi * k / 500;
      Cx z(c.center + c.radius * std::cos(th), c.radius * std::sin(th));
      if (z.real() < w.xlo || z.real() > w.xhi || z.imag() < w.ylo ||
          z.imag() > w.yhi)
        continue;
      double best = 1e300;
      for (const auto& p : pts) best = std::min(best, std::abs(p.q - z));
      d2 = std::max(d2, best);
    }
  if (pts.empty() || d1 > kHausdorff || d2 > kHausdorff) {
    detail = "sampled Hausdorff " + fmt(std::max(d1, d2)) + " above bound";
    return false;
  }
  for (int r = 1; r <= 4; ++r) {
    auto pr = [r](Cx q) { return clan_chromatic_lambda_values(r, q); };
    auto ties = scan_real_ties(pr, 2.0 * r - 0.7, 2.0 * r + 0.7);
    if (ties.empty()) {
      detail = "no real tie near 2r for r=" + std::to_string(r);
      return false;
    }
    for (double t : ties)
      if (std::fabs(t - 2.0 * r) > 1e-6) {
        detail = "spurious real tie at " + fmt(t) + " for r=" + std::to_string(r);
        return false;
      }
  }
  auto zeros8 = finite_zeros(chromatic_clan_poly(3, 8));
  auto zeros20 = finite_zeros(chromatic_clan_poly(3, 20));
  for (double target : {1.0, 3.0, 5.0}) {
    double best = 1e300;
    for (const auto& z : zeros20) best = std::min(best, std::abs(z - Cx(target, 0)));
    if (best > kZeroReal) {
      detail = "real zero " + fmt(target) + " missing (nearest " + fmt(best) + ")";
      return false;
    }
  }
  auto median_dist = [&](const std::vector<Cx>& zs) {
    std::vector<double> d;
    for (const auto& z : zs)
      if (std::fabs(z.imag()) > 1e-6) d.push_back(distance_to_circles(cc, z));
    std::sort(d.begin(), d.end());
    return d.empty() ? 1e300 : d[d.size() / 2];
  };
  double m8 = median_dist(zeros8), m20 = median_dist(zeros20);
  if (!(m20 < m8)) {
    detail = "zero-to-circle median did not shrink: " + fmt(m8) + " -> " + fmt(m20);
    return false;
  }
  detail = "Hausdorff " + fmt(std::max(d1, d2)) + "; tangency at 2r for r<=4; " +
           "zero medians " + fmt(m8) + " -> " + fmt(m20);
  return true;
}

// -------------------------------------------------------------- criterion 10

bool c10_reliability_locus(std::string& detail) {
  ReliabilityArcs ra = reliability_arcs();
  if (std::fabs(ra.real_crossing - 1.5) > kRelCross) {
    detail = "real crossing at " + fmt(ra.real_crossing);
    return false;
  }
  UniPoly disc = ppoly({144, -640, 1236, -1308, 793, -260, 36});
  if (!(reliability_discriminant() == disc)) {
    detail = "branch-point discriminant differs from its frozen coefficients";
    return false;
  }
  auto roots = finite_zeros(disc);
  if (roots.size() != 6 || ra.endpoints.size() != 6) {
    detail = "expected 6 branch points";
    return false;
  }
  for (const auto& e : ra.endpoints) {
    double best = 1e300;
    for (auto z : roots) best = std::min(best, std::abs(polish_root(disc, z) - e));
    if (best > kEndpoint) {
      detail = "endpoint misses discriminant root by " + fmt(best);
      return false;
    }
    auto alphas = reliability_alpha_values(e);
    std::vector<double> mods;
    for (const auto& a : alphas) mods.push_back(std::abs(a));
    std::sort(mods.begin(), mods.end());
    // Two branches coincide here; their numeric values split like the square
    // root of the residual root error, so expect ~1e-6, not machine epsilon.
    double gap = (mods[2] - mods[1]) / mods[2];
    if (gap > 1e-5) {
      detail = "branch point is not a modulus collision (gap " + fmt(gap) + ")";
      return false;
    }
  }
  double worst = 0;
  for (int m = 2; m <= 30; ++m)
    for (const auto& z : finite_zeros(reliability_clan_poly(m)))
      worst = std::max(worst, std::abs(z - Cx(1, 0)));
  if (worst > 1 + kDisk) {
    detail = "zero escapes the unit disk about p=1: radius " + fmt(worst);
    return false;
  }
  detail = "crossing 3/2; endpoints on the discriminant; zeros m<=30 inside "
           "|p-1| <= " + fmt(worst);
  return true;
}

// -------------------------------------------------------------- criterion 11

bool c11_transfer_order(std::string& detail) {
  struct Point {
    Rat x, y, weight_sum;  // frozen mu_0 + mu_2 at q = (x-1)(y-1)
  };
  const Point points[] = {{Rat(5, 3), Rat(7, 2), Rat(-1, 9)},
                          {Rat(9, 4), Rat(11, 5), Rat(-1, 8)}};
  for (const Point& pt : points) {
    auto seq = tutte_clan_sequence(2, 14, pt.x, pt.y);
    FitOutcome fo = fit_recurrence(seq, 6);
    if (!fo.fitted || fo.fit.order != 5) {
      detail = "width-2 ring order " +
               std::to_string(fo.fitted ? fo.fit.order : -1) + " at x=" +
               rat_to_string(pt.x) + " (want 5)";
      return false;
    }
    Rat q = (pt.x - 1) * (pt.y - 1);
    if (mu_coeff(0, q) + mu_coeff(2, q) != pt.weight_sum) {
      detail = "level weights at q=" + rat_to_string(q) + " off";
      return false;
    }
  }
  auto seq3 = tutte_clan_sequence(3, 28, Rat(5, 3), Rat(7, 2));
  FitOutcome fo3 = fit_recurrence(seq3, 13);
  if (!fo3.fitted || fo3.fit.order != 11) {
    detail = "width-3 ring order " +
             std::to_string(fo3.fitted ? fo3.fit.order : -1) + " (want 11)";
    return false;
  }
  for (size_t i = 0; i < fo3.fit.roots.size(); ++i)
    for (size_t j = i + 1; j < fo3.fit.roots.size(); ++j)
      if (std::abs(fo3.fit.roots[i] - fo3.fit.roots[j]) < 1e-6) {
        detail = "characteristic roots collide";
        return false;
      }
  detail = "orders 5 (width 2, two points) and 11 (width 3), roots distinct";
  return true;
}

// -------------------------------------------------------------- criterion 12

bool c12_boundary_continuity(std::string& detail) {
  const double vd = -0.9;
  Cx y(1 + vd, 0);
  auto prov = [&](Cx q) {
    std::vector<Cx> flat;
    for (const auto& blk : clan_lambda_values(3, Cx(1, 0) + q / vd, y))
      for (const auto& z : blk) flat.push_back(z);
    return flat;
  };
  Window w{-1.0, 7.0, -3.5, 3.5};
  LocusOptions opt;
  opt.res = 600;
  auto pts = equimodular_locus(prov, w, opt);
  write_cloud("locus_clan_r3_v09.csv", pts);
  auto pairs = straddle_pairs(pts, kStraddleOff, 50);
  std::ofstream out("straddle_clan_r3_v09.csv");
  out.precision(10);
  out << "re_a, im_a, re_b, im_b, w_a, w_b, rel_diff\n";
  double worst = 0;
  for (const auto& s : pairs) {
    auto eval_w = [&](Cx z) {
      double m = 0;
      for (const auto& l : prov(z)) m = std::max(m, std::abs(l));
      return std::cbrt(m);
    };
    double wa = eval_w(s.a), wb = eval_w(s.b);
    double rel = std::fabs(wa - wb) / std::max(wa, wb);
    worst = std::max(worst, rel);
    out << s.a.real() << ", " << s.a.imag() << ", " << s.b.real() << ", "
        << s.b.imag() << ", " << wa << ", " << wb << ", " << rel << "\n";
  }
  if (pairs.size() != 50 || worst > kContinuity) {
    detail = "free energy jumps by " + fmt(worst) + " across the boundary";
    return false;
  }
  detail = "50 straddling pairs, worst |lambda|^{1/3} step " + fmt(worst) +
           "; point clouds written";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"exact engines agree on a random multigraph corpus", c1_engines},
      {"structure counts match the frozen table and closed form", c2_structure},
      {"ring closed form equals deletion-contraction pointwise", c3_clan_tutte},
      {"frozen flow and reliability polynomials", c4_flow_rel_polys},
      {"spanning-tree counts and growth tables", c5_spanning},
      {"acyclic-orientation counts by three routes", c6_orientations},
      {"strip growth constants refit from scratch", c7_alpha},
      {"flow zero locus: crossings and asymptotes", c8_flow_locus},
      {"chromatic zero locus: circles, tangency, zero drift", c9_chromatic_locus},
      {"reliability zero locus: crossing, branch points, disk", c10_reliability_locus},
      {"minimal transfer order and level weights", c11_transfer_order},
      {"free-energy continuity across the traced boundary", c12_boundary_continuity},
  };
  int failures = 0, idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, c.name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures;
}
