#include "tuttekit/loci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/roots.hpp"

namespace tk {

std::vector<Cx> finite_zeros(const UniPoly& p) {
  if (p.degree() < 0) throw guard_error("finite_zeros: zero polynomial");
  if (p.degree() > 400) throw guard_error("finite_zeros: degree above 400");
  return poly_roots(p).all();
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Below this relative gap the point counts as exactly equimodular (handles
// whole segments where a conjugate pair dominates and the gap is identically 0).
constexpr double kPlateau = 1e-12;

// Relative gap between the two largest moduli: (m1 - m2) / m1 in [0, 1].
// 1 when fewer than two entries or all values vanish (no tie possible).
struct Gap {
  double rel = 1;
  int i1 = -1, i2 = -1;
};

Gap top2(const std::vector<Cx>& v) {
  Gap g;
  if (v.size() < 2) return g;
  double m1 = -1, m2 = -1;
  for (int i = 0; i < (int)v.size(); ++i) {
    double m = std::abs(v[i]);
    if (m > m1) {
      m2 = m1;
      g.i2 = g.i1;
      m1 = m;
      g.i1 = i;
    } else if (m > m2) {
      m2 = m;
      g.i2 = i;
    }
  }
  if (m1 > 0) g.rel = (m1 - m2) / m1;
  return g;
}

double gap_at(const LambdaProvider& f, Cx q) {
  try {
    return top2(f(q)).rel;
  } catch (...) {
    return kNaN;
  }
}

// The boundary is located as a minimum of the relative gap: at a transversal
// modulus crossing the gap is V-shaped with minimum 0, so the two interior
// minima conditions plus a coarse cutoff select true crossings, and a ternary
// search pins them down.  No attempt is made to identify eigenvalue branches
// between nearby points; near-degenerate distinct branches (the classic
// failure mode of nearest-value matching) simply leave a positive gap floor
// and are rejected by the acceptance threshold.
std::optional<LocusPoint> refine_min(const LambdaProvider& f, Cx qa, Cx qb,
                                     double tie_rel) {
  double a = 0, b = 1;
  for (int it = 0; it < 140 && b - a > 1e-15; ++it) {
    double s1 = a + (b - a) / 3, s2 = b - (b - a) / 3;
    double g1 = gap_at(f, qa + s1 * (qb - qa));
    double g2 = gap_at(f, qa + s2 * (qb - qa));
    if (std::isnan(g1) || std::isnan(g2)) return std::nullopt;
    if (g1 < g2)
      b = s2;
    else
      a = s1;
  }
  Cx qm = qa + (0.5 * (a + b)) * (qb - qa);
  try {
    Gap g = top2(f(qm));
    if (g.i2 >= 0 && g.rel <= tie_rel)
      return LocusPoint{qm, std::min(g.i1, g.i2), std::max(g.i1, g.i2)};
  } catch (...) {
  }
  return std::nullopt;
}

}  // namespace

std::vector<LocusPoint> equimodular_locus(const LambdaProvider& f, const Window& w,
                                          const LocusOptions& opt) {
  const int res = opt.res;
  if (res < 2) throw guard_error("equimodular_locus: res >= 2 required");
  if (!(w.xhi > w.xlo) || !(w.yhi > w.ylo))
    throw guard_error("equimodular_locus: empty window");
  const double dx = (w.xhi - w.xlo) / res;
  const double dy = (w.yhi - w.ylo) / res;
  // A window symmetric about the real axis is scanned in the closed upper
  // half only and mirrored, which makes the result exactly conjugation
  // symmetric (independent refinements would only agree to the tie tolerance).
  const bool sym = (w.ylo == -w.yhi) && (res % 2 == 0);
  const int nxn = res + 1;
  const int nyn = (sym ? res / 2 : res) + 1;
  const double ybase = sym ? 0.0 : w.ylo;
  auto node = [&](int i, int j) { return Cx(w.xlo + i * dx, ybase + j * dy); };

  std::vector<std::vector<Cx>> vals((size_t)nxn * nyn);
  std::vector<char> good((size_t)nxn * nyn, 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < nyn; ++j) {
    for (int i = 0; i < nxn; ++i) {
      size_t ix = (size_t)j * nxn + i;
      try {
        vals[ix] = f(node(i, j));
        good[ix] = 1;
      } catch (...) {
      }
    }
  }
  size_t bad = 0;
  for (char g : good)
    if (!g) bad++;
  if ((double)bad > opt.skip_frac * (double)good.size())
    throw guard_error("equimodular_locus: " + std::to_string(bad) + " of " +
                      std::to_string(good.size()) + " grid nodes failed");

  std::vector<double> gam((size_t)nxn * nyn, kNaN);
  std::vector<Gap> gaps((size_t)nxn * nyn);
  for (size_t ix = 0; ix < gam.size(); ++ix)
    if (good[ix]) {
      gaps[ix] = top2(vals[ix]);
      gam[ix] = gaps[ix].rel;
    }

  std::vector<LocusPoint> out;
  // Nodes already sitting on the locus (including gap-zero plateaus where a
  // conjugate pair dominates along the real axis) are taken as they are.
  for (int j = 0; j < nyn; ++j)
    for (int i = 0; i < nxn; ++i) {
      size_t ix = (size_t)j * nxn + i;
      if (good[ix] && gam[ix] <= kPlateau && gaps[ix].i2 >= 0)
        out.push_back({node(i, j), std::min(gaps[ix].i1, gaps[ix].i2),
                       std::max(gaps[ix].i1, gaps[ix].i2)});
    }

  // Interior gap minima along every grid row and column become candidate
  // two-cell segments for refinement.
  struct Seg {
    Cx qa, qb;
  };
  std::vector<Seg> cand;
  for (int j = 0; j < nyn; ++j)
    for (int i = 1; i + 1 < nxn; ++i) {
      size_t ix = (size_t)j * nxn + i;
      double c = gam[ix], l = gam[ix - 1], r = gam[ix + 1];
      if (c > kPlateau && c < opt.coarse && c <= l && c < r)
        cand.push_back({node(i - 1, j), node(i + 1, j)});
    }
  for (int i = 0; i < nxn; ++i)
    for (int j = 1; j + 1 < nyn; ++j) {
      size_t ix = (size_t)j * nxn + i;
      double c = gam[ix], l = gam[ix - nxn], r = gam[ix + nxn];
      if (c > kPlateau && c < opt.coarse && c <= l && c < r)
        cand.push_back({node(i, j - 1), node(i, j + 1)});
    }

  std::vector<std::optional<LocusPoint>> found(cand.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (int e = 0; e < (int)cand.size(); ++e)
    found[e] = refine_min(f, cand[e].qa, cand[e].qb, opt.tie_rel);
  for (const auto& p : found)
    if (p) out.push_back(*p);

  if (sym) {
    size_t n0 = out.size();
    for (size_t k = 0; k < n0; ++k) {
      if (std::abs(out[k].q.imag()) <= 1e-12) continue;
      LocusPoint m = out[k];
      m.q = std::conj(m.q);
      out.push_back(m);
    }
  }
  return out;
}

std::vector<double> scan_real_ties(const LambdaProvider& f, double lo, double hi,
                                   int samples, double tie_rel) {
  if (samples < 2) throw guard_error("scan_real_ties: samples >= 2 required");
  const double step = (hi - lo) / samples;
  const double coarse = 0.25;
  std::vector<double> gam(samples + 1);
  for (int s = 0; s <= samples; ++s) gam[s] = gap_at(f, Cx(lo + s * step, 0));

  std::vector<double> ties;
  for (int s = 0; s <= samples; ++s) {
    if (gam[s] <= kPlateau) {
      ties.push_back(lo + s * step);
      continue;
    }
    if (s == 0 || s == samples) continue;
    if (gam[s] < coarse && gam[s] <= gam[s - 1] && gam[s] < gam[s + 1]) {
      auto p = refine_min(f, Cx(lo + (s - 1) * step, 0), Cx(lo + (s + 1) * step, 0),
                          tie_rel);
      if (p) ties.push_back(p->q.real());
    }
  }
  std::sort(ties.begin(), ties.end());
  std::vector<double> merged;
  for (double t : ties)
    if (merged.empty() || t - merged.back() > 2 * step) merged.push_back(t);
  return merged;
}

std::vector<double> scan_circle_ties(const LambdaProvider& f, double radius,
                                     int samples, double tie_rel) {
  auto on_circle = [&](Cx t) {
    double th = t.real();
    return f(Cx(radius * std::cos(th), radius * std::sin(th)));
  };
  const double pi = 3.14159265358979323846;
  return scan_real_ties(on_circle, -pi, pi, samples, tie_rel);
}

ChromaticCircles chromatic_circles(int r) {
  if (r < 1) throw guard_error("chromatic_circles: r >= 1 required");
  ChromaticCircles cc;
  cc.r = r;
  for (int j = 1; j <= r; ++j)
    cc.circles.push_back({double(r + j - 1), double(r - j + 1)});
  cc.qc = 2.0 * r;
  return cc;
}

int circles_containing(const ChromaticCircles& cc, Cx q) {
  int n = 0;
  for (const auto& c : cc.circles)
    if (std::abs(q - Cx(c.center, 0)) < c.radius) n++;
  return n;
}

double distance_to_circles(const ChromaticCircles& cc, Cx q) {
  double best = 1e300;
  for (const auto& c : cc.circles)
    best = std::min(best, std::abs(std::abs(q - Cx(c.center, 0)) - c.radius));
  return best;
}

FlowLocusInfo flow_locus_info() {
  FlowLocusInfo fi;
  fi.qc_poly = UniPoly("q", {Rat(-14), Rat(-1), Rat(13), Rat(-7), Rat(1)});
  fi.q1_poly = UniPoly("q", {Rat(-10), Rat(7), Rat(-4), Rat(1)});
  double best = -1e300;
  for (const auto& z : poly_roots(fi.qc_poly).all())
    if (std::abs(z.imag()) < 1e-9) best = std::max(best, z.real());
  fi.qc = best;
  for (const auto& z : poly_roots(fi.q1_poly).all())
    if (std::abs(z.imag()) < 1e-9) fi.q1 = z.real();
  auto f = [](Cx q) { return flow_lambda_values_r2(q); };
  fi.real_crossings = scan_real_ties(f, 1.0, 5.5, 4500);
  fi.farfield_angles = scan_circle_ties(f, 50.0, 7200);
  const double pi = 3.14159265358979323846;
  fi.asymptote_angles = {-5 * pi / 6, -pi / 2, -pi / 6, pi / 6, pi / 2, 5 * pi / 6};
  return fi;
}

PhiRegion phi_region(Cx q) {
  static const char* names[5] = {"F201", "F202", "F211", "F212", "F22"};
  auto v = flow_lambda_values_r2(q);
  Gap g = top2(v);
  PhiRegion pr;
  pr.dominant = names[g.i1];
  pr.phi_modulus = std::sqrt(std::abs(v[g.i1]));
  pr.on_boundary = g.i2 >= 0 && g.rel <= 1e-6;
  return pr;
}

ReliabilityArcs reliability_arcs() {
  ReliabilityArcs ra;
  UniPoly d = reliability_discriminant();
  for (const auto& z : finite_zeros(d)) ra.endpoints.push_back(polish_root(d, z));
  auto f = [](Cx p) { return reliability_alpha_values(p); };
  auto ties = scan_real_ties(f, 1.2, 1.8, 3000);
  if (ties.empty()) throw guard_error("reliability_arcs: no real-axis tie found");
  double best = ties[0];
  for (double t : ties)
    if (std::abs(t - 1.5) < std::abs(best - 1.5)) best = t;
  ra.real_crossing = best;
  return ra;
}

Cx polish_root(const UniPoly& p, Cx z0, int iters) {
  UniPoly dp = p.derivative();
  Cx z = z0;
  for (int i = 0; i < iters; ++i) {
    Cx fv = p.eval_complex(z);
    Cx dv = dp.eval_complex(z);
    if (std::abs(dv) == 0) break;
    Cx step = fv / dv;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1 + std::abs(z))) break;
  }
  return z;
}

std::vector<StraddlePair> straddle_pairs(const std::vector<LocusPoint>& pts,
                                         double offset, int want,
                                         double min_im) {
  std::vector<Cx> cand;
  for (const auto& p : pts)
    if (std::abs(p.q.imag()) >= min_im) cand.push_back(p.q);
  if ((int)cand.size() < 2 * want)
    throw guard_error("straddle_pairs: not enough boundary points away from the axis");
  std::vector<StraddlePair> out;
  size_t stride = std::max<size_t>(1, cand.size() / (size_t)(2 * want));
  for (size_t k = 0; k < cand.size() && (int)out.size() < want; k += stride) {
    Cx p = cand[k];
    double bd = 1e300;
    Cx nb = p;
    for (size_t j = 0; j < cand.size(); ++j) {
      if (j == k) continue;
      double dcur = std::abs(cand[j] - p);
      if (dcur > 1e-12 && dcur < bd) {
        bd = dcur;
        nb = cand[j];
      }
    }
    if (bd > 0.1) continue;  // isolated point, tangent estimate unreliable
    Cx norm = (nb - p) / bd * Cx(0, 1);
    out.push_back({p + offset * norm, p - offset * norm});
  }
  if ((int)out.size() < want)
    throw guard_error("straddle_pairs: only " + std::to_string(out.size()) +
                      " usable pairs found");
  return out;
}

}  // namespace tk
