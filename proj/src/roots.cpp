#include "tuttekit/roots.hpp"

#include <algorithm>
#include <cmath>

namespace tk {

namespace {

using LCx = std::complex<long double>;

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// p and p' at z by Horner.
void horner2(const std::vector<LCx>& c, const LCx& z, LCx& p, LCx& dp) {
  p = c.back();
  dp = LCx(0);
  for (int k = (int)c.size() - 2; k >= 0; --k) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

long double backward_scale(const std::vector<LCx>& c, const LCx& z) {
  long double az = std::abs(z), s = 0, zp = 1;
  for (const auto& ck : c) {
    s += std::abs(ck) * zp;
    zp *= az;
  }
  return s;
}

// One Aberth-Ehrlich run from a circle of starting points with the given phase
// offset.  Returns the worst normalized backward error over the polished roots.
double aberth_attempt(const std::vector<LCx>& c, long double phase, int max_iters,
                      double tol, std::vector<LCx>& z) {
  int d = (int)c.size() - 1;

  // Fujiwara bound for the initial circle.
  long double lead = std::abs(c[d]);
  long double radius = 0;
  for (int i = 1; i <= d; ++i) {
    long double m = std::abs(c[d - i]) / lead;
    if (m > 0) radius = std::max(radius, 2 * std::pow(m, 1.0L / i));
  }
  if (radius == 0) radius = 1;  // all lower coefficients zero: roots at origin

  z.assign(d, LCx(0));
  for (int k = 0; k < d; ++k) {
    long double th = 2 * kPi * k / d + phase;
    z[k] = radius * LCx(std::cos(th), std::sin(th));
  }

  std::vector<bool> done(d, false);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool all_done = true;
    for (int k = 0; k < d; ++k) {
      if (done[k]) continue;
      LCx p, dp;
      horner2(c, z[k], p, dp);
      if (std::abs(p) <= (long double)tol * backward_scale(c, z[k])) {
        done[k] = true;
        continue;
      }
      all_done = false;
      LCx ratio = dp == LCx(0) ? LCx(0) : p / dp;
      LCx sum(0);
      for (int j = 0; j < d; ++j)
        if (j != k) sum += LCx(1) / (z[k] - z[j]);
      LCx denom = LCx(1) - ratio * sum;
      LCx step = denom == LCx(0) ? ratio : ratio / denom;
      z[k] -= step;
    }
    if (all_done) break;
  }

  double worst = 0;
  for (int k = 0; k < d; ++k) {
    // Newton polish sharpens simple roots well past the stopping tolerance.
    for (int s = 0; s < 3; ++s) {
      LCx p, dp;
      horner2(c, z[k], p, dp);
      if (dp == LCx(0)) break;
      LCx step = p / dp;
      if (std::abs(step) > 0.1L * (1 + std::abs(z[k]))) break;  // multiple root: leave
      z[k] -= step;
    }
    LCx p, dp;
    horner2(c, z[k], p, dp);
    worst = std::max(worst, (double)(std::abs(p) / backward_scale(c, z[k])));
  }
  return worst;
}

}  // namespace

std::vector<Cx> aberth_roots(const std::vector<Cx>& coeffs, const RootOptions& opt) {
  int d = (int)coeffs.size() - 1;
  while (d > 0 && std::abs(coeffs[d]) == 0.0) --d;
  if (d < 1) throw guard_error("aberth_roots: degree must be >= 1");
  std::vector<LCx> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = LCx(coeffs[k].real(), coeffs[k].imag());

  // A few runs with different start phases and growing budgets; keep the best.
  const long double phases[] = {0.4L, 1.73L, 2.51L};
  const double accept = std::max(100 * opt.tol, 1e-11);
  std::vector<LCx> z, best_z;
  double best_worst = 1e300;
  for (int attempt = 0; attempt < 3; ++attempt) {
    double worst = aberth_attempt(c, phases[attempt], opt.max_iters * (attempt + 1),
                                  opt.tol, z);
    if (worst < best_worst) {
      best_worst = worst;
      best_z = z;
    }
    if (best_worst <= accept) break;
  }
  std::vector<Cx> out(d);
  for (int k = 0; k < d; ++k)
    out[k] = Cx((double)best_z[k].real(), (double)best_z[k].imag());
  if (best_worst > accept)
    throw convergence_error("aberth_roots: backward error " +
                                std::to_string(best_worst) + " above acceptance",
                            out, best_worst);

  // Real-coefficient inputs: snap near-conjugate pairs to exact symmetry and
  // tiny imaginary parts of (backward-error-wise) real roots to zero.
  bool real_input = true;
  for (const auto& ck : coeffs)
    if (ck.imag() != 0.0) real_input = false;
  if (real_input) {
    std::vector<bool> used(d, false);
    for (int k = 0; k < d; ++k) {
      if (used[k] || out[k].imag() == 0.0) continue;
      Cx conj_target = std::conj(out[k]);
      int bestj = -1;
      double bestd = 1e300;
      for (int j = 0; j < d; ++j) {
        if (j == k || used[j]) continue;
        double dd = std::abs(out[j] - conj_target);
        if (dd < bestd) {
          bestd = dd;
          bestj = j;
        }
      }
      double scale = 1 + std::abs(out[k]);
      if (bestj >= 0 && bestd < 1e-7 * scale) {
        Cx avg = 0.5 * (out[k] + std::conj(out[bestj]));
        out[k] = avg;
        out[bestj] = std::conj(avg);
        used[k] = used[bestj] = true;
      } else if (std::abs(out[k].imag()) < 1e-10 * scale) {
        out[k] = Cx(out[k].real(), 0.0);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Cx> RootSet::all() const {
  std::vector<Cx> r;
  for (const auto& e : exact)
    for (int i = 0; i < e.multiplicity; ++i) r.emplace_back(e.value.get_d(), 0.0);
  r.insert(r.end(), numeric.begin(), numeric.end());
  return r;
}

namespace {

// log2 |x| for a nonzero rational, exact enough for scaling decisions.
double log2_abs(const Rat& x) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return (std::log2(std::fabs(mn)) + (double)en) - (std::log2(std::fabs(md)) + (double)ed);
}

}  // namespace

RootSet poly_roots(const UniPoly& p, const RootOptions& opt) {
  if (p.degree() < 1) throw guard_error("poly_roots: degree must be >= 1");
  RootSet rs;
  UniPoly q = p;

  // Zero roots: trailing zero coefficients, stripped exactly.
  int zmult = 0;
  while (!q.is_zero() && q.coeff(0) == 0) {
    std::vector<Rat> c(q.coeffs().begin() + 1, q.coeffs().end());
    q = UniPoly(q.var(), std::move(c));
    zmult++;
  }
  if (zmult > 0) rs.exact.push_back({Rat(0), zmult});

  // Small integer roots, deflated exactly (improves conditioning and makes
  // structurally exact zeros like q = 1, 3, 5 come out bit-exact).
  for (long cand = -64; cand <= 64 && q.degree() >= 1; ++cand) {
    if (cand == 0) continue;
    int mult = 0;
    while (q.degree() >= 1 && q.eval_exact(Rat(cand)) == 0) {
      q = q.divexact(UniPoly(q.var(), {Rat(-cand), Rat(1)}));
      mult++;
    }
    if (mult > 0) rs.exact.push_back({Rat(cand), mult});
  }

  int d = q.degree();
  if (d < 1) return rs;
  std::vector<Rat> a = q.coeffs();

  // Condition the representation before leaving exact arithmetic.  High-degree
  // polynomials whose roots cluster away from the origin (all our zero loci
  // center near q ~ r or p ~ 1) are brutally ill-conditioned in the raw
  // monomial basis: double-rounded coefficients move the roots by more than
  // the distances we care about.  An exact Taylor shift to (a dyadic rounding
  // of) the root centroid plus a power-of-two radius rescale puts the roots on
  // an O(1) annulus around the origin, where coefficient rounding is harmless.
  Rat shift(0);
  Rat scale(1);
  if (d >= 2) {
    Rat centroid = -a[d - 1] / (Rat(d) * a[d]);
    double cd = centroid.get_d();
    if (std::isfinite(cd) && std::fabs(cd) < 1e15) {
      shift = Rat((long)std::llround(cd * 256.0)) / 256;
      if (shift != 0) {
        for (int i = 0; i < d; ++i)
          for (int j = d - 1; j >= i; --j) a[j] += shift * a[j + 1];
      }
    }
    // The shifted center may itself be a root; peel it off exactly.
    int cmult = 0;
    while ((int)a.size() > 1 && a[0] == 0) {
      a.erase(a.begin());
      cmult++;
    }
    if (cmult > 0) rs.exact.push_back({shift, cmult});
    d = (int)a.size() - 1;
    if (d >= 1) {
      // Geometric mean of the root moduli, read off the end coefficients.
      double l2 = (log2_abs(a[0]) - log2_abs(a[d])) / d;
      long e = std::lround(std::min(60.0, std::max(-60.0, l2)));
      if (e != 0) {
        scale = pow_rat(Rat(2), e);
        Rat sp(1);
        for (int k = 1; k <= d; ++k) {
          sp *= scale;
          a[k] *= sp;
        }
      }
    }
  }

  if (d >= 1) {
    // Uniform rescale if coefficients would overflow doubles.
    long max_exp = 0;
    for (const auto& c : a) {
      if (c == 0) continue;
      long e2 = 0;
      mpz_get_d_2exp(&e2, c.get_num().get_mpz_t());
      long den2 = 0;
      mpz_get_d_2exp(&den2, c.get_den().get_mpz_t());
      max_exp = std::max(max_exp, e2 - den2);
    }
    if (max_exp > 900) {
      Rat down = pow_rat(Rat(2), max_exp - 100);
      for (auto& c : a) c /= down;
    }
    std::vector<Cx> dc(a.size());
    for (size_t i = 0; i < a.size(); ++i) dc[i] = Cx(a[i].get_d(), 0.0);
    auto t = aberth_roots(dc, opt);
    // Map back; shift and scale are exact doubles (dyadic with tiny exponents).
    double sh = shift.get_d(), sc = scale.get_d();
    rs.numeric.resize(t.size());
    for (size_t i = 0; i < t.size(); ++i)
      rs.numeric[i] = Cx(sh + sc * t[i].real(), sc * t[i].imag());
  }
  return rs;
}

}  // namespace tk
