#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tuttekit/common.hpp"
#include "tuttekit/polynomial.hpp"

namespace tk {

// Zeros of an exactly-known univariate polynomial (degree capped at 400).
std::vector<Cx> finite_zeros(const UniPoly& p);

struct Window {
  double xlo, xhi, ylo, yhi;
};

// Candidate dominant values (transfer-matrix eigenvalues or their analogues)
// at one point of the complex parameter plane.
using LambdaProvider = std::function<std::vector<Cx>(Cx)>;

struct LocusPoint {
  Cx q;
  int id_a = -1, id_b = -1;  // indices into the provider list that tie here
};

struct LocusOptions {
  int res = 400;            // grid cells per axis
  double tie_rel = 1e-6;    // accept a point when (m1 - m2)/m1 <= tie_rel
  double coarse = 0.25;     // gap cutoff for a grid minimum to become a candidate
  double skip_frac = 0.05;  // tolerated fraction of failed grid nodes
};

// Points where the two largest |lambda| values tie.  The relative top-two gap
// (m1 - m2)/m1 is sampled on a grid; interior minima along each grid row and
// column are sharpened by ternary search and kept only if the gap actually
// closes to tie_rel (a transversal crossing drives it to 0, while two distinct
// branches that merely run close leave a floor and are discarded).  Windows
// symmetric about the real axis are computed in the upper half plane and
// mirrored, so the output is exactly conjugation-symmetric.
std::vector<LocusPoint> equimodular_locus(const LambdaProvider& f, const Window& w,
                                          const LocusOptions& opt = {});

// Tie locations of the top-two moduli along a real segment / a circle |q| = radius.
std::vector<double> scan_real_ties(const LambdaProvider& f, double lo, double hi,
                                   int samples = 2000, double tie_rel = 1e-10);
std::vector<double> scan_circle_ties(const LambdaProvider& f, double radius,
                                     int samples = 7200, double tie_rel = 1e-10);

// ---------------------------------------------------------------- chromatic

struct Circle {
  double center, radius;  // centers lie on the real axis
};

// Zero-density boundary of the chromatic polynomials of the width-r cyclic
// clan family: r circles |q - (r+j-1)| = r-j+1, j = 1..r, mutually tangent
// at q = 2r.
struct ChromaticCircles {
  int r = 0;
  std::vector<Circle> circles;
  double qc = 0;  // common tangency point, 2r
};

ChromaticCircles chromatic_circles(int r);
int circles_containing(const ChromaticCircles& cc, Cx q);
double distance_to_circles(const ChromaticCircles& cc, Cx q);

// ------------------------------------------------------------------- flow

struct FlowLocusInfo {
  UniPoly qc_poly, q1_poly;  // exact minimal polynomials
  double qc = 0;             // largest real root of qc_poly
  double q1 = 0;             // unique real root of q1_poly
  std::vector<double> real_crossings;    // top-two ties on [1, 5.5]
  std::vector<double> farfield_angles;   // tie angles on |q| = 50
  std::vector<double> asymptote_angles;  // {±pi/6, ±pi/2, ±5pi/6}
};

FlowLocusInfo flow_locus_info();

struct PhiRegion {
  std::string dominant;    // "F201", "F202", "F211", "F212", "F22"
  double phi_modulus = 0;  // |lambda_dom|^{1/2}
  bool on_boundary = false;
};

PhiRegion phi_region(Cx q);

// ------------------------------------------------------------- reliability

struct ReliabilityArcs {
  std::vector<Cx> endpoints;  // roots of the branch-point discriminant
  double real_crossing = 0;   // transversal modulus tie on the real axis
};

ReliabilityArcs reliability_arcs();

// Newton-polish a root estimate of an exact polynomial.
Cx polish_root(const UniPoly& p, Cx z0, int iters = 60);

// Pairs of points straddling the traced boundary along its estimated normal,
// one at distance `offset` on each side.  Points too close to the real axis
// are skipped (the normal estimate needs a smooth arc).
struct StraddlePair {
  Cx a, b;
};

std::vector<StraddlePair> straddle_pairs(const std::vector<LocusPoint>& pts,
                                         double offset, int want,
                                         double min_im = 0.05);

}  // namespace tk
