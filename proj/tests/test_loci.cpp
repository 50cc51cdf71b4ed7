#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "tuttekit/clan_closedforms.hpp"
#include "tuttekit/loci.hpp"

using namespace tk;

namespace {

bool has_value_near(const std::vector<Cx>& zs, Cx target, double tol) {
  for (const auto& z : zs)
    if (std::abs(z - target) < tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("loci") {

TEST_CASE("zeros of an exact polynomial with mixed real and complex roots") {
  // (q - 1)(q - 3)(q^2 + 1)
  UniPoly p("q", {Rat(3), Rat(-4), Rat(4), Rat(-4), Rat(1)});
  auto zs = finite_zeros(p);
  REQUIRE(zs.size() == 4);
  CHECK(has_value_near(zs, Cx(1, 0), 1e-12));
  CHECK(has_value_near(zs, Cx(3, 0), 1e-12));
  CHECK(has_value_near(zs, Cx(0, 1), 1e-10));
  CHECK(has_value_near(zs, Cx(0, -1), 1e-10));
  CHECK_THROWS_AS((void)finite_zeros(UniPoly("q")), guard_error);
  CHECK_THROWS_AS((void)finite_zeros(UniPoly::monomial("q", 401)), guard_error);
}

TEST_CASE("tangent circle geometry for width three") {
  ChromaticCircles cc = chromatic_circles(3);
  CHECK(cc.r == 3);
  CHECK(cc.qc == doctest::Approx(6.0));
  REQUIRE(cc.circles.size() == 3);
  // Real-axis chords: [0,6], [2,6], [4,6]; every circle passes through 6.
  const double lo[3] = {0, 2, 4};
  for (int j = 0; j < 3; ++j) {
    CHECK(cc.circles[j].center - cc.circles[j].radius ==
          doctest::Approx(lo[j]));
    CHECK(cc.circles[j].center + cc.circles[j].radius == doctest::Approx(6.0));
  }
  CHECK(circles_containing(cc, Cx(-1, 0)) == 0);
  CHECK(circles_containing(cc, Cx(3.5, 0)) == 2);
  CHECK(circles_containing(cc, Cx(5.5, 0.2)) == 3);
  CHECK(distance_to_circles(cc, Cx(3, 3)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(distance_to_circles(cc, Cx(6, 0)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(distance_to_circles(cc, Cx(-1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("real-segment tie scan isolates a transversal crossing") {
  LambdaProvider cross = [](Cx q) {
    return std::vector<Cx>{q, Cx(2, 0) - q};
  };
  auto ties = scan_real_ties(cross, 0.0, 2.0);
  REQUIRE(ties.size() == 1);
  CHECK(ties[0] == doctest::Approx(1.0).epsilon(1e-9));

  LambdaProvider apart = [](Cx q) {
    return std::vector<Cx>{q, q + Cx(100, 0)};
  };
  CHECK(scan_real_ties(apart, 0.0, 2.0).empty());
}

TEST_CASE("planar scan of a provider whose tie set is a vertical line") {
  // |q - 2| = |4 - q| exactly on Re q = 3.
  LambdaProvider f = [](Cx q) {
    return std::vector<Cx>{q - Cx(2, 0), Cx(4, 0) - q};
  };
  Window w{0, 6, -2, 2};
  LocusOptions opt;
  opt.res = 100;
  auto pts = equimodular_locus(f, w, opt);
  REQUIRE(pts.size() >= 50);
  for (const auto& p : pts) {
    CHECK(std::abs(p.q.real() - 3.0) < 1e-6);
    CHECK(p.id_a == 0);
    CHECK(p.id_b == 1);
  }
  // Conjugation symmetry of the output set.
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& o : pts)
      if (std::abs(o.q - std::conj(p.q)) < 1e-12) found = true;
    CHECK(found);
  }
}

TEST_CASE("dominant-branch classification across the flow plane") {
  CHECK(phi_region(Cx(5, 0)).dominant == "F201");
  CHECK(phi_region(Cx(1, 0)).dominant == "F212");
  CHECK(phi_region(Cx(2, 2)).dominant == "F212");
  CHECK(phi_region(Cx(0, 2)).dominant == "F201");
  PhiRegion mid = phi_region(Cx(2.5, 0));
  CHECK(mid.dominant == "F22");
  CHECK(mid.phi_modulus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK_FALSE(mid.on_boundary);
  // q = 2 lies on the boundary: two branches share modulus 2 there.
  CHECK(phi_region(Cx(2, 0)).on_boundary);
}

TEST_CASE("flow locus summary: crossings, algebraic points, asymptotes") {
  FlowLocusInfo fi = flow_locus_info();
  CHECK(fi.qc == doctest::Approx(4.0798289).epsilon(1e-6));
  CHECK(fi.q1 == doctest::Approx(2.7760454).epsilon(1e-6));
  REQUIRE(fi.real_crossings.size() == 3);
  CHECK(fi.real_crossings[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(fi.real_crossings[1] == doctest::Approx(fi.q1).epsilon(1e-6));
  CHECK(fi.real_crossings[2] == doctest::Approx(fi.qc).epsilon(1e-6));
  REQUIRE(fi.farfield_angles.size() == 6);
  REQUIRE(fi.asymptote_angles.size() == 6);
  for (double a : fi.farfield_angles) {
    double best = 1e300;
    for (double s : fi.asymptote_angles) best = std::min(best, std::abs(a - s));
    CHECK(best < 0.05);
  }
  // The exact polynomials evaluate to ~0 at the reported roots.
  CHECK(std::abs(fi.qc_poly.eval_complex(Cx(fi.qc, 0))) < 1e-8);
  CHECK(std::abs(fi.q1_poly.eval_complex(Cx(fi.q1, 0))) < 1e-8);
}

TEST_CASE("reliability arcs: branch points and the real crossing") {
  ReliabilityArcs ra = reliability_arcs();
  CHECK(ra.real_crossing == doctest::Approx(1.5).epsilon(1e-9));
  REQUIRE(ra.endpoints.size() == 6);
  const Cx frozen[6] = {
      {0.790161716, 0.507981186}, {0.790161716, -0.507981186},
      {1.319867415, 0.309194073}, {1.319867415, -0.309194073},
      {1.501081980, 0.462101337}, {1.501081980, -0.462101337},
  };
  for (const auto& e : frozen) CHECK(has_value_near(ra.endpoints, e, 1e-6));
  for (const auto& e : ra.endpoints)
    CHECK(has_value_near(ra.endpoints, std::conj(e), 1e-9));
}

TEST_CASE("root polishing converges quadratically from a coarse seed") {
  UniPoly p("q", {Rat(-2), Rat(0), Rat(1)});  // q^2 - 2
  Cx z = polish_root(p, Cx(1.3, 0.01));
  CHECK(std::abs(z - Cx(std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("straddle pairs bracket a traced curve along its normal") {
  std::vector<LocusPoint> pts;
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < 400; ++k) {
    double th = 0.1 + (pi - 0.2) * k / 399.0;
    pts.push_back({Cx(std::cos(th), std::sin(th)), 0, 1});
    pts.push_back({Cx(std::cos(th), -std::sin(th)), 0, 1});
  }
  auto pairs = straddle_pairs(pts, 0.01, 10);
  REQUIRE((int)pairs.size() == 10);
  for (const auto& pr : pairs) {
    double da = std::abs(pr.a) - 1.0;
    double db = std::abs(pr.b) - 1.0;
    CHECK(da * db < 0);  // opposite sides of the unit circle
    CHECK(std::abs(da) > 0.005);
    CHECK(std::abs(da) < 0.015);
    CHECK(std::abs(db) < 0.015);
  }
  CHECK_THROWS_AS((void)straddle_pairs({}, 0.01, 5), guard_error);
}

}  // TEST_SUITE
