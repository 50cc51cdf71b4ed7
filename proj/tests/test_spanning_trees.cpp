#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "tuttekit/families.hpp"
#include "tuttekit/spanning_trees.hpp"
#include "tuttekit/tutte_engine.hpp"

using namespace tk;

namespace {

// Sorted numeric eigenvalues of the graph Laplacian.
std::vector<double> laplacian_spectrum(const Multigraph& g) {
  auto q = g.laplacian();
  int n = g.n;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = q[i][j].get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

void check_multiset(const std::vector<double>& got, std::vector<double> expect) {
  std::sort(expect.begin(), expect.end());
  REQUIRE(got.size() == expect.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(std::fabs(got[i] - expect[i]) < 1e-8);
}

}  // namespace

TEST_SUITE("spanning_trees") {

TEST_CASE("matrix-tree determinant on the standards") {
  CHECK((kirchhoff_count(circuit(3)) == 3));
  CHECK((kirchhoff_count(circuit(7)) == 7));
  CHECK((kirchhoff_count(complete(4)) == 16));  // Cayley 4^2
  CHECK((kirchhoff_count(complete(5)) == 125));
  CHECK((kirchhoff_count(tree_path(6)) == 1));
  Multigraph doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  CHECK((kirchhoff_count(doubled) == 2));
  Multigraph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK((kirchhoff_count(disconnected) == 0));
  // Loops never contribute.
  Multigraph looped = circuit(3);
  looped.add_edge(0, 0);
  CHECK((kirchhoff_count(looped) == 3));
}

TEST_CASE("determinant count equals the polynomial evaluation at (1,1)") {
  for (const Multigraph& g : {circuit(5), complete(4), clan_cyclic(2, 3),
                              sq_strip(2, 4, Bc::Free, Bc::Periodic)}) {
    Rat t11 = tutte_dc(g).polynomial.eval_exact(Rat(1), Rat(1));
    CHECK((Rat(kirchhoff_count(g)) == t11));
  }
}

TEST_CASE("all-to-all ring closed form vs determinants") {
  for (int r = 1; r <= 4; ++r)
    for (int m = 1; m <= 6; ++m)
      CHECK((nst_clan_jn(r, m) == kirchhoff_count(clan_cyclic(r, m))));
}

TEST_CASE("vertex-to-vertex ring closed form vs determinants, both parities") {
  for (int r = 1; r <= 4; ++r)
    for (int m = 1; m <= 6; ++m)
      CHECK((nst_clan_id(r, m) == kirchhoff_count(clan_identity(r, m))));
}

TEST_CASE("all-to-all ring Laplacian spectrum") {
  // Eigenvalues: 2r(1 - cos 2 pi j / m) for j = 0..m-1, and 3r with
  // multiplicity (r-1)m.
  const double pi = 3.14159265358979323846;
  for (int r = 1; r <= 3; ++r)
    for (int m = 3; m <= 6; ++m) {
      std::vector<double> expect;
      for (int j = 0; j < m; ++j) expect.push_back(2.0 * r * (1 - std::cos(2 * pi * j / m)));
      for (int k = 0; k < (r - 1) * m; ++k) expect.push_back(3.0 * r);
      check_multiset(laplacian_spectrum(clan_cyclic(r, m)), expect);
    }
}

TEST_CASE("vertex-to-vertex ring Laplacian spectrum") {
  // Eigenvalues: 2(1 - cos 2 pi j / m), and r + 2(1 - cos 2 pi j / m) with
  // multiplicity r-1, for j = 0..m-1.
  const double pi = 3.14159265358979323846;
  for (int r = 1; r <= 3; ++r)
    for (int m = 3; m <= 6; ++m) {
      std::vector<double> expect;
      for (int j = 0; j < m; ++j) {
        double c = 2.0 * (1 - std::cos(2 * pi * j / m));
        expect.push_back(c);
        for (int k = 0; k < r - 1; ++k) expect.push_back(r + c);
      }
      check_multiset(laplacian_spectrum(clan_identity(r, m)), expect);
    }
}

TEST_CASE("per-site growth of the all-to-all tree count, frozen 3-decimal table") {
  static const double table[][3] = {
      // exp(z), then the two upper-bound ratios
      {3.464, 0.693, 0.786}, {6.240, 0.780, 0.838}, {9.118, 0.829, 0.871},
      {12.041, 0.860, 0.894}, {14.988, 0.882, 0.910}, {17.950, 0.897, 0.921},
      {20.920, 0.910, 0.931}, {23.897, 0.919, 0.938}, {26.879, 0.927, 0.944},
  };
  for (int r = 2; r <= 10; ++r) {
    GrowthReport gr = growth_and_bounds("jn", r);
    CHECK(std::fabs(gr.ez - table[r - 2][0]) < 5e-4);
    CHECK(std::fabs(gr.bound_deg - table[r - 2][1]) < 5e-4);
    CHECK(std::fabs(gr.bound_c - table[r - 2][2]) < 5e-4);
  }
}

TEST_CASE("per-site growth of the vertex-to-vertex tree count, frozen") {
  static const double table[][3] = {
      {1.932, 0.644, 0.837}, {2.842, 0.711, 0.842}, {3.751, 0.750, 0.851},
      {4.664, 0.777, 0.860}, {5.582, 0.797, 0.867}, {6.505, 0.813, 0.874},
      {7.433, 0.826, 0.879}, {8.365, 0.836, 0.884}, {9.301, 0.846, 0.889},
  };
  for (int r = 2; r <= 10; ++r) {
    GrowthReport gr = growth_and_bounds("id", r);
    CHECK(std::fabs(gr.ez - table[r - 2][0]) < 5e-4);
    CHECK(std::fabs(gr.bound_deg - table[r - 2][1]) < 5e-4);
    CHECK(std::fabs(gr.bound_c - table[r - 2][2]) < 5e-4);
  }
  // Small widths in closed algebraic form.
  CHECK(growth_and_bounds("id", 2).ez ==
        doctest::Approx(std::sqrt(2 + std::sqrt(3.0))).epsilon(1e-9));
  CHECK(growth_and_bounds("id", 3).ez ==
        doctest::Approx(std::pow((5 + std::sqrt(21.0)) / 2, 2.0 / 3)).epsilon(1e-9));
}

TEST_CASE("degree-bound ratio at large width follows the series expansion") {
  GrowthReport gr = growth_and_bounds("jn", 100);
  double series = 1 - 0.76528 / 100 + 0.34838 / 10000;
  CHECK(std::fabs(gr.bound_deg - series) < 2e-4);
  // The ratios increase toward 1 with the width.
  double prev = 0;
  for (int r = 2; r <= 10; ++r) {
    GrowthReport g2 = growth_and_bounds("jn", r);
    CHECK(g2.bound_deg > prev);
    CHECK(g2.bound_deg < 1.0);
    CHECK(g2.bound_c < 1.0);
    prev = g2.bound_deg;
  }
}

TEST_CASE("finite rings converge to the growth constant") {
  for (int r = 2; r <= 3; ++r) {
    double lez = std::log(growth_and_bounds("jn", r).ez);
    for (int m : {4, 8, 16}) {
      double per_site = log_int(nst_clan_jn(r, m)) / (r * m);
      CHECK(std::fabs(per_site - lez) <= 0.75 / m);
    }
  }
}

}  // TEST_SUITE
