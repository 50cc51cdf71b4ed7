#include "tuttekit/spanning_trees.hpp"

#include <cmath>

#include "tuttekit/families.hpp"

namespace tk {

namespace {

// Fraction-free (Bareiss) determinant of an integer matrix.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  const int n = (int)a.size();
  if (n == 0) return 1;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

}  // namespace

Int kirchhoff_count(const Multigraph& g) {
  if (g.n == 0) return 0;
  if (g.n == 1) return 1;
  auto q = g.laplacian();
  // Delete the last row and column.
  std::vector<std::vector<Int>> minor(g.n - 1, std::vector<Int>(g.n - 1));
  for (int i = 0; i + 1 < g.n; ++i)
    for (int j = 0; j + 1 < g.n; ++j) minor[i][j] = q[i][j];
  return bareiss_det(std::move(minor));
}

Int nst_clan_jn(int r, int m) {
  if (r < 1 || m < 1) throw guard_error("spanning count: r, m >= 1 required");
  if (r == 1) return Int(m);
  return pow_int(Int(3), (unsigned long)(r - 1) * m) *
         pow_int(Int(r), (unsigned long)r * m - 2) * m;
}

Int nst_clan_id(int r, int m) {
  if (r < 1 || m < 1) throw guard_error("spanning count: r, m >= 1 required");
  if (m < 3) return kirchhoff_count(clan_identity(r, m));
  if (r == 1) return Int(m);
  // Chebyshev-style pair for omega = (r+2+sqrt(r(r+4)))/2:
  //   b_k = (omega^k - omega^-k)/(omega - omega^-1), c_k = omega^k + omega^-k.
  if (m % 2 == 0) {
    Int b0 = 0, b1 = 1;
    for (int k = 1; k < m / 2; ++k) {
      Int b2 = Int(r + 2) * b1 - b0;
      b0 = b1;
      b1 = b2;
    }
    Int factor = Int(r + 4) * b1 * b1;
    return Int(m) * pow_int(Int(r), r - 2) * pow_int(factor, r - 1);
  }
  Int c0 = 2, c1 = r + 2;
  for (int k = 1; k < m; ++k) {
    Int c2 = Int(r + 2) * c1 - c0;
    c0 = c1;
    c1 = c2;
  }
  Int num = c1 - 2;
  if (num % r != 0) throw guard_error("spanning count: (c_m - 2)/r not integral");
  return Int(m) * pow_int(Int(r), r - 2) * pow_int(Int(num / r), r - 1);
}

GrowthReport growth_and_bounds(const std::string& family, int r) {
  if (r < 2) throw guard_error("growth_and_bounds: r >= 2 required");
  GrowthReport rep;
  rep.r = r;
  double ez, degree;
  if (family == "jn") {
    // exp(z) = 3^{1 - 1/r} r, degree 3r - 1.
    ez = std::pow(3.0, 1.0 - 1.0 / r) * r;
    degree = 3.0 * r - 1.0;
  } else if (family == "id") {
    // exp(z) = omega^{1 - 1/r}, omega = (r+2+sqrt(r(r+4)))/2, degree r + 1.
    double omega = (r + 2 + std::sqrt((double)r * (r + 4))) / 2.0;
    ez = std::pow(omega, 1.0 - 1.0 / r);
    degree = r + 1.0;
  } else {
    throw guard_error("growth_and_bounds: family must be jn or id");
  }
  rep.ez = ez;
  rep.degree = degree;
  rep.bound_deg = ez / degree;
  double d = degree;
  double logc = (d - 1) * std::log(d - 1) - (d / 2 - 1) * std::log(d * (d - 2));
  rep.bound_c = ez / std::exp(logc);
  return rep;
}

}  // namespace tk
