#include "tuttekit/newton.hpp"

namespace tk {

std::vector<Rat> power_sums_upto(const UniPoly& p, int M) {
  if (p.is_zero()) throw guard_error("power_sums: zero polynomial has no roots");
  if (M < 0) throw guard_error("power_sums: negative index");
  int d = p.degree();
  Rat lead = p.lead();
  std::vector<Rat> e(d + 1);
  for (int i = 0; i <= d; ++i) e[i] = p.coeff(d - i) / lead;
  return power_sums_monic<Rat>(e, M, [](long k) { return Rat(k); });
}

Rat power_sums(const UniPoly& p, int m) { return power_sums_upto(p, m).back(); }

}  // namespace tk
