#include "tuttekit/clan_closedforms.hpp"

#include <algorithm>
#include <functional>

#include "tuttekit/newton.hpp"
#include "tuttekit/roots.hpp"

namespace tk {

namespace {

struct Term {
  int i, j;
  long c;
};

BiPoly from_terms(std::initializer_list<Term> ts) {
  BiPoly p("x", "y");
  for (const auto& t : ts) p.add_term(t.i, t.j, Int(t.c));
  return p;
}

// ---- r = 2 transfer blocks: each level is a monic quadratic (or linear)
// with trace s and discriminant R, so the product term is (s^2 - R)/4.

const BiPoly& s20() {
  static BiPoly p = from_terms(
      {{0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {2, 0, 1}, {1, 0, 3}, {0, 0, 2}});
  return p;
}

const BiPoly& disc20() {
  static BiPoly p = from_terms({{0, 0, 4},  {1, 0, 12}, {0, 1, 12}, {1, 1, 22},
                                {2, 0, 13}, {0, 2, 21}, {3, 0, 6},  {0, 3, 20},
                                {1, 2, 16}, {2, 1, 10}, {4, 0, 1},  {0, 4, 10},
                                {2, 2, -4}, {1, 3, -2}, {0, 5, 4},  {2, 3, -2},
                                {0, 6, 1}});
  return p;
}

const BiPoly& s21() {
  static BiPoly p =
      from_terms({{0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {1, 0, 2}, {0, 0, 4}});
  return p;
}

const BiPoly& disc21() {
  static BiPoly p = from_terms({{0, 0, 16}, {1, 0, 16}, {0, 1, 32}, {2, 0, 4},
                                {1, 1, 12}, {0, 2, 33}, {0, 3, 20}, {1, 3, -4},
                                {0, 4, 10}, {0, 5, 4},  {0, 6, 1}});
  return p;
}

// ---- r = 3 transfer blocks.  One level-0 eigenvalue and one level-2 pair
// are explicit; the rest are roots of the cubic/quartic below.

// 3y^2(y+1), shared by levels 0 and 2 (the one coincident eigenvalue).
const BiPoly& lin3() {
  static BiPoly p = from_terms({{0, 3, 3}, {0, 2, 3}});
  return p;
}

const BiPoly& cubic_b32() {
  static BiPoly p = from_terms({{0, 9, -1},  {0, 8, -3},  {0, 7, -6},  {0, 6, -10},
                                {0, 5, -15}, {1, 3, -3},  {0, 4, -21}, {3, 0, -1},
                                {1, 2, -6},  {0, 3, -28}, {2, 0, -9},  {1, 1, -16},
                                {0, 2, -36}, {1, 0, -26}, {0, 1, -38}, {0, 0, -24}});
  return p;
}

const BiPoly& cubic_b31() {
  static BiPoly inner = from_terms(
      {{1, 11, 3},  {3, 8, 1},    {1, 10, 12},  {3, 7, 3},   {2, 8, 9},
       {1, 9, 36},  {0, 10, 3},   {3, 6, 6},    {2, 7, 27},  {1, 8, 90},
       {0, 9, 12},  {3, 5, 10},   {2, 6, 54},   {1, 7, 153}, {0, 8, 17},
       {3, 4, 15},  {2, 5, 84},   {1, 6, 194},  {0, 7, -6},  {4, 2, 3},
       {3, 3, 21},  {2, 4, 102},  {1, 5, 184},  {0, 6, -62}, {4, 1, 6},
       {3, 2, 40},  {2, 3, 96},   {1, 4, 117},  {0, 5, -134},{4, 0, -3},
       {3, 1, 18},  {2, 2, 75},   {1, 3, 16},   {0, 4, -192},{3, 0, -24},
       {2, 1, -36}, {1, 2, -85},  {0, 3, -211}, {2, 0, -69}, {1, 1, -156},
       {0, 2, -189},{1, 0, -84},  {0, 1, -120}, {0, 0, -36}});
  static BiPoly p = inner.mul_mono(0, 1, 1);  // * y
  return p;
}

const BiPoly& cubic_b30() {
  static BiPoly inner = from_terms(
      {{4, 7, 1},   {4, 6, 3},   {3, 7, 6},   {4, 5, 3},   {3, 6, 7},
       {2, 7, 3},   {4, 4, 1},   {3, 5, -6},  {2, 6, -15}, {1, 7, -4},
       {4, 3, -3},  {3, 4, -15}, {2, 5, -31}, {1, 6, -12}, {3, 3, -11},
       {2, 4, -14}, {1, 5, 7},   {0, 6, 5},   {4, 1, 1},   {3, 2, 9},
       {2, 3, 21},  {1, 4, 33},  {0, 5, 9},   {3, 1, 6},   {2, 2, 25},
       {1, 3, 28},  {0, 4, 1},   {3, 0, -2},  {2, 1, -1},  {1, 2, -4},
       {0, 3, -11}, {2, 0, -6},  {1, 1, -14}, {0, 2, -12}, {1, 0, -4},
       {0, 1, -4}});
  // * (-3) y^4 (y+1)
  static BiPoly p = inner * from_terms({{0, 5, -3}, {0, 4, -3}});
  return p;
}

const BiPoly& quartic_b43() {
  static BiPoly p = from_terms({{0, 9, -1},  {0, 8, -3},  {0, 7, -6},  {0, 6, -10},
                                {0, 5, -15}, {1, 3, -3},  {0, 4, -21}, {1, 2, -6},
                                {2, 0, -3},  {1, 1, -9},  {0, 3, -31}, {0, 2, -39},
                                {1, 0, -21}, {0, 1, -45}, {0, 0, -36}});
  return p;
}

const BiPoly& quartic_b42() {
  static BiPoly inner = from_terms(
      {{1, 11, 1},  {1, 10, 4},  {0, 11, 1},  {2, 8, 1},   {1, 9, 10},
       {0, 10, 5},  {2, 7, 3},   {1, 8, 23},  {0, 9, 15},  {2, 6, 6},
       {1, 7, 39},  {0, 8, 31},  {2, 5, 10},  {1, 6, 53},  {0, 7, 42},
       {2, 4, 14},  {1, 5, 62},  {0, 6, 41},  {3, 2, 3},   {2, 3, 17},
       {1, 4, 65},  {0, 5, 28},  {3, 1, 3},   {2, 2, 30},  {1, 3, 66},
       {0, 4, 8},   {2, 1, 21},  {1, 2, 67},  {0, 3, -13}, {2, 0, -6},
       {1, 1, 6},   {0, 2, -38}, {1, 0, -30}, {0, 1, -66}, {0, 0, -36}});
  static BiPoly p = inner.mul_mono(0, 1, 3);  // * 3y
  return p;
}

const BiPoly& quartic_b41() {
  static BiPoly inner = from_terms(
      {{1, 11, 1},  {3, 8, 1},   {1, 10, 5},  {3, 7, 2},   {2, 8, 4},
       {1, 9, 16},  {3, 6, 2},   {2, 7, 7},   {1, 8, 38},  {3, 5, 1},
       {2, 6, 7},   {1, 7, 57},  {0, 8, -2},  {2, 5, 9},   {1, 6, 72},
       {0, 7, -11}, {2, 4, 14},  {1, 5, 81},  {0, 6, -23}, {3, 2, 3},
       {2, 3, 20},  {1, 4, 73},  {0, 5, -41}, {3, 1, 6},   {2, 2, 26},
       {1, 3, 44},  {0, 4, -65}, {3, 0, -3},  {2, 1, 3},   {0, 3, -84},
       {2, 0, -18}, {1, 1, -48}, {0, 2, -85}, {1, 0, -33}, {0, 1, -61},
       {0, 0, -18}});
  // * (-9) y^3 (y+1)
  static BiPoly p = inner * from_terms({{0, 4, -9}, {0, 3, -9}});
  return p;
}

const BiPoly& quartic_b40() {
  static BiPoly g = from_terms({{2, 4, 1},  {2, 3, 2},  {1, 4, 2},  {2, 2, -1},
                                {1, 3, -3}, {0, 4, -1}, {1, 2, -5}, {0, 3, -3},
                                {1, 0, 2},  {0, 1, 4},  {0, 0, 2}});
  // 27 y^6 (y+1)^2 (y^2+y+1) (xy-1) * g
  static BiPoly p = BiPoly::monomial(0, 6, 27) *
                    from_terms({{0, 1, 1}, {0, 0, 1}}).pow(2) *
                    from_terms({{0, 2, 1}, {0, 1, 1}, {0, 0, 1}}) *
                    from_terms({{1, 1, 1}, {0, 0, -1}}) * g;
  return p;
}

// Trace base of the explicit level-2 pair: lambda = (3/2)(S +- sqrt(R)).
const BiPoly& s32_base() {
  static BiPoly p =
      from_terms({{0, 3, 1}, {0, 2, 3}, {1, 0, 2}, {0, 1, 6}, {0, 0, 8}});
  return p;
}

const BiPoly& disc32() {
  static BiPoly p = from_terms({{0, 0, 64}, {1, 0, 32}, {0, 1, 112}, {2, 0, 4},
                                {1, 1, 24}, {0, 2, 100},{1, 2, 4},   {0, 3, 52},
                                {1, 3, -4}, {0, 4, 21}, {0, 5, 6},   {0, 6, 1}});
  return p;
}

std::vector<BiPoly> monic_pair(const BiPoly& trace, const BiPoly& disc) {
  // xi^2 - trace xi + (trace^2 - disc)/4; the /4 must be exact.
  BiPoly prod = (trace * trace - disc).divexact_scalar(4);
  return {BiPoly::constant(1), -trace, prod};
}

}  // namespace

std::vector<ClanBlock> clan_spectrum(int r) {
  const BiPoly one = BiPoly::constant(1);
  if (r == 1) {
    return {{0, {{one, -BiPoly::monomial(1, 0, 1)}}},  // xi - x
            {1, {{one, -one}}}};                       // xi - 1
  }
  if (r == 2) {
    return {{0, {monic_pair(s20(), disc20())}},
            {1, {monic_pair(s21(), disc21())}},
            {2, {{one, BiPoly::constant(-2)}}}};
  }
  if (r == 3) {
    // Level 2 explicit pair: trace 3S, product (9/4)(S^2 - R).
    BiPoly tr2 = s32_base().scaled(3);
    BiPoly pr2 = (s32_base() * s32_base() - disc32()).scaled(9).divexact_scalar(4);
    return {{0,
             {{one, -lin3()},
              {one, cubic_b32(), cubic_b31(), cubic_b30()}}},
            {1, {{one, quartic_b43(), quartic_b42(), quartic_b41(), quartic_b40()}}},
            {2, {{one, -tr2, pr2}, {one, -lin3()}}},
            {3, {{one, BiPoly::constant(-6)}}}};
  }
  throw guard_error("clan spectrum: explicit blocks available for r <= 3 only");
}

UniPoly mu_poly(int d) {
  if (d < 0) throw guard_error("mu_poly: d >= 0 required");
  if (d == 0) return UniPoly::constant("q", 1);
  auto binom_poly = [](int k) {
    UniPoly p = UniPoly::constant("q", Rat(1));
    UniPoly q = UniPoly::monomial("q", 1, 1);
    for (int s = 0; s < k; ++s) p = p * (q - UniPoly::constant("q", Rat(s)));
    return p.scaled(Rat(Int(1), factorial_int(k)));
  };
  return binom_poly(d) - binom_poly(d - 1);
}

Rat mu_coeff(int d, const Rat& q) { return mu_poly(d).eval_exact(q); }

StructureCounts structure_counts(int r) {
  if (r < 1) throw guard_error("structure_counts: r >= 1 required");
  StructureCounts sc;
  sc.r = r;
  // Closed form: n(r, 0) = 2^{r-1}; n(r, d) = sum_{j=1}^{r-d+1} C(r-1, j-1).
  for (int d = 0; d <= r; ++d) {
    if (d == 0) {
      sc.n_by_level.push_back(pow_int(Int(2), r - 1));
    } else {
      Int s = 0;
      for (int j = 1; j <= r - d + 1; ++j) s += binom_int(r - 1, j - 1);
      sc.n_by_level.push_back(s);
    }
  }
  // Pascal-style recursion: n(r+1, d) = n(r, d) + n(r, d-1) for 2 <= d <= r,
  // with n(r, 0) = n(r, 1) = 2^{r-1} and n(r, r) = 1.
  std::vector<Int> row = {Int(1), Int(1)};  // r = 1
  for (int rr = 2; rr <= r; ++rr) {
    std::vector<Int> next(rr + 1);
    next[0] = next[1] = pow_int(Int(2), rr - 1);
    for (int d = 2; d < rr; ++d) next[d] = row[d] + row[d - 1];
    next[rr] = 1;
    row = std::move(next);
  }
  if (row != sc.n_by_level)
    throw guard_error("structure_counts: closed form and recursion disagree");
  sc.total = 0;
  for (const auto& v : sc.n_by_level) sc.total += v;
  Int expect = r >= 2 ? Int(r + 3) * pow_int(Int(2), r - 2) : Int(2);
  if (sc.total != expect)
    throw guard_error("structure_counts: level sum does not match (r+3) 2^(r-2)");
  return sc;
}

UniPoly clan_chromatic_lambda(int r, int d) {
  if (r < 1 || d < 0 || d > r) throw guard_error("chromatic lambda: need 0 <= d <= r");
  // (-1)^d r_(d) (q - r - d)_(r - d)
  Int pref = falling(Int(r), d);
  if (d % 2) pref = -pref;
  UniPoly p = UniPoly::constant("q", Rat(pref));
  UniPoly q = UniPoly::monomial("q", 1, 1);
  for (int s = 0; s < r - d; ++s)
    p = p * (q - UniPoly::constant("q", Rat(r + d + s)));
  return p;
}

UniPoly chromatic_clan_poly(int r, int m) {
  if (r < 1 || m < 1) throw guard_error("chromatic closed form: r, m >= 1 required");
  UniPoly acc("q");
  for (int d = 0; d <= r; ++d)
    acc = acc + mu_poly(d) * clan_chromatic_lambda(r, d).pow(m);
  return acc;
}

Rat chromatic_clan_closed(int r, int m, const Rat& q) {
  if (r < 1 || m < 1) throw guard_error("chromatic closed form: r, m >= 1 required");
  Rat acc(0);
  for (int d = 0; d <= r; ++d)
    acc += mu_coeff(d, q) * pow_rat(clan_chromatic_lambda(r, d).eval_exact(q), m);
  return acc;
}

namespace {

// Power-sum table over univariate polynomials: sums[d][m] = sum_j lambda^m as
// a polynomial, where each block part's (x,y) coefficients were mapped into
// the univariate world by `eval`.
std::vector<std::vector<UniPoly>> block_power_sums(
    const std::vector<ClanBlock>& blocks, int M, const std::string& var,
    const std::function<UniPoly(const BiPoly&)>& eval) {
  auto from_int = [&var](long k) { return UniPoly::constant(var, Rat(k)); };
  std::vector<std::vector<UniPoly>> sums;
  for (const auto& blk : blocks) {
    std::vector<UniPoly> total(M + 1, UniPoly(var));
    for (const auto& part : blk.parts) {
      std::vector<UniPoly> e;
      e.reserve(part.size());
      for (const auto& c : part) e.push_back(eval(c));
      auto s = power_sums_monic<UniPoly>(e, M, from_int);
      for (int m = 0; m <= M; ++m) total[m] = total[m] + s[m];
    }
    sums.push_back(std::move(total));
  }
  return sums;
}

}  // namespace

std::vector<Rat> tutte_clan_sequence(int r, int M, const Rat& x0, const Rat& y0) {
  if (M < 1) throw guard_error("tutte closed form: M >= 1 required");
  auto blocks = clan_spectrum(r);
  auto sums = block_power_sums(blocks, M, "x", [&](const BiPoly& c) {
    return c.eval_partial_y(y0);  // polynomial in x with y frozen
  });
  // mu_d as polynomials in x through q = (x-1)(y0-1).
  UniPoly qx("x", {-(y0 - 1), y0 - 1});
  std::vector<UniPoly> mu_x;
  for (int d = 0; d <= r; ++d) mu_x.push_back(mu_poly(d).compose(qx));
  UniPoly x_minus_1("x", {Rat(-1), Rat(1)});
  std::vector<Rat> out;
  out.reserve(M);
  for (int m = 1; m <= M; ++m) {
    UniPoly num("x");
    for (size_t b = 0; b < blocks.size(); ++b)
      num = num + mu_x[blocks[b].d] * sums[b][m];
    // The numerator is divisible by (x - 1) identically in y; exact division
    // realizes the closed form at x = 1 with no limiting process.
    out.push_back(num.divexact(x_minus_1).eval_exact(x0));
  }
  return out;
}

Rat tutte_clan_closed(int r, int m, const Rat& x, const Rat& y) {
  return tutte_clan_sequence(r, m, x, y).back();
}

UniPoly flow_clan_poly(int m) {
  if (m < 1) throw guard_error("flow closed form: m >= 1 required");
  auto blocks = clan_spectrum(2);
  UniPoly zero("q");
  UniPoly y_repl("q", {Rat(1), Rat(-1)});  // y := 1 - q
  auto sums = block_power_sums(blocks, m, "q", [&](const BiPoly& c) {
    return c.substitute(zero, y_repl);
  });
  // F = (-1)^m sum_d mu_d(q) S_d(m) where S_d sums the T-eigenvalues at
  // (x, y) = (0, 1-q); the sign flips each eigenvalue into its flow version.
  UniPoly acc("q");
  for (size_t b = 0; b < blocks.size(); ++b)
    acc = acc + mu_poly(blocks[b].d) * sums[b][m];
  if (m % 2) acc = -acc;
  return acc;
}

Rat flow_clan_closed(int r, int m, const Rat& q) {
  if (r != 2) throw guard_error("flow closed form: explicit for r = 2 only");
  return flow_clan_poly(m).eval_exact(q);
}

namespace {

const UniPoly& rel_trace() {  // (3-2p)(4-6p+3p^2)
  static UniPoly s("p", {Rat(12), Rat(-26), Rat(21), Rat(-6)});
  return s;
}

const UniPoly& rel_disc() {
  static UniPoly r("p", {Rat(144), Rat(-640), Rat(1236), Rat(-1308), Rat(793),
                         Rat(-260), Rat(36)});
  return r;
}

}  // namespace

UniPoly reliability_discriminant() { return rel_disc(); }

UniPoly reliability_clan_poly(int m) {
  if (m < 1) throw guard_error("reliability closed form: m >= 1 required");
  const UniPoly& s = rel_trace();
  UniPoly prod = (s * s - rel_disc()).scaled(Rat(Int(1), Int(4)));
  // A_k = alpha1^k + alpha2^k and U_k = (alpha1^k - alpha2^k)/sqrt(R) both
  // obey t_k = s t_{k-1} - prod t_{k-2}; rational throughout.
  std::vector<UniPoly> A{UniPoly::constant("p", 2), s};
  std::vector<UniPoly> U{UniPoly("p"), UniPoly::constant("p", 1)};
  for (int k = 2; k <= m; ++k) {
    A.push_back(s * A[k - 1] - prod * A[k - 2]);
    U.push_back(s * U[k - 1] - prod * U[k - 2]);
  }
  UniPoly one_minus_p("p", {Rat(1), Rat(-1)});
  UniPoly alpha3 = one_minus_p.pow(3).scaled(Rat(2));
  UniPoly w("p", {Rat(36), Rat(-88), Rat(69), Rat(-18)});
  UniPoly B = A[m - 1].scaled(Rat(3, 2)) + (w * U[m - 1]).scaled(Rat(1, 2));
  UniPoly head = A[m] - alpha3.pow(m).scaled(Rat(3, 2));
  return UniPoly::monomial("p", 2 * m, 1) * head +
         (UniPoly::monomial("p", 2 * m - 1, Rat(m)) * one_minus_p.pow(4)) * B;
}

Rat reliability_clan_closed(int r, int m, const Rat& p) {
  if (r != 2) throw guard_error("reliability closed form: explicit for r = 2 only");
  return reliability_clan_poly(m).eval_exact(p);
}

Int acyclic_clan(int r, int m) {
  if (r < 1 || m < 1) throw guard_error("acyclic closed form: r, m >= 1 required");
  Int acc = pow_int(falling(Int(2 * r), r), m);
  for (int d = 1; d <= r; ++d) {
    Int base = falling(Int(r), d) * falling(Int(2 * r), r - d);
    Int term = 2 * pow_int(base, m);
    acc += (d % 2) ? -term : term;
  }
  return acc;
}

double alpha_clan(int r) {
  if (r < 1) throw guard_error("alpha_clan: r >= 1 required");
  return std::exp(log_int(falling(Int(2 * r), r)) / r);
}

// -------------------------------------------------- numeric lambda values

namespace {

std::vector<Cx> part_roots(const std::vector<BiPoly>& part, const Cx& x, const Cx& y) {
  int deg = (int)part.size() - 1;
  if (deg == 1) return {-part[1].eval_complex(x, y)};
  std::vector<Cx> asc(deg + 1);
  for (int i = 0; i <= deg; ++i) asc[deg - i] = part[i].eval_complex(x, y);
  auto roots = aberth_roots(asc);
  std::sort(roots.begin(), roots.end(), [](const Cx& a, const Cx& b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

}  // namespace

std::vector<std::vector<Cx>> clan_lambda_values(int r, const Cx& x, const Cx& y) {
  auto blocks = clan_spectrum(r);
  std::vector<std::vector<Cx>> out(blocks.back().d + 1);
  for (const auto& blk : blocks) {
    for (const auto& part : blk.parts) {
      auto roots = part_roots(part, x, y);
      out[blk.d].insert(out[blk.d].end(), roots.begin(), roots.end());
    }
  }
  return out;
}

std::vector<Cx> clan_chromatic_lambda_values(int r, const Cx& q) {
  std::vector<Cx> out;
  for (int d = 0; d <= r; ++d) out.push_back(clan_chromatic_lambda(r, d).eval_complex(q));
  return out;
}

std::vector<Cx> flow_lambda_values_r2(const Cx& q) {
  // Level 0: trace (q-2)(q^2-3q+4), disc (q-2)(q-3)(q^4-5q^3+14q^2-20q+12).
  Cx s0 = (q - 2.0) * (q * q - 3.0 * q + 4.0);
  Cx r0 = (q - 2.0) * (q - 3.0) *
          (((q - 5.0) * q + 14.0) * q * q - 20.0 * q + 12.0);
  // Level 1: trace q^3-5q^2+10q-10, disc q^6-10q^5+45q^4-120q^3+208q^2-224q+116.
  Cx s1 = ((q - 5.0) * q + 10.0) * q - 10.0;
  Cx r1 = (((((q - 10.0) * q + 45.0) * q - 120.0) * q + 208.0) * q - 224.0) * q + 116.0;
  Cx sq0 = std::sqrt(r0), sq1 = std::sqrt(r1);
  return {0.5 * (s0 + sq0), 0.5 * (s0 - sq0), 0.5 * (s1 + sq1), 0.5 * (s1 - sq1),
          Cx(-2.0, 0.0)};
}

std::vector<Cx> reliability_alpha_values(const Cx& p) {
  Cx s = (3.0 - 2.0 * p) * (3.0 * p * p - 6.0 * p + 4.0);
  Cx r = rel_disc().eval_complex(p);
  Cx sq = std::sqrt(r);
  Cx omp = 1.0 - p;
  return {0.5 * (s + sq), 0.5 * (s - sq), 2.0 * omp * omp * omp};
}

}  // namespace tk
