#pragma once
// Exact polynomial arithmetic: dense univariate over rationals (UniPoly) and
// sparse bivariate over big integers (BiPoly).  Both carry variable names and
// refuse mixed-context arithmetic, which catches plumbing mistakes between the
// (x,y) and (q,v) worlds at run time.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tuttekit/common.hpp"

namespace tk {

class UniPoly {
 public:
  explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<Rat> coeffs);

  static UniPoly constant(const std::string& var, const Rat& c);
  static UniPoly monomial(const std::string& var, int k, const Rat& c = Rat(1));

  const std::string& var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rat(0); }
  Rat lead() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly scaled(const Rat& s) const;
  UniPoly pow(int e) const;
  UniPoly derivative() const;
  UniPoly compose(const UniPoly& inner) const;  // result in inner's variable

  Rat eval_exact(const Rat& x0) const;
  Cx eval_complex(const Cx& z) const;  // Horner in double precision

  // Exact division; guard_error if the divisor is zero or the remainder is not.
  UniPoly divexact(const UniPoly& d) const;
  static void divmod(const UniPoly& a, const UniPoly& d, UniPoly& quo, UniPoly& rem);

  std::string str() const;

 private:
  void normalize();
  void check_var(const UniPoly& o) const;
  std::string var_;
  std::vector<Rat> c_;  // c_[k] * var^k; trailing zeros stripped
};

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (exponent of vx, exponent of vy)

  BiPoly() : vx_("x"), vy_("y") {}
  BiPoly(std::string vx, std::string vy) : vx_(std::move(vx)), vy_(std::move(vy)) {}

  static BiPoly constant(const Int& c, const std::string& vx = "x",
                         const std::string& vy = "y");
  static BiPoly monomial(int i, int j, const Int& c, const std::string& vx = "x",
                         const std::string& vy = "y");

  const std::string& var_x() const { return vx_; }
  const std::string& var_y() const { return vy_; }
  const std::map<Key, Int>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Int coeff(int i, int j) const;
  void add_term(int i, int j, const Int& c);
  int total_degree() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const {
    return vx_ == o.vx_ && vy_ == o.vy_ && t_ == o.t_;
  }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly scaled(const Int& s) const;
  BiPoly mul_mono(int i, int j, const Int& c) const;
  BiPoly pow(int e) const;
  // Exact division by an integer scalar; guard_error on any non-divisible term.
  BiPoly divexact_scalar(const Int& s) const;

  Rat eval_exact(const Rat& x0, const Rat& y0) const;
  Cx eval_complex(const Cx& x0, const Cx& y0) const;

  // Partial evaluation and substitution (results are univariate).
  UniPoly eval_partial_y(const Rat& y0) const;  // polynomial in vx
  UniPoly eval_partial_x(const Rat& x0) const;  // polynomial in vy
  UniPoly substitute(const UniPoly& px, const UniPoly& py) const;

  BiPoly with_vars(const std::string& vx, const std::string& vy) const;

  // Terms ordered by total degree descending, then lexicographically by
  // (i, j) descending; this is also the printing order.
  std::vector<std::pair<Key, Int>> sorted_terms() const;
  std::string str() const;

 private:
  void check_vars(const BiPoly& o) const;
  std::string vx_, vy_;
  std::map<Key, Int> t_;  // zero coefficients never stored
};

}  // namespace tk
