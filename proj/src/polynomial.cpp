#include "tuttekit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace tk {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::constant(const std::string& var, const Rat& c) {
  return UniPoly(var, std::vector<Rat>{c});
}

UniPoly UniPoly::monomial(const std::string& var, int k, const Rat& c) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return UniPoly(var, std::move(v));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::check_var(const UniPoly& o) const {
  if (var_ != o.var_)
    throw guard_error("univariate arithmetic across different variables: " + var_ +
                      " vs " + o.var_);
}

Rat UniPoly::lead() const {
  if (c_.empty()) throw guard_error("lead coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  check_var(o);
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& v : r) v = -v;
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  check_var(o);
  if (c_.empty() || o.c_.empty()) return UniPoly(var_);
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::scaled(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& v : r) v *= s;
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw guard_error("negative polynomial power");
  UniPoly r = constant(var_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(var_);
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat((long)i);
  return UniPoly(var_, std::move(r));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(inner.var());
  for (int k = degree(); k >= 0; --k) {
    acc = acc * inner + constant(inner.var(), c_[k]);
  }
  return acc;
}

Rat UniPoly::eval_exact(const Rat& x0) const {
  Rat acc(0);
  for (int k = degree(); k >= 0; --k) acc = acc * x0 + c_[k];
  return acc;
}

Cx UniPoly::eval_complex(const Cx& z) const {
  Cx acc(0.0, 0.0);
  for (int k = degree(); k >= 0; --k) acc = acc * z + Cx(c_[k].get_d(), 0.0);
  return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& d, UniPoly& quo, UniPoly& rem) {
  a.check_var(d);
  if (d.is_zero()) throw guard_error("polynomial division by zero");
  std::vector<Rat> r = a.c_;
  int dd = d.degree();
  Rat dl = d.lead();
  std::vector<Rat> q(std::max<int>(0, a.degree() - dd + 1), Rat(0));
  for (int k = a.degree(); k >= dd; --k) {
    if (r[k] == 0) continue;
    Rat f = r[k] / dl;
    q[k - dd] = f;
    for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.c_[i];
  }
  quo = UniPoly(a.var_, std::move(q));
  rem = UniPoly(a.var_, std::move(r));
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
  UniPoly q(var_), r(var_);
  divmod(*this, d, q, r);
  if (!r.is_zero())
    throw guard_error("inexact polynomial division (nonzero remainder in " + var_ + ")");
  return q;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    Rat a = c_[k];
    bool neg = a < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Rat mag = neg ? Rat(-a) : a;
    bool unit = (mag == 1) && k > 0;
    if (!unit) os << rat_to_string(mag);
    if (k > 0) {
      os << var_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Int& c, const std::string& vx, const std::string& vy) {
  return monomial(0, 0, c, vx, vy);
}

BiPoly BiPoly::monomial(int i, int j, const Int& c, const std::string& vx,
                        const std::string& vy) {
  BiPoly p(vx, vy);
  p.add_term(i, j, c);
  return p;
}

void BiPoly::check_vars(const BiPoly& o) const {
  if (vx_ != o.vx_ || vy_ != o.vy_)
    throw guard_error("bivariate arithmetic across different variable pairs: (" + vx_ +
                      "," + vy_ + ") vs (" + o.vx_ + "," + o.vy_ + ")");
}

Int BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Int& c) {
  if (i < 0 || j < 0) throw guard_error("negative exponent in bivariate term");
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(Key{i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
  return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  check_vars(o);
  BiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r(vx_, vy_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  check_vars(o);
  BiPoly r(vx_, vy_);
  for (const auto& [ka, ca] : t_)
    for (const auto& [kb, cb] : o.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Int& s) const {
  BiPoly r(vx_, vy_);
  if (s == 0) return r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
  return r;
}

BiPoly BiPoly::mul_mono(int i, int j, const Int& c) const {
  BiPoly r(vx_, vy_);
  if (c == 0) return r;
  for (const auto& [k, v] : t_) r.add_term(k.first + i, k.second + j, v * c);
  return r;
}

BiPoly BiPoly::pow(int e) const {
  if (e < 0) throw guard_error("negative polynomial power");
  BiPoly r = constant(1, vx_, vy_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

BiPoly BiPoly::divexact_scalar(const Int& s) const {
  if (s == 0) throw guard_error("division by zero scalar");
  BiPoly r(vx_, vy_);
  for (const auto& [k, c] : t_) {
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    if (rem != 0) throw guard_error("inexact scalar division of a bivariate polynomial");
    r.t_.emplace(k, q);
  }
  return r;
}

Rat BiPoly::eval_exact(const Rat& x0, const Rat& y0) const {
  std::map<int, Rat> rows;  // x-exponent -> value of the y-slice at y0
  for (const auto& [k, c] : t_) rows[k.first] += Rat(c) * pow_rat(y0, k.second);
  Rat result(0);
  for (const auto& [i, row] : rows) result += pow_rat(x0, i) * row;
  return result;
}

Cx BiPoly::eval_complex(const Cx& x0, const Cx& y0) const {
  std::map<int, Cx> rows;
  for (const auto& [k, c] : t_) {
    Cx yp(1.0, 0.0);
    for (int j = 0; j < k.second; ++j) yp *= y0;
    rows[k.first] += Cx(c.get_d(), 0.0) * yp;
  }
  Cx result(0.0, 0.0);
  for (const auto& [i, row] : rows) {
    Cx xp(1.0, 0.0);
    for (int a = 0; a < i; ++a) xp *= x0;
    result += xp * row;
  }
  return result;
}

UniPoly BiPoly::eval_partial_y(const Rat& y0) const {
  std::vector<Rat> c;
  for (const auto& [k, v] : t_) {
    if ((int)c.size() <= k.first) c.resize(k.first + 1, Rat(0));
    c[k.first] += Rat(v) * pow_rat(y0, k.second);
  }
  return UniPoly(vx_, std::move(c));
}

UniPoly BiPoly::eval_partial_x(const Rat& x0) const {
  std::vector<Rat> c;
  for (const auto& [k, v] : t_) {
    if ((int)c.size() <= k.second) c.resize(k.second + 1, Rat(0));
    c[k.second] += Rat(v) * pow_rat(x0, k.first);
  }
  return UniPoly(vy_, std::move(c));
}

UniPoly BiPoly::substitute(const UniPoly& px, const UniPoly& py) const {
  if (px.var() != py.var())
    throw guard_error("substitute: replacement polynomials use different variables");
  const std::string& v = px.var();
  int max_i = 0, max_j = 0;
  for (const auto& [k, c] : t_) {
    max_i = std::max(max_i, k.first);
    max_j = std::max(max_j, k.second);
  }
  std::vector<UniPoly> xp(max_i + 1, UniPoly::constant(v, 1));
  std::vector<UniPoly> yp(max_j + 1, UniPoly::constant(v, 1));
  for (int i = 1; i <= max_i; ++i) xp[i] = xp[i - 1] * px;
  for (int j = 1; j <= max_j; ++j) yp[j] = yp[j - 1] * py;
  UniPoly acc(v);
  for (const auto& [k, c] : t_)
    acc = acc + (xp[k.first] * yp[k.second]).scaled(Rat(c));
  return acc;
}

BiPoly BiPoly::with_vars(const std::string& vx, const std::string& vy) const {
  BiPoly r(vx, vy);
  r.t_ = t_;
  return r;
}

std::vector<std::pair<BiPoly::Key, Int>> BiPoly::sorted_terms() const {
  std::vector<std::pair<Key, Int>> ts(t_.begin(), t_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first > b.first;  // lexicographic on (i, j), descending
  });
  return ts;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : sorted_terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    Int mag = neg ? Int(-c) : c;
    bool has_var = k.first > 0 || k.second > 0;
    if (mag != 1 || !has_var) os << mag.get_str();
    if (k.first > 0) {
      os << vx_;
      if (k.first > 1) os << "^" << k.first;
    }
    if (k.second > 0) {
      os << vy_;
      if (k.second > 1) os << "^" << k.second;
    }
    first = false;
  }
  return os.str();
}

}  // namespace tk
