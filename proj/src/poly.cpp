#include "k3lat/poly.hpp"

#include <algorithm>
#include <sstream>

namespace k3lat {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::x() { return UniPoly(std::vector<Rat>{0, 1}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

int UniPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rat UniPoly::eval(const Rat& t) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Rat(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  std::vector<Rat> r = c_;
  for (auto& v : r) v *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  std::vector<Rat> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw MathError("polynomial division by zero");
  std::vector<Rat> rem = c_;
  const int dd = d.degree();
  std::vector<Rat> quo(std::max(0, degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    Rat f = rem[i] / d.leading();
    if (f == 0) continue;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<UniPoly> out;
  UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = p.divmod(a).first;
  UniPoly c = dp.divmod(a).first;
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences.
  const std::size_t n = xs.size();
  std::vector<Rat> coef = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly r;
  for (std::size_t i = n; i-- > 0;) r = r * UniPoly(std::vector<Rat>{-xs[i], 1}) + UniPoly::constant(coef[i]);
  return r;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    if (a != 1 || i == 0) s += a.get_str();
    if (i > 0) s += (a != 1 ? "*t" : "t") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(Terms terms) : t_(std::move(terms)) { trim(); }

BiPoly BiPoly::constant(const Rat& c) { return BiPoly(Terms{{{0, 0}, c}}); }
BiPoly BiPoly::x() { return BiPoly(Terms{{{1, 0}, 1}}); }
BiPoly BiPoly::y() { return BiPoly(Terms{{{0, 1}, 1}}); }

void BiPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
}

Rat BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rat(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
  return d;
}

int BiPoly::order() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = d < 0 ? e.first + e.second : std::min(d, e.first + e.second);
  return d;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

namespace {

Rat rat_pow(const Rat& b, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat r = 0;
  for (const auto& [e, c] : t_) r += c * rat_pow(x, e.first) * rat_pow(y, e.second);
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  Terms r = t_;
  for (const auto& [e, c] : o.t_) r[e] += c;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  Terms r = t_;
  for (const auto& [e, c] : o.t_) r[e] -= c;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  Terms r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::operator*(const Rat& s) const {
  Terms r = t_;
  for (auto& [e, c] : r) c *= s;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::dx() const {
  Terms r;
  for (const auto& [e, c] : t_)
    if (e.first > 0) r[{e.first - 1, e.second}] += c * Rat(e.first);
  return BiPoly(std::move(r));
}

BiPoly BiPoly::dy() const {
  Terms r;
  for (const auto& [e, c] : t_)
    if (e.second > 0) r[{e.first, e.second - 1}] += c * Rat(e.second);
  return BiPoly(std::move(r));
}

BiPoly BiPoly::pow(int e) const {
  BiPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiPoly BiPoly::homogeneous_part(int d) const {
  Terms r;
  for (const auto& [e, c] : t_)
    if (e.first + e.second == d) r[e] = c;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::translate(const Rat& a, const Rat& b) const {
  Terms r;
  for (const auto& [e, c] : t_)
    for (int i = 0; i <= e.first; ++i)
      for (int j = 0; j <= e.second; ++j)
        r[{i, j}] += c * Rat(binomial(e.first, i) * binomial(e.second, j)) * rat_pow(a, e.first - i) *
                     rat_pow(b, e.second - j);
  return BiPoly(std::move(r));
}

UniPoly BiPoly::restrict_y0() const { return at_y(0); }
UniPoly BiPoly::restrict_x0() const { return at_x(0); }

UniPoly BiPoly::at_y(const Rat& v) const {
  std::vector<Rat> r(std::max(0, degree_x() + 1));
  for (const auto& [e, c] : t_) r[e.first] += c * rat_pow(v, e.second);
  return UniPoly(std::move(r));
}

UniPoly BiPoly::at_x(const Rat& v) const {
  std::vector<Rat> r(std::max(0, degree_y() + 1));
  for (const auto& [e, c] : t_) r[e.second] += c * rat_pow(v, e.first);
  return UniPoly(std::move(r));
}

std::vector<UniPoly> BiPoly::coefficients_in_y() const {
  std::vector<std::vector<Rat>> raw(std::max(0, degree_y() + 1), std::vector<Rat>(std::max(0, degree_x() + 1)));
  for (const auto& [e, c] : t_) raw[e.second][e.first] = c;
  std::vector<UniPoly> out;
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

std::vector<UniPoly> BiPoly::coefficients_in_x() const { return swap_xy().coefficients_in_y(); }

BiPoly BiPoly::divide_by_y() const {
  Terms r;
  for (const auto& [e, c] : t_) {
    if (e.second == 0) throw MathError("polynomial is not divisible by y");
    r[{e.first, e.second - 1}] = c;
  }
  return BiPoly(std::move(r));
}

BiPoly BiPoly::swap_xy() const {
  Terms r;
  for (const auto& [e, c] : t_) r[{e.second, e.first}] = c;
  return BiPoly(std::move(r));
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    std::string mono;
    if (e.first > 0) mono += "x" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (e.second > 1 ? "^" + std::to_string(e.second) : "");
    if (mono.empty()) s += a.get_str();
    else s += (a != 1 ? a.get_str() + "*" : "") + mono;
  }
  return s;
}

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::vector<UniPoly> pc = p.coefficients_in_y(), qc = q.coefficients_in_y();
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return UniPoly::constant(1);
  const int bound = n * std::max(0, p.degree_x()) + m * std::max(0, q.degree_x());
  std::vector<Rat> xs, ys;
  for (int a = 0; a <= bound; ++a) {
    Rat xa = a;
    RatMatrix s(size, size);
    for (int r = 0; r < n; ++r)
      for (int i = 0; i <= m; ++i) s(r, r + i) = pc[m - i].eval(xa);
    for (int r = 0; r < m; ++r)
      for (int i = 0; i <= n; ++i) s(n + r, r + i) = qc[n - i].eval(xa);
    xs.push_back(xa);
    ys.push_back(det_rational(s));
  }
  return interpolate(xs, ys);
}

UniPoly resultant_x(const BiPoly& p, const BiPoly& q) { return resultant_y(p.swap_xy(), q.swap_xy()); }

// ---------------------------------------------------------------------------
// TriPoly

TriPoly::TriPoly(Terms terms) : t_(std::move(terms)) { trim(); }

TriPoly TriPoly::constant(const Rat& c) { return TriPoly(Terms{{{0, 0, 0}, c}}); }

TriPoly TriPoly::var(int i) {
  Exp e{0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  return TriPoly(Terms{{e, 1}});
}

TriPoly TriPoly::linear(const Rat& a0, const Rat& a1, const Rat& a2) {
  return TriPoly(Terms{{{1, 0, 0}, a0}, {{0, 1, 0}, a1}, {{0, 0, 1}, a2}});
}

void TriPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();) it = it->second == 0 ? t_.erase(it) : std::next(it);
}

Rat TriPoly::coeff(const Exp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rat(0) : it->second;
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool TriPoly::is_homogeneous() const {
  const int d = total_degree();
  return std::all_of(t_.begin(), t_.end(), [d](const auto& kv) {
    return kv.first[0] + kv.first[1] + kv.first[2] == d;
  });
}

Rat TriPoly::eval(const std::array<Rat, 3>& p) const {
  Rat r = 0;
  for (const auto& [e, c] : t_) r += c * rat_pow(p[0], e[0]) * rat_pow(p[1], e[1]) * rat_pow(p[2], e[2]);
  return r;
}

TriPoly TriPoly::operator+(const TriPoly& o) const {
  Terms r = t_;
  for (const auto& [e, c] : o.t_) r[e] += c;
  return TriPoly(std::move(r));
}

TriPoly TriPoly::operator-(const TriPoly& o) const {
  Terms r = t_;
  for (const auto& [e, c] : o.t_) r[e] -= c;
  return TriPoly(std::move(r));
}

TriPoly TriPoly::operator*(const TriPoly& o) const {
  Terms r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r[{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}] += c1 * c2;
  return TriPoly(std::move(r));
}

TriPoly TriPoly::operator*(const Rat& s) const {
  Terms r = t_;
  for (auto& [e, c] : r) c *= s;
  return TriPoly(std::move(r));
}

TriPoly TriPoly::pow(int e) const {
  TriPoly r = constant(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TriPoly TriPoly::partial(int i) const {
  const auto k = static_cast<std::size_t>(i);
  Terms r;
  for (const auto& [e, c] : t_) {
    if (e.at(k) == 0) continue;
    Exp f = e;
    --f[k];
    r[f] += c * Rat(e[k]);
  }
  return TriPoly(std::move(r));
}

TriPoly TriPoly::substitute_linear(const RatMatrix& m) const {
  std::array<TriPoly, 3> forms;
  for (std::size_t i = 0; i < 3; ++i) forms[i] = linear(m(i, 0), m(i, 1), m(i, 2));
  std::array<std::vector<TriPoly>, 3> powers;
  const int d = std::max(0, total_degree());
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(constant(1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * forms[i]);
  }
  TriPoly r;
  for (const auto& [e, c] : t_) r = r + powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * c;
  return r;
}

BiPoly TriPoly::dehomogenize(int chart) const {
  if (chart < 0 || chart > 2) throw MathError("chart index must be 0, 1 or 2");
  BiPoly::Terms r;
  for (const auto& [e, c] : t_) {
    std::vector<int> rest;
    for (int i = 0; i < 3; ++i)
      if (i != chart) rest.push_back(e[i]);
    r[{rest[0], rest[1]}] += c;
  }
  return BiPoly(std::move(r));
}

UniPoly TriPoly::along_line(const std::array<Rat, 3>& p, const std::array<Rat, 3>& d) const {
  std::array<UniPoly, 3> lin;
  for (std::size_t i = 0; i < 3; ++i) lin[i] = UniPoly(std::vector<Rat>{p[i], d[i]});
  UniPoly r;
  for (const auto& [e, c] : t_) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * lin[i];
    r = r + term;
  }
  return r;
}

std::string TriPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rat a = abs(c);
    std::string mono;
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0)
        mono += (mono.empty() ? "" : "*") + std::string("x") + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    if (mono.empty()) s += a.get_str();
    else s += (a != 1 ? a.get_str() + "*" : "") + mono;
  }
  return s;
}

}  // namespace k3lat
