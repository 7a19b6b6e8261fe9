#pragma once

// Exact rational polynomials in one, two and three variables.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/exactmat.hpp"

namespace k3lat {

/// Dense univariate polynomial, coefficients from degree 0 up, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  static UniPoly constant(const Rat& c);
  static UniPoly x();

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  /// Multiplicity of 0 as a root; -1 for the zero polynomial.
  int order() const;
  Rat eval(const Rat& t) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Quotient and remainder.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Yun's algorithm: result[i] is the product of the irreducible factors of
/// multiplicity i + 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);
/// Polynomial through (xs[i], ys[i]); the xs must be distinct.
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Sparse polynomial in x, y; key (i, j) stands for x^i y^j.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rat>;
  BiPoly() = default;
  explicit BiPoly(Terms terms);
  static BiPoly constant(const Rat& c);
  static BiPoly x();
  static BiPoly y();

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rat coeff(int i, int j) const;
  int total_degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  int degree_x() const;
  int degree_y() const;
  Rat eval(const Rat& x, const Rat& y) const;
  Rat constant_term() const { return coeff(0, 0); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Rat& s) const;
  BiPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const BiPoly& o) const { return t_ == o.t_; }

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly pow(int e) const;
  /// The degree-d homogeneous part.
  BiPoly homogeneous_part(int d) const;
  /// p(x + a, y + b)
  BiPoly translate(const Rat& a, const Rat& b) const;
  /// p(x, 0) and p(0, y).
  UniPoly restrict_y0() const;
  UniPoly restrict_x0() const;
  /// p(x, c) as a polynomial in x, p(c, y) as a polynomial in y.
  UniPoly at_y(const Rat& c) const;
  UniPoly at_x(const Rat& c) const;
  /// Coefficients of p viewed in Q[x][y] (index = power of y), and vice versa.
  std::vector<UniPoly> coefficients_in_y() const;
  std::vector<UniPoly> coefficients_in_x() const;
  /// p / y, requires y | p.
  BiPoly divide_by_y() const;
  BiPoly swap_xy() const;

  std::string to_string() const;

 private:
  void trim();
  Terms t_;
};

/// Resultant eliminating y, as a polynomial in x (formal degrees in y).
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);
/// Resultant eliminating x, as a polynomial in y.
UniPoly resultant_x(const BiPoly& p, const BiPoly& q);

/// Sparse polynomial in x0, x1, x2.
class TriPoly {
 public:
  using Exp = std::array<int, 3>;
  using Terms = std::map<Exp, Rat>;
  TriPoly() = default;
  explicit TriPoly(Terms terms);
  static TriPoly constant(const Rat& c);
  static TriPoly var(int i);
  /// a0 x0 + a1 x1 + a2 x2
  static TriPoly linear(const Rat& a0, const Rat& a1, const Rat& a2);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rat coeff(const Exp& e) const;
  int total_degree() const;
  bool is_homogeneous() const;
  Rat eval(const std::array<Rat, 3>& p) const;

  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator-(const TriPoly& o) const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly operator*(const Rat& s) const;
  bool operator==(const TriPoly& o) const { return t_ == o.t_; }

  TriPoly pow(int e) const;
  TriPoly partial(int i) const;
  /// Substitute x_i = sum_j m(i, j) X_j.
  TriPoly substitute_linear(const RatMatrix& m) const;
  /// Set x_chart = 1; the remaining variables, in increasing index order, become x, y.
  BiPoly dehomogenize(int chart) const;
  /// f(p + t d) as a polynomial in t.
  UniPoly along_line(const std::array<Rat, 3>& p, const std::array<Rat, 3>& d) const;

  std::string to_string() const;

 private:
  void trim();
  Terms t_;
};

std::string to_string(const UniPoly& p);

}  // namespace k3lat
