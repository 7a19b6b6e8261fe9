#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

Rat det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

k3lat::Signature signature(const IntMatrix& sym) {
  const std::size_t n = sym.rows();
  using M = std::vector<std::vector<Rat>>;
  auto mul = [n](const M& x, const M& y) {
    M z(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  M a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(sym(i, j));
  // char poly coefficients c[k] of t^(n-k), c[0] = 1
  std::vector<Rat> c(n + 1);
  c[0] = 1;
  M mk(n, std::vector<Rat>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[k - 1];
    M am = mul(a, mk);
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[k] = -tr / Rat(static_cast<long>(k));
    mk = am;
  }
  auto sign_changes = [](const std::vector<Rat>& v) {
    int changes = 0, last = 0;
    for (const auto& x : v) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  std::size_t zero = 0;
  while (zero < n && c[n - zero] == 0) ++zero;
  std::vector<Rat> pos(c.begin(), c.end() - zero), neg = pos;
  const std::size_t deg = pos.size() - 1;
  for (std::size_t k = 0; k <= deg; ++k)
    if ((deg - k) % 2 == 1) neg[k] = -neg[k];
  return {sign_changes(pos), sign_changes(neg), static_cast<int>(zero)};
}

namespace {

void minors(const IntMatrix& m, std::size_t k, std::vector<std::size_t>& rows, std::size_t r0, Int& g) {
  if (rows.size() == k) {
    std::vector<std::size_t> cols;
    std::function<void(std::size_t)> rec = [&](std::size_t c0) {
      if (cols.size() == k) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Rat d = det(sub);
        g = gcd(g, Int(abs(d.get_num())));
        return;
      }
      for (std::size_t c = c0; c < m.cols(); ++c) {
        cols.push_back(c);
        rec(c + 1);
        cols.pop_back();
      }
    };
    rec(0);
    return;
  }
  for (std::size_t r = r0; r < m.rows(); ++r) {
    rows.push_back(r);
    minors(m, k, rows, r + 1, g);
    rows.pop_back();
  }
}

}  // namespace

IntVector invariant_factors(const IntMatrix& m) {
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Int g = 0;
    std::vector<std::size_t> rows;
    minors(m, k, rows, 0, g);
    if (g == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::vector<IntVector> roots_by_box(const IntMatrix& g) {
  const std::size_t n = g.rows();
  // column i of (-G)^{-1} by solving, diagonal entry via Cramer
  Rat d = det(g);
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == i) continue;
        minor(rr, cc++) = g(r, c);
      }
      ++rr;
    }
    Rat inv_ii = -det(minor) / d;  // ((-G)^{-1})_ii
    bound[i] = static_cast<long>(std::floor(std::sqrt(2.0 * inv_ii.get_d()) + 1e-9));
  }
  std::vector<IntVector> out;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    Int q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q += g(i, j) * x[i] * x[j];
    if (q == -2) {
      IntVector v;
      for (long c : x) v.push_back(Int(c));
      out.push_back(v);
    }
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) {
      x[i] = -bound[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> roots_by_orbit(const IntMatrix& g) {
  const std::size_t n = g.rows();
  std::set<IntVector> seen;
  std::vector<IntVector> todo;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVector v = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Int p = 0;
      for (std::size_t j = 0; j < n; ++j) p += g(i, j) * v[j];
      IntVector w = v;
      w[i] += p;  // s_i(v) = v + <v, e_i> e_i
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<long> theta(long a, long b, long c, int k) {
  std::vector<long> r(k, 0);
  const long lim = 4 * k + 4;
  for (long x = -lim; x <= lim; ++x)
    for (long y = -lim; y <= lim; ++y) {
      long q = a * x * x + 2 * b * x * y + c * y * y;
      if (q > 0 && q <= 2 * k && q % 2 == 0) ++r[q / 2 - 1];
    }
  return r;
}

Rat milnor_quasihomogeneous(const Rat& w1, const Rat& w2) { return (1 / w1 - 1) * (1 / w2 - 1); }

long order_along_graph(const k3lat::BiPoly& g, const k3lat::UniPoly& p) {
  k3lat::UniPoly acc;
  k3lat::UniPoly ppow = k3lat::UniPoly::constant(1);
  int maxy = g.degree_y();
  std::vector<k3lat::UniPoly> powers{ppow};
  for (int j = 1; j <= maxy; ++j) powers.push_back(powers.back() * p);
  for (const auto& [e, c] : g.terms()) {
    std::vector<Rat> xs(e.first + 1);
    xs[e.first] = c;
    acc = acc + k3lat::UniPoly(xs) * powers[e.second];
  }
  if (acc.is_zero()) return -1;
  return acc.order();
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
