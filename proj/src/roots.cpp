#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

#include "k3lat/fibrations.hpp"

namespace k3lat {

namespace {

// Q(x) = sum_i d_i (x_i + sum_{j>i} m_ij x_j)^2
struct Decomposition {
  RatVector d;
  RatMatrix m;
};

Decomposition decompose(const IntMatrix& q) {
  const std::size_t n = q.rows();
  Decomposition dc{RatVector(n), RatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    Rat di = Rat(q(i, i));
    for (std::size_t k = 0; k < i; ++k) di -= dc.d[k] * dc.m(k, i) * dc.m(k, i);
    if (di <= 0) throw MathError("short vector enumeration requires a positive definite form");
    dc.d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = Rat(q(i, j));
      for (std::size_t k = 0; k < i; ++k) v -= dc.d[k] * dc.m(k, i) * dc.m(k, j);
      dc.m(i, j) = v / di;
    }
  }
  return dc;
}

Int floor_of(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

Int ceil_of(const Rat& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

// Integer range containing every x with d (x - c)^2 <= budget.
std::pair<Int, Int> coordinate_range(const Rat& c, const Rat& budget, const Rat& d) {
  Rat r = budget / d;
  Int s;
  Int fl = floor_of(r);
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  s += 1;
  return {ceil_of(c - Rat(s)), floor_of(c + Rat(s))};
}

class Enumerator {
 public:
  Enumerator(const Decomposition& dc, const Int& target) : dc_(dc), target_(target), n_(dc.d.size()) {}

  Rat center(const IntVector& x, std::size_t i) const {
    Rat c = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (x[j] != 0) c -= dc_.m(i, j) * Rat(x[j]);
    return c;
  }

  void recurse(IntVector& x, std::size_t i, const Rat& budget, std::vector<IntVector>& out) const {
    Rat c = center(x, i);
    auto [lo, hi] = coordinate_range(c, budget, dc_.d[i]);
    for (Int v = lo; v <= hi; ++v) {
      Rat diff = Rat(v) - c;
      Rat used = dc_.d[i] * diff * diff;
      if (used > budget) continue;
      x[i] = v;
      Rat rest = budget - used;
      if (i == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        recurse(x, i - 1, rest, out);
      }
    }
    x[i] = 0;
  }

  std::vector<Int> top_values() const {
    auto [lo, hi] = coordinate_range(Rat(0), Rat(target_), dc_.d[n_ - 1]);
    std::vector<Int> vals;
    for (Int v = lo; v <= hi; ++v)
      if (dc_.d[n_ - 1] * Rat(v * v) <= Rat(target_)) vals.push_back(v);
    return vals;
  }

  void branch(const Int& top, std::vector<IntVector>& out) const {
    IntVector x(n_);
    x[n_ - 1] = top;
    Rat rest = Rat(target_) - dc_.d[n_ - 1] * Rat(top * top);
    if (n_ == 1) {
      if (rest == 0) out.push_back(x);
      return;
    }
    recurse(x, n_ - 2, rest, out);
  }

  std::size_t dim() const { return n_; }

 private:
  const Decomposition& dc_;
  Int target_;
  std::size_t n_;
};

void check_input(const IntMatrix& q) {
  if (!q.is_symmetric()) throw MathError("short vector enumeration requires a symmetric form");
}

}  // namespace

std::vector<IntVector> short_vectors_serial(const IntMatrix& posdef, const Int& target) {
  check_input(posdef);
  if (posdef.rows() == 0) return {};
  Decomposition dc = decompose(posdef);
  Enumerator en(dc, target);
  std::vector<IntVector> out;
  for (const auto& top : en.top_values()) en.branch(top, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> short_vectors(const IntMatrix& posdef, const Int& target) {
  check_input(posdef);
  if (posdef.rows() == 0) return {};
  Decomposition dc = decompose(posdef);
  Enumerator en(dc, target);
  const std::vector<Int> tops = en.top_values();
  std::vector<std::vector<IntVector>> parts(tops.size());
  const long count = static_cast<long>(tops.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < count; ++t) en.branch(tops[t], parts[t]);
  std::vector<IntVector> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

IntMatrix negated(const IntMatrix& g) {
  IntMatrix r = g;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

void require_negative_definite(const Lattice& l) {
  if (!l.is_negative_definite()) throw MathError("not negative definite");
}

}  // namespace

std::vector<IntVector> enumerate_roots(const Lattice& l) {
  require_negative_definite(l);
  return short_vectors(negated(l.gram()), Int(2));
}

std::vector<IntVector> enumerate_roots_serial(const Lattice& l) {
  require_negative_definite(l);
  return short_vectors_serial(negated(l.gram()), Int(2));
}

IntVector reflection(const Lattice& l, const IntVector& delta, const IntVector& x) {
  if (l.norm(delta) != -2) throw MathError("reflection vector is not a (-2)-root");
  Int p = l.pair(x, delta);
  IntVector r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += p * delta[i];
  return r;
}

// ---------------------------------------------------------------------------
// Dynkin classification

namespace {

std::optional<DynkinComponent> classify_tree(const std::vector<std::vector<std::size_t>>& adj,
                                             const std::vector<std::size_t>& nodes) {
  const int k = static_cast<int>(nodes.size());
  std::size_t edges = 0;
  std::vector<std::size_t> branch;
  for (auto v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  edges /= 2;
  if (edges + 1 != nodes.size()) return std::nullopt;
  if (branch.empty()) return DynkinComponent{'A', k};
  if (branch.size() > 1) return std::nullopt;
  std::vector<int> arms;
  for (auto start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return DynkinComponent{'D', k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinComponent{'E', k};
  return std::nullopt;
}

}  // namespace

RootClassification classify_root_lattice(const Lattice& l) {
  RootClassification rc;
  const std::size_t n = l.rank();
  rc.negative_definite = l.is_negative_definite();
  if (!rc.negative_definite) {
    rc.label = "not negative definite";
    return rc;
  }
  std::vector<IntVector> roots = enumerate_roots(l);
  rc.root_count = roots.size();
  if (roots.empty()) {
    rc.label = "0";
    rc.is_root_lattice = (n == 0);
    rc.simple_roots = IntMatrix(n, 0);
    return rc;
  }

  IntMatrix all = IntMatrix::from_columns(roots, n);
  SnfResult s = snf(all);
  rc.root_sublattice_rank = s.rank();
  if (rc.root_sublattice_rank == n) {
    rc.root_sublattice_index = 1;
    for (const auto& d : s.diag) rc.root_sublattice_index *= d;
  }
  rc.is_root_lattice = (rc.root_sublattice_rank == n && rc.root_sublattice_index == 1);

  // Generic functional f(x) = sum M^i x_i with M exceeding twice any |coordinate|.
  Int maxabs = 0;
  for (const auto& r : roots)
    for (const auto& c : r) maxabs = std::max(maxabs, Int(abs(c)));
  Int base = 2 * maxabs + 1;
  auto functional = [&](const IntVector& x) {
    Int f = 0, w = 1;
    for (std::size_t i = 0; i < n; ++i) {
      f += w * x[i];
      w *= base;
    }
    return f;
  };
  std::vector<IntVector> positive;
  for (const auto& r : roots)
    if (functional(r) > 0) positive.push_back(r);
  std::set<IntVector> pos_set(positive.begin(), positive.end());
  std::vector<IntVector> simple;
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive) {
      if (b == a) continue;
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = a[i] - b[i];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  std::sort(simple.begin(), simple.end(), [&](const IntVector& x, const IntVector& y) {
    return functional(x) < functional(y);
  });
  rc.simple_roots = IntMatrix::from_columns(simple, n);

  const std::size_t k = simple.size();
  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Int p = l.pair(simple[i], simple[j]);
      if (p == 0) continue;
      if (p != 1) throw MathError("simple roots with pairing " + p.get_str() + " (internal error)");
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  std::vector<bool> seen(k, false);
  for (std::size_t s0 = 0; s0 < k; ++s0) {
    if (seen[s0]) continue;
    std::vector<std::size_t> comp{s0}, stack{s0};
    seen[s0] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    auto c = classify_tree(adj, comp);
    if (!c) throw MathError("simple root graph is not a Dynkin diagram (internal error)");
    rc.components.push_back(*c);
  }
  std::sort(rc.components.begin(), rc.components.end(), [](const DynkinComponent& a, const DynkinComponent& b) {
    if (a.type != b.type) return a.type < b.type;
    return a.rank > b.rank;
  });
  for (std::size_t i = 0; i < rc.components.size(); ++i) rc.label += (i ? "+" : "") + rc.components[i].name();
  return rc;
}

}  // namespace k3lat
