#include "k3lat/discform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace k3lat {

Rat mod2(const Rat& x) {
  Int fl;
  Int twice_den = 2 * x.get_den();
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), twice_den.get_mpz_t());
  Rat r = x - Rat(2 * fl);
  r.canonicalize();
  return r;
}

Rat mod1(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rat r = x - Rat(fl);
  r.canonicalize();
  return r;
}

namespace {

Int mod_pos(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int lcm_of(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(IntVector orders, RatVector q_values, RatMatrix pairings)
    : orders_(std::move(orders)), q_values_(std::move(q_values)), pairings_(std::move(pairings)) {
  const std::size_t k = orders_.size();
  if (q_values_.size() != k || pairings_.rows() != k || pairings_.cols() != k)
    throw MathError("finite quadratic form: inconsistent sizes");
  for (const auto& d : orders_)
    if (d <= 1) throw MathError("finite quadratic form: generator orders must exceed 1");
  for (std::size_t i = 0; i < k; ++i) {
    q_values_[i] = mod2(q_values_[i]);
    for (std::size_t j = 0; j < k; ++j) pairings_(i, j) = mod1(pairings_(i, j));
    if (pairings_(i, i) != mod1(q_values_[i])) throw MathError("finite quadratic form: diagonal pairing mismatch");
  }
}

Int FiniteQuadraticForm::size() const {
  Int s = 1;
  for (const auto& d : orders_) s *= d;
  return s;
}

Rat FiniteQuadraticForm::q(const IntVector& x) const {
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    s += Rat(x[i] * x[i]) * q_values_[i];
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (x[j] != 0) s += 2 * Rat(x[i] * x[j]) * pairings_(i, j);
  }
  return mod2(s);
}

Rat FiniteQuadraticForm::b(const IntVector& x, const IntVector& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j)
      if (y[j] != 0) s += Rat(x[i] * y[j]) * pairings_(i, j);
  }
  return mod1(s);
}

IntVector FiniteQuadraticForm::reduce(IntVector x) const {
  for (std::size_t i = 0; i < orders_.size(); ++i) x[i] = mod_pos(x[i], orders_[i]);
  return x;
}

IntVector FiniteQuadraticForm::add(const IntVector& x, const IntVector& y) const {
  IntVector r(orders_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] + y[i];
  return reduce(std::move(r));
}

Int FiniteQuadraticForm::order_of(const IntVector& x) const {
  Int ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Int g;
    Int xi = mod_pos(x[i], orders_[i]);
    mpz_gcd(g.get_mpz_t(), xi.get_mpz_t(), orders_[i].get_mpz_t());
    ord = lcm_of(ord, orders_[i] / g);
  }
  return ord;
}

IntVector FiniteQuadraticForm::element(Int index) const {
  IntVector x(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x[i] = mod_pos(index, orders_[i]);
    index /= orders_[i];
  }
  return x;
}

std::vector<IntVector> FiniteQuadraticForm::elements() const {
  std::vector<IntVector> out;
  Int n = size();
  out.reserve(n.get_ui());
  for (Int i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

void FiniteQuadraticForm::set_lift(RatMatrix lift, RatMatrix to_coeffs) {
  if (lift.cols() != orders_.size() || to_coeffs.rows() != orders_.size() || lift.rows() != to_coeffs.cols())
    throw MathError("finite quadratic form: lift shape mismatch");
  lift_ = std::move(lift);
  to_coeffs_ = std::move(to_coeffs);
}

RatVector FiniteQuadraticForm::lift_of(const IntVector& x) const {
  if (!lift_) throw MathError("finite quadratic form carries no lift");
  RatVector v(lift_->rows());
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] != 0)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rat(x[j]) * (*lift_)(i, j);
  return v;
}

IntVector FiniteQuadraticForm::element_of_dual(const RatVector& z) const {
  if (!to_coeffs_) throw MathError("finite quadratic form carries no coordinate map");
  RatVector c = (*to_coeffs_) * z;
  IntVector x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() != 1) throw MathError("vector is not in the dual lattice");
    x[i] = c[i].get_num();
  }
  return reduce(std::move(x));
}

// ---------------------------------------------------------------------------

FiniteQuadraticForm disc_form_of(const Lattice& l) {
  if (!l.is_even()) throw MathError("discriminant form requires an even lattice");
  const IntMatrix& g = l.gram();
  const std::size_t n = g.rows();
  if (det_exact(g) == 0) throw MathError("discriminant form requires a nondegenerate lattice");
  SnfResult s = snf(g);
  RatMatrix vinv = inverse(to_rational(s.right));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (s.diag[i] > 1) idx.push_back(i);
  const std::size_t k = idx.size();
  IntVector orders(k);
  RatMatrix lift(n, k), to_coeffs(k, n);
  for (std::size_t a = 0; a < k; ++a) {
    const Int& d = s.diag[idx[a]];
    orders[a] = d;
    for (std::size_t i = 0; i < n; ++i) {
      lift(i, a) = Rat(s.right(i, idx[a]), d);
      lift(i, a).canonicalize();
    }
    for (std::size_t i = 0; i < n; ++i) to_coeffs(a, i) = vinv(idx[a], i) * Rat(d);
  }
  RatMatrix gr = to_rational(g);
  RatVector qv(k);
  RatMatrix pr(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Rat v = bilinear(gr, lift.column(a), lift.column(b));
      if (a == b) qv[a] = v;
      pr(a, b) = v;
      pr(b, a) = v;
    }
  FiniteQuadraticForm q(std::move(orders), std::move(qv), std::move(pr));
  q.set_lift(std::move(lift), std::move(to_coeffs));
  return q;
}

int length_of(const FiniteQuadraticForm& q) { return static_cast<int>(q.num_generators()); }

NikulinCheck nikulin_hypothesis(const Lattice& l) {
  NikulinCheck c;
  c.rank = l.rank();
  c.length = length_of(disc_form_of(l));
  Signature s = l.signature();
  c.indefinite = s.plus > 0 && s.minus > 0;
  c.rank_condition = static_cast<long>(c.rank) >= c.length + 2;
  return c;
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& q) {
  const std::size_t k = q.num_generators();
  RatVector qv(k);
  RatMatrix pr(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    qv[i] = -q.q_values()[i];
    for (std::size_t j = 0; j < k; ++j) pr(i, j) = -q.pairings()(i, j);
  }
  FiniteQuadraticForm r(q.orders(), std::move(qv), std::move(pr));
  if (q.lift()) r.set_lift(*q.lift(), *q.to_coefficients());
  return r;
}

FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& parts) {
  IntVector orders;
  RatVector qv;
  std::size_t k = 0, n = 0;
  bool lifts = !parts.empty();
  for (const auto& p : parts) {
    k += p.num_generators();
    if (!p.lift()) lifts = false;
    else n += p.lift()->rows();
  }
  RatMatrix pr(k, k), lift(n, k), to_coeffs(k, n);
  std::size_t off = 0, roff = 0;
  for (const auto& p : parts) {
    const std::size_t pk = p.num_generators();
    for (std::size_t i = 0; i < pk; ++i) {
      orders.push_back(p.orders()[i]);
      qv.push_back(p.q_values()[i]);
      for (std::size_t j = 0; j < pk; ++j) pr(off + i, off + j) = p.pairings()(i, j);
    }
    if (lifts) {
      const std::size_t pn = p.lift()->rows();
      for (std::size_t i = 0; i < pn; ++i)
        for (std::size_t j = 0; j < pk; ++j) {
          lift(roff + i, off + j) = (*p.lift())(i, j);
          to_coeffs(off + j, roff + i) = (*p.to_coefficients())(j, i);
        }
      roff += pn;
    }
    off += pk;
  }
  bool chain = true;
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (orders[i + 1] % orders[i] != 0) chain = false;
  FiniteQuadraticForm cat(orders, qv, pr);
  if (chain) {
    if (lifts) cat.set_lift(std::move(lift), std::move(to_coeffs));
    return cat;
  }

  // Renormalize Z^k / diag(orders) to invariant factors: x -> P x.
  IntMatrix rel(k, k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = orders[i];
  SnfResult s = snf(rel);
  IntMatrix pinv = to_integer(inverse(to_rational(s.left)));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < k; ++i)
    if (s.diag[i] > 1) idx.push_back(i);
  const std::size_t m = idx.size();
  IntVector new_orders(m);
  std::vector<IntVector> gens(m);
  for (std::size_t a = 0; a < m; ++a) {
    new_orders[a] = s.diag[idx[a]];
    gens[a] = cat.reduce(pinv.column(idx[a]));
  }
  RatVector nq(m);
  RatMatrix np(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    nq[a] = cat.q(gens[a]);
    for (std::size_t b = 0; b < m; ++b) np(a, b) = cat.b(gens[a], gens[b]);
  }
  FiniteQuadraticForm r(std::move(new_orders), std::move(nq), std::move(np));
  if (lifts) {
    RatMatrix nl(n, m), nc(m, n);
    RatMatrix p = to_rational(s.left);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        Rat v = 0;
        for (std::size_t j = 0; j < k; ++j) v += lift(i, j) * Rat(gens[a][j]);
        nl(i, a) = v;
      }
      for (std::size_t i = 0; i < n; ++i) {
        Rat v = 0;
        for (std::size_t j = 0; j < k; ++j) v += p(idx[a], j) * to_coeffs(j, i);
        nc(a, i) = v;
      }
    }
    r.set_lift(std::move(nl), std::move(nc));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Isometry search

namespace {

struct IsoSearch {
  const FiniteQuadraticForm& a;
  const FiniteQuadraticForm& b;
  std::vector<std::vector<IntVector>> candidates;
  std::vector<IntVector> images;
  std::vector<IntVector> gens_a;

  bool surjective() const {
    std::set<IntVector> seen;
    Int n = a.size();
    for (Int i = 0; i < n; ++i) {
      IntVector c = a.element(i);
      IntVector img(b.num_generators());
      for (std::size_t g = 0; g < c.size(); ++g)
        for (std::size_t t = 0; t < img.size(); ++t) img[t] += c[g] * images[g][t];
      if (!seen.insert(b.reduce(std::move(img))).second) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == gens_a.size()) return surjective();
    for (const auto& y : candidates[depth]) {
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j)
        if (b.b(y, images[j]) != a.pairings()(depth, j)) ok = false;
      if (!ok) continue;
      images.push_back(y);
      if (search(depth + 1)) return true;
      images.pop_back();
    }
    return false;
  }
};

}  // namespace

IsometryResult are_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const Int& bound) {
  if (a.size() > bound || b.size() > bound) throw MathError("size bound exceeded");
  IsometryResult res;
  if (a.orders() != b.orders()) return res;
  const std::size_t k = a.num_generators();
  IsoSearch s{a, b, {}, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k);
    e[i] = 1;
    s.gens_a.push_back(e);
  }
  s.candidates.resize(k);
  for (const auto& y : b.elements()) {
    Int ord = b.order_of(y);
    Rat qy = b.q(y);
    for (std::size_t i = 0; i < k; ++i)
      if (ord == a.orders()[i] && qy == a.q_values()[i]) s.candidates[i].push_back(y);
  }
  if (s.search(0)) {
    res.isomorphic = true;
    res.images = s.images;
  }
  return res;
}

std::vector<IntVector> isotropic_elements(const FiniteQuadraticForm& q, const Int& order) {
  std::vector<IntVector> out;
  for (const auto& x : q.elements())
    if (q.order_of(x) == order && q.q(x) == 0) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Gluing

GluingData glue_map(const Lattice& ambient, const Embedding& sub) {
  if (!ambient.is_even() || !ambient.is_unimodular()) throw MathError("non-unimodular ambient");
  if (!is_primitive(sub)) throw MathError("non-primitive sub");
  GluingData gd{ambient, sub, orthogonal_complement(sub), {}, {}, {}, {}};
  gd.q_sub = disc_form_of(sub.sublattice());
  gd.q_comp = disc_form_of(gd.comp.sublattice());

  const std::size_t n = ambient.rank(), k = sub.rank();
  IntMatrix both = sub.basis().hstack(gd.comp.basis());
  RatMatrix both_inv = inverse(to_rational(both));
  SnfResult s = snf(both);
  IntMatrix pinv = to_integer(inverse(to_rational(s.left)));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (s.diag[i] > 1) idx.push_back(i);

  Int h_size = 1;
  for (auto i : idx) h_size *= s.diag[i];
  if (gd.q_sub.size() * gd.q_comp.size() != h_size * h_size)
    throw MathError("gluing: |A_S| * |A_T| != |H|^2");

  std::set<IntVector> seen_s, seen_t;
  for (Int e = 0; e < h_size; ++e) {
    // Mixed-radix coefficients of the H element.
    Int rest = e;
    IntVector h(n);
    for (std::size_t a = idx.size(); a-- > 0;) {
      Int c = rest % s.diag[idx[a]];
      rest /= s.diag[idx[a]];
      for (std::size_t i = 0; i < n; ++i) h[i] += c * pinv(i, idx[a]);
    }
    RatVector hz(n);
    for (std::size_t i = 0; i < n; ++i) hz[i] = Rat(h[i]);
    RatVector z = both_inv * hz;
    RatVector zs(z.begin(), z.begin() + k), zt(z.begin() + k, z.end());
    IntVector xs = gd.q_sub.element_of_dual(zs);
    IntVector xt = gd.q_comp.element_of_dual(zt);
    if (!seen_s.insert(xs).second || !seen_t.insert(xt).second)
      throw MathError("gluing: projection restricted to H is not injective");
    if (mod2(gd.q_sub.q(xs) + gd.q_comp.q(xt)) != 0) throw MathError("gluing: anti-isometry violated");
    gd.h_representatives.push_back(h);
    gd.map_table.emplace_back(std::move(xs), std::move(xt));
  }
  if (Int(static_cast<unsigned long>(seen_s.size())) != gd.q_sub.size() ||
      Int(static_cast<unsigned long>(seen_t.size())) != gd.q_comp.size())
    throw MathError("gluing: projection restricted to H is not surjective");
  return gd;
}

// ---------------------------------------------------------------------------
// Overlattices

Overlattice overlattice_from_isotropic(const Lattice& l, const FiniteQuadraticForm& q,
                                       const std::vector<IntVector>& generators) {
  if (!l.is_even()) throw MathError("overlattice requires an even lattice");
  const std::size_t n = l.rank();
  if (generators.empty()) return {l, Embedding(l, IntMatrix::identity(n)), Int(1)};
  if (!q.lift() || q.lift()->rows() != n) throw MathError("overlattice: form carries no lift into this lattice");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (q.q(generators[i]) != 0) throw MathError("non-isotropic generator " + to_string(generators[i]));
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (q.b(generators[i], generators[j]) != 0) throw MathError("non-isotropic generator pair");
  }
  std::vector<RatVector> lifts;
  Int den = 1;
  for (const auto& g : generators) {
    lifts.push_back(q.lift_of(g));
    for (const auto& v : lifts.back()) den = lcm_of(den, v.get_den());
  }
  // Rows: den * e_i, den * lift_j; the row HNF spans den * overlattice.
  IntMatrix m(n + lifts.size(), n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = den;
  for (std::size_t j = 0; j < lifts.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(n + j, i) = Rat(lifts[j][i] * Rat(den)).get_num();
  HnfResult h = hnf(m);
  RatMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      basis(i, r) = Rat(h.hermite(r, i), den);
      basis(i, r).canonicalize();
    }
  RatMatrix gram = basis.transpose() * to_rational(l.gram()) * basis;
  IntMatrix igram;
  try {
    igram = to_integer(gram);
  } catch (const MathError&) {
    throw MathError("overlattice: non-integral Gram matrix (internal error)");
  }
  Lattice over(igram, l.label().empty() ? std::string{} : l.label() + "+glue");
  if (!over.is_even()) throw MathError("overlattice: result is not even (internal error)");
  IntMatrix orig = to_integer(inverse(basis));
  Int index = abs(det_exact(orig));
  return {over, Embedding(over, orig), index};
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string to_string(const FiniteQuadraticForm& q) {
  std::ostringstream os;
  os << "orders=" << to_string(q.orders()) << " q=[";
  for (std::size_t i = 0; i < q.num_generators(); ++i) os << (i ? "," : "") << q.q_values()[i].get_str();
  os << "]";
  return os.str();
}

}  // namespace k3lat
