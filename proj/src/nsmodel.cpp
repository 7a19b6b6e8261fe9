#include <algorithm>

#include "k3lat/fibrations.hpp"

namespace k3lat {

namespace {

constexpr std::size_t kRank = 17;

IntVector unit(std::size_t i) {
  IntVector v(kRank);
  v[i] = 1;
  return v;
}

IntVector lin(std::initializer_list<std::pair<long, const IntVector*>> terms) {
  IntVector r(kRank);
  for (const auto& [c, v] : terms)
    for (std::size_t i = 0; i < kRank; ++i) r[i] += c * (*v)[i];
  return r;
}

std::size_t theta_index(int k, int i) { return 2 + 5 * static_cast<std::size_t>(k) + static_cast<std::size_t>(i - 1); }

}  // namespace

bool CheckList::ok() const {
  return std::all_of(items.begin(), items.end(), [](const auto& p) { return p.second; });
}

NsModel build_ns_model() {
  NsModel m;
  m.lattice = catalog("U+A5^3");
  m.E = unit(0);
  m.F = unit(1);
  m.g = lin({{1, &m.F}, {-1, &m.E}});
  for (int k = 0; k < 3; ++k) {
    IntVector t0 = m.E;
    for (int i = 1; i <= 5; ++i) {
      m.theta[k][i] = unit(theta_index(k, i));
      t0[theta_index(k, i)] -= 1;
    }
    m.theta[k][0] = t0;
  }
  m.e_ivstar = lin({{3, &m.g}});
  for (int k = 0; k < 3; ++k)
    m.e_ivstar = lin({{1, &m.e_ivstar}, {2, &m.theta[k][0]}, {1, &m.theta[k][1]}});
  for (int k = 0; k < 3; ++k) {
    m.e_k[k] = lin({{1, &m.e_ivstar}, {-1, &m.theta[k][3]}, {-1, &m.theta[k][4]}});
    m.theta_div[k] = lin({{1, &m.theta[k][1]}, {2, &m.theta[k][2]}, {1, &m.theta[k][3]}, {-1, &m.theta[k][5]}});
  }
  m.a = lin({{2, &m.e_ivstar}, {1, &m.theta_div[0]}});
  return m;
}

CheckList verify_model(const NsModel& m) {
  const Lattice& l = m.lattice;
  CheckList c;
  c.add("rank 17 and d = 216", l.rank() == kRank && l.abs_det() == 216);
  c.add("g^2 = -2", l.norm(m.g) == -2);
  c.add("<g,E> = 1", l.pair(m.g, m.E) == 1);
  bool cycles = true, g_pairs = true, cross = true;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        Int want = i == j ? -2 : ((i - j + 6) % 6 == 1 || (j - i + 6) % 6 == 1) ? 1 : 0;
        if (l.pair(m.theta[k][i], m.theta[k][j]) != want) cycles = false;
      }
      Int want_g = i == 0 ? 1 : 0;
      if (l.pair(m.theta[k][i], m.g) != want_g) g_pairs = false;
      for (int k2 = 0; k2 < 3; ++k2) {
        if (k2 == k) continue;
        for (int j = 0; j < 6; ++j)
          if (l.pair(m.theta[k][i], m.theta[k2][j]) != 0) cross = false;
      }
    }
  }
  c.add("affine A5 cycles", cycles);
  c.add("<Theta_0,g> = 1 and <Theta_i,g> = 0 (i > 0)", g_pairs);
  c.add("cross-block orthogonality", cross);
  c.add("E_IV*^2 = 0", l.norm(m.e_ivstar) == 0);
  return c;
}

ObstructionReport obstruction_analysis(const NsModel& m, bool include_g_in_s) {
  const Lattice& l = m.lattice;
  ObstructionReport r;
  r.include_g = include_g_in_s;
  r.e_ivstar_norm = l.norm(m.e_ivstar);

  // IV* = affine E6: g in the middle, arms Theta^k_0 - Theta^k_1, multiplicities 3, 2, 1.
  std::vector<IntVector> comps{m.g};
  std::vector<long> mult{3};
  for (int k = 0; k < 3; ++k) {
    comps.push_back(m.theta[k][0]);
    mult.push_back(2);
  }
  for (int k = 0; k < 3; ++k) {
    comps.push_back(m.theta[k][1]);
    mult.push_back(1);
  }
  auto expected_pair = [](std::size_t i, std::size_t j) -> long {
    if (i == j) return -2;
    if (i > j) std::swap(i, j);
    if (i == 0 && j >= 1 && j <= 3) return 1;
    if (i >= 1 && i <= 3 && j == i + 3) return 1;
    return 0;
  };
  bool shape = true;
  IntVector sum(kRank);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (l.pair(comps[i], comps[j]) != expected_pair(i, j)) shape = false;
    if (l.pair(comps[i], m.e_ivstar) != 0) shape = false;
    for (std::size_t t = 0; t < kRank; ++t) sum[t] += mult[i] * comps[i][t];
  }
  if (sum != m.e_ivstar) shape = false;
  r.ivstar_shape = shape;
  std::vector<IntVector> reduced(comps.begin(), comps.end() - 1);
  IntMatrix red = IntMatrix::from_columns(reduced, kRank);
  r.ivstar_affine_label = classify_root_lattice(Lattice(induced_gram(l.gram(), red))).label;

  std::vector<IntVector> gens;
  for (int k = 0; k < 3; ++k)
    for (int i : {0, 1, 3, 4}) gens.push_back(m.theta[k][i]);
  gens.push_back(m.theta[0][2]);
  if (include_g_in_s) gens.push_back(m.g);
  r.s_generators = gens.size();
  IntMatrix b = IntMatrix::from_columns(gens, kRank);
  r.s_rank = rank_of(b);
  HnfResult h = hnf(b.transpose());
  IntMatrix s_basis(kRank, h.rank);
  for (std::size_t j = 0; j < h.rank; ++j)
    for (std::size_t i = 0; i < kRank; ++i) s_basis(i, j) = h.hermite(j, i);
  r.s_degenerate = det_exact(induced_gram(l.gram(), s_basis)) == 0;

  IntMatrix k = kernel_saturated(b.transpose() * l.gram());
  r.perp_rank = k.cols();
  r.perp_gram = induced_gram(l.gram(), k);
  Lattice perp(r.perp_gram, "S-perp", true);
  r.perp_negative_definite = r.perp_rank > 0 && perp.is_negative_definite();
  if (r.perp_negative_definite) r.perp_roots = enumerate_roots(perp).size();

  std::vector<IntVector> named{m.a, m.theta_div[1], m.theta_div[2]};
  IntMatrix nm = IntMatrix::from_columns(named, kRank);
  r.named_gram = induced_gram(l.gram(), nm);
  r.named_in_perp = true;
  for (const auto& v : named)
    for (const auto& s : gens)
      if (l.pair(v, s) != 0) r.named_in_perp = false;
  Lattice named_lattice(r.named_gram, "A+Theta2+Theta3", true);
  if (named_lattice.is_negative_definite()) r.named_span_roots = enumerate_roots(named_lattice).size();
  if (r.named_in_perp && r.perp_rank == named.size()) {
    RatMatrix coords = rational_solve(to_rational(k), to_rational(nm));
    r.named_index_in_perp = abs(det_exact(to_integer(coords)));
  }

  const Int d_ns = l.abs_det();
  struct Printed {
    const char* name;
    long denominator;
  };
  for (const Printed& p : {Printed{"U+E6+A3^3", 3 * 64}, Printed{"U+A2+A3+D4", 3 * 16}}) {
    RatioCheck rc;
    rc.candidate = p.name;
    rc.d_candidate = catalog(p.name).abs_det();
    rc.ratio = Rat(d_ns) / Rat(rc.d_candidate);
    rc.square = is_rational_square(rc.ratio);
    r.ratios.push_back(rc);
    r.checks.add(std::string("d(") + p.name + ") = " + std::to_string(p.denominator),
                 rc.d_candidate == p.denominator);
    r.checks.add("6^3/" + std::to_string(p.denominator) + " is not a square", !rc.square);
  }

  r.checks.add("E_IV*^2 = 0", r.e_ivstar_norm == 0);
  r.checks.add("IV* shape", r.ivstar_shape && r.ivstar_affine_label == "E6");
  r.checks.add("A^2 = -6", r.named_gram(0, 0) == -6);
  r.checks.add("(Theta^2)^2 = -6", r.named_gram(1, 1) == -6);
  r.checks.add("(Theta^3)^2 = -6", r.named_gram(2, 2) == -6);
  r.checks.add("A, Theta^2, Theta^3 pairwise orthogonal",
               r.named_gram(0, 1) == 0 && r.named_gram(0, 2) == 0 && r.named_gram(1, 2) == 0);
  r.checks.add("A, Theta^2, Theta^3 span has no (-2)-roots",
               named_lattice.is_negative_definite() && r.named_span_roots == 0);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// Bourbaki nodes 1, 3, 4, 5, 6 of E8 form an A5 chain.
constexpr std::size_t kE8Chain[5] = {0, 2, 3, 4, 5};

}  // namespace

namespace {

// Roots of a small Gram matrix with all coordinates in [-b, b], lexicographic.
std::vector<std::vector<long>> box_roots(const std::vector<std::vector<long>>& g, long b) {
  const std::size_t r = g.size();
  std::vector<std::vector<long>> roots;
  std::vector<long> x(r, -b);
  for (;;) {
    long q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x[i] == 0) continue;
      long s = 0;
      for (std::size_t j = 0; j < r; ++j) s += g[i][j] * x[j];
      q += x[i] * s;
    }
    if (q == -2) roots.push_back(x);
    std::size_t pos = r;
    while (pos > 0 && x[pos - 1] == b) x[--pos] = -b;
    if (pos == 0) break;
    ++x[pos - 1];
  }
  return roots;
}

}  // namespace

K3EmbeddingWitness embed_u_a5cubed_in_k3(int max_bound) {
  if (max_bound < 1) throw MathError("coefficient bound must be positive");
  K3EmbeddingWitness w;
  w.k3 = catalog("U^3+E8^2");
  const Lattice& k3 = w.k3;
  const std::size_t n = k3.rank();
  const std::size_t e8[2] = {6, 14};

  // U, then two A5 chains, in ambient coordinates.
  std::vector<IntVector> fixed;
  IntVector e(n), f(n);
  e[0] = 1;
  f[1] = 1;
  fixed.push_back(e);
  fixed.push_back(f);
  for (std::size_t blk : e8)
    for (std::size_t node : kE8Chain) {
      IntVector v(n);
      v[blk + node] = 1;
      fixed.push_back(v);
    }

  // M = orthogonal complement of the fixed part; signature (2,8).
  IntMatrix fixed_basis = IntMatrix::from_columns(fixed, n);
  IntMatrix mb = kernel_saturated(fixed_basis.transpose() * k3.gram());
  const std::size_t r = mb.cols();
  IntMatrix mg = induced_gram(k3.gram(), mb);
  std::vector<std::vector<long>> g(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g[i][j] = mg(i, j).get_si();

  auto pair = [&](const std::vector<long>& u, const std::vector<long>& v) {
    long s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) s += u[i] * g[i][j] * v[j];
    }
    return s;
  };
  auto ambient = [&](const std::vector<long>& u) {
    IntVector v(n);
    for (std::size_t j = 0; j < r; ++j)
      if (u[j] != 0)
        for (std::size_t i = 0; i < n; ++i) v[i] += u[j] * mb(i, j);
    return v;
  };

  std::vector<IntVector> chain_vectors;
  for (int bound = 1; bound <= max_bound && chain_vectors.empty(); ++bound) {
    const std::vector<std::vector<long>> roots = box_roots(g, bound);
    // Any subset of a primitive set is primitive, so partial chains are pruned.
    auto primitive_with = [&](const std::vector<std::size_t>& chain) {
      std::vector<IntVector> cols = fixed;
      for (auto idx : chain) cols.push_back(ambient(roots[idx]));
      for (const auto& d : snf(IntMatrix::from_columns(cols, n)).diag)
        if (d != 1) return false;
      return true;
    };
    std::vector<std::size_t> chain;
    bool done = false;
    auto search = [&](auto&& self) -> void {
      if (chain.size() == 5) {
        done = true;
        return;
      }
      for (std::size_t c = 0; c < roots.size() && !done; ++c) {
        bool ok = true;
        for (std::size_t t = 0; t < chain.size() && ok; ++t) {
          long want = (t + 1 == chain.size()) ? 1 : 0;
          if (chain[t] == c || pair(roots[chain[t]], roots[c]) != want) ok = false;
        }
        if (!ok) continue;
        chain.push_back(c);
        ++w.candidates_tried;
        if (primitive_with(chain)) self(self);
        if (!done) chain.pop_back();
      }
    };
    search(search);
    if (done) {
      w.coefficient_bound = bound;
      for (auto idx : chain) chain_vectors.push_back(ambient(roots[idx]));
    }
  }
  if (chain_vectors.empty()) return w;

  std::vector<IntVector> cols = fixed;
  cols.insert(cols.end(), chain_vectors.begin(), chain_vectors.end());
  w.ns_basis = IntMatrix::from_columns(cols, n);
  w.ns = Embedding(k3, w.ns_basis);
  w.primitive = is_primitive(*w.ns);
  w.transcendental = orthogonal_complement(*w.ns);
  Lattice t = w.transcendental->sublattice("T");
  w.t_signature = t.signature();
  w.t_abs_det = t.abs_det();
  Lattice ns = w.ns->sublattice("NS");
  w.forms_match = are_isomorphic(disc_form_of(t), negate(disc_form_of(ns))).isomorphic;
  w.found = w.primitive && w.t_signature == Signature{2, 3, 0} && w.t_abs_det == 216 && w.forms_match;
  return w;
}

}  // namespace k3lat
