#include "properties.hpp"

#include <random>
#include <set>
#include <sstream>

#include "k3lat/curvesing.hpp"
#include "k3lat/discform.hpp"
#include "k3lat/fibrations.hpp"
#include "oracles.hpp"

using namespace k3lat;

namespace props {

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(long c) { return BiPoly::constant(Rat(c)); }

BiPoly random_bipoly(std::mt19937& rng, int max_deg, bool vanish_at_origin) {
  std::uniform_int_distribution<int> coef(-3, 3);
  BiPoly::Terms t;
  for (int i = 0; i <= max_deg; ++i)
    for (int j = 0; i + j <= max_deg; ++j) {
      if (vanish_at_origin && i + j == 0) continue;
      if (rng() % 3 == 0) continue;
      int c = coef(rng);
      if (c != 0) t[{i, j}] = Rat(c);
    }
  return BiPoly(std::move(t));
}

std::string show(const BiPoly& f) { return f.to_string(); }

std::string show_int(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

}  // namespace

Outcome index_law(std::size_t trials, unsigned seed) {
  Outcome out;
  std::mt19937 rng(seed);
  std::vector<Lattice> ambients{catalog("U+A2"),  catalog("A3"),   catalog("U+U"), catalog("D4"),
                                catalog("A1+A2"), catalog("U+A1"), catalog("E6"),  catalog("A2+A2")};
  while (out.cases < trials) {
    const Lattice& amb = ambients[rng() % ambients.size()];
    IntMatrix b = oracle::random_matrix(rng, amb.rank(), amb.rank(), -3, 3);
    Rat db = oracle::det(b);
    if (db == 0) continue;
    ++out.cases;
    auto ic = index_and_check(Embedding(amb, b));
    Rat dsub = abs(oracle::det(induced_gram(amb.gram(), b)));
    if (!ic.formula_holds || Rat(ic.index) != abs(db) || Rat(ic.d_sub) != dsub ||
        dsub != Rat(amb.abs_det()) * db * db) {
      std::ostringstream os;
      os << "index law: " << amb.label() << " basis " << to_string(b);
      out.failures.push_back(os.str());
    }
  }
  return out;
}

Outcome e8_gluing() {
  Outcome out;
  Lattice e8 = catalog_E(8);
  for (unsigned mask = 1; mask < 255; ++mask) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < 8; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    IntMatrix b(8, nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) b(nodes[k], k) = 1;
    Embedding sub(e8, b);
    ++out.cases;
    std::string name = "E8 nodes mask " + std::to_string(mask);
    try {
      if (!is_primitive(sub)) {
        out.failures.push_back(name + ": sub-diagram not primitive");
        continue;
      }
      auto gd = glue_map(e8, sub);
      // |A_S| = |A_T| = |H| and the map is a bijection preserving q up to sign
      if (gd.q_sub.size() != gd.q_comp.size() || Int(static_cast<unsigned long>(gd.map_table.size())) != gd.q_sub.size())
        out.failures.push_back(name + ": group orders differ");
      std::set<IntVector> seen_s, seen_t;
      for (const auto& [s, t] : gd.map_table) {
        seen_s.insert(gd.q_sub.reduce(s));
        seen_t.insert(gd.q_comp.reduce(t));
        if (mod2(gd.q_sub.q(s) + gd.q_comp.q(t)) != 0) out.failures.push_back(name + ": q_S + q_T != 0");
      }
      if (seen_s.size() != gd.map_table.size() || seen_t.size() != gd.map_table.size())
        out.failures.push_back(name + ": map not bijective");
      // the complement of a sub-diagram is again recognised by its discriminant
      if (!are_isomorphic(gd.q_sub, negate(gd.q_comp)).isomorphic) out.failures.push_back(name + ": forms not anti-isometric");
    } catch (const std::exception& e) {
      out.failures.push_back(name + ": " + e.what());
    }
  }
  return out;
}

Outcome fulton(std::size_t random_pairs, unsigned seed) {
  Outcome out;
  auto expect = [&](const std::string& what, const std::optional<long>& got, const std::optional<long>& want) {
    ++out.cases;
    if (got != want) out.failures.push_back(what + ": got " + show_int(got) + ", expected " + show_int(want));
  };
  using std::nullopt;
  // normalisation, units, common components
  expect("I(x,y)", intersection_multiplicity(X(), Y()), 1);
  expect("I(x+1,y)", intersection_multiplicity(X() + C(1), Y()), 0);
  expect("I(xy,x)", intersection_multiplicity(X() * Y(), X()), nullopt);
  expect("I(y-x^2,y)", intersection_multiplicity(Y() - X().pow(2), Y()), 2);
  expect("I(y^2-x^3,x)", intersection_multiplicity(Y().pow(2) - X().pow(3), X()), 2);
  expect("I(y^2-x^3,y)", intersection_multiplicity(Y().pow(2) - X().pow(3), Y()), 3);
  expect("I(y^2-x^3,y^2-x^3+x^4)", intersection_multiplicity(Y().pow(2) - X().pow(3), Y().pow(2) - X().pow(3) + X().pow(4)),
         8);
  expect("I(y^2-x^3, y^3-x^2)", intersection_multiplicity(Y().pow(2) - X().pow(3), Y().pow(3) - X().pow(2)), 4);
  expect("I(x^2-y^2,x^2+y^3)", intersection_multiplicity(X().pow(2) - Y().pow(2), X().pow(2) + Y().pow(3)), 4);

  std::mt19937 rng(seed);
  for (std::size_t t = 0; t < random_pairs; ++t) {
    BiPoly f = random_bipoly(rng, 3, true), g = random_bipoly(rng, 3, true), h = random_bipoly(rng, 2, false);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    auto fg = intersection_multiplicity(f, g);
    expect("symmetry f=" + show(f) + " g=" + show(g), intersection_multiplicity(g, f), fg);
    expect("g + h f, f=" + show(f) + " g=" + show(g), intersection_multiplicity(f, g + h * f), fg);
    auto fh = intersection_multiplicity(f, h);
    std::optional<long> sum;
    if (fg && fh) sum = *fg + *fh;
    expect("multiplicativity f=" + show(f) + " g=" + show(g) + " h=" + show(h), intersection_multiplicity(f, g * h), sum);
    ++out.cases;
    if (fg && *fg < static_cast<long>(f.order()) * g.order())
      out.failures.push_back("I >= m_f m_g fails for f=" + show(f) + " g=" + show(g));

    // graph formula: I(y - p(x), g) = ord_x g(x, p(x))
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Rat> pc{Rat(0), Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
    UniPoly p(pc);
    BiPoly graph = Y();
    for (int i = 1; i < 4; ++i) graph = graph - BiPoly::constant(pc[i]) * X().pow(i);
    long ord = oracle::order_along_graph(g, p);
    expect("graph p=" + to_string(p) + " g=" + show(g), intersection_multiplicity(graph, g),
           ord < 0 ? std::nullopt : std::optional<long>(ord));
  }

  // Milnor numbers of quasi-homogeneous germs
  struct Germ {
    BiPoly f;
    Rat w1, w2;
    std::string label;
  };
  std::vector<Germ> germs{
      {Y().pow(2) - X().pow(2), Rat(1, 2), Rat(1, 2), "A1"},
      {Y().pow(2) - X().pow(5), Rat(1, 5), Rat(1, 2), "A4"},
      {Y().pow(2) - X().pow(6), Rat(1, 6), Rat(1, 2), "A5"},
      {X().pow(2) * Y() - Y().pow(3), Rat(1, 3), Rat(1, 3), "D4"},
      {X().pow(2) * Y() - Y().pow(5), Rat(2, 5), Rat(1, 5), "D6"},
      {X().pow(3) + Y().pow(4), Rat(1, 3), Rat(1, 4), "E6"},
      {X().pow(3) + X() * Y().pow(3), Rat(1, 3), Rat(2, 9), "E7"},
      {X().pow(3) + Y().pow(5), Rat(1, 3), Rat(1, 5), "E8"},
  };
  for (const auto& g : germs) {
    auto r = milnor_and_classify(g.f);
    Rat mu = oracle::milnor_quasihomogeneous(g.w1, g.w2);
    ++out.cases;
    if (!r.milnor || Rat(*r.milnor) != mu || r.label != g.label)
      out.failures.push_back("Milnor/label of " + show(g.f) + ": " + show_int(r.milnor) + " " + r.label);
  }
  return out;
}

Outcome root_counts() {
  Outcome out;
  auto check = [&](const Lattice& l, std::size_t expected) {
    ++out.cases;
    auto r = enumerate_roots(l);
    auto o = oracle::roots_by_orbit(l.gram());
    if (r.size() != expected || r != o || enumerate_roots_serial(l) != r)
      out.failures.push_back(l.label() + ": " + std::to_string(r.size()) + " roots, expected " + std::to_string(expected));
  };
  for (int n = 1; n <= 8; ++n) check(catalog_A(n), static_cast<std::size_t>(n * (n + 1)));
  for (int n = 4; n <= 8; ++n) check(catalog_D(n), static_cast<std::size_t>(2 * n * (n - 1)));
  check(catalog_E(6), 72);
  check(catalog_E(7), 126);
  check(catalog_E(8), 240);
  return out;
}

Outcome snf_hnf(std::size_t trials, unsigned seed) {
  Outcome out;
  std::mt19937 rng(seed);
  auto unimodular = [](const IntMatrix& m) { return m.is_square() && abs(det_exact(m)) == 1; };
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = oracle::random_matrix(rng, r, c, -8, 8);
    ++out.cases;
    auto s = snf(a);
    bool ok = unimodular(s.left) && unimodular(s.right);
    IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < c; ++j) ok = ok && d(i, j) == (i == j ? s.diag[i] : Int(0));
    if (r <= 4 && c <= 4) ok = ok && s.diag == oracle::invariant_factors(a);
    auto h = hnf(a);
    ok = ok && unimodular(h.transform) && h.transform * a == h.hermite && h.rank == s.rank();
    if (!ok) out.failures.push_back("SNF/HNF identity fails for " + to_string(a));
  }
  return out;
}

}  // namespace props
