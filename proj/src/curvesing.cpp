#include "k3lat/curvesing.hpp"

#include <algorithm>
#include <random>

namespace k3lat {

HomogeneousCurve::HomogeneousCurve(int degree, TriPoly poly) : degree_(degree), poly_(std::move(poly)) {
  if (degree_ < 1) throw MathError("curve degree must be positive");
  if (poly_.is_zero()) throw MathError("zero polynomial does not define a curve");
  for (const auto& [e, c] : poly_.terms())
    if (e[0] + e[1] + e[2] != degree_)
      throw MathError("term x0^" + std::to_string(e[0]) + "*x1^" + std::to_string(e[1]) + "*x2^" +
                      std::to_string(e[2]) + " has degree != " + std::to_string(degree_));
}

namespace {

TriPoly x(int i) { return TriPoly::var(i); }

// (x0 - x1)(x1 - x2)(x2 - x0)
TriPoly triangle_product() { return (x(0) - x(1)) * (x(1) - x(2)) * (x(2) - x(0)); }

// x0^2 x1 + x1^2 x2 + x2^2 x0 - 3 x0 x1 x2
TriPoly klein_cubic() {
  return x(0) * x(0) * x(1) + x(1) * x(1) * x(2) + x(2) * x(2) * x(0) - x(0) * x(1) * x(2) * Rat(3);
}

}  // namespace

HomogeneousCurve curve_dmu(const Rat& mu) {
  if (mu == 0) throw MathError("D_mu requires mu != 0");
  TriPoly k = klein_cubic();
  return HomogeneousCurve(6, k * k + x(0) * x(1) * x(2) * triangle_product() * mu);
}

HomogeneousCurve curve_catalog(const std::string& name) {
  if (name == "C7") return curve_dmu(-4);
  if (name == "C4") return HomogeneousCurve(6, x(0) * x(1) * x(2) * triangle_product());
  if (name == "C3") {
    TriPoly p = triangle_product();
    TriPoly s = x(0) + x(1) + x(2);
    return HomogeneousCurve(6, p * (s * s * s + p));
  }
  if (name.rfind("Dmu", 0) == 0) {
    std::string arg = name.substr(3);
    if (arg.size() >= 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
    Rat mu;
    try {
      mu = Rat(arg);
    } catch (const std::invalid_argument&) {
      throw MathError("bad mu in curve name '" + name + "'");
    }
    mu.canonicalize();
    return curve_dmu(mu);
  }
  throw MathError("unknown curve '" + name + "'");
}

std::string to_string(const ProjPoint& p) {
  return "(" + p[0].get_str() + "," + p[1].get_str() + "," + p[2].get_str() + ")";
}

bool same_point(const ProjPoint& p, const ProjPoint& q) {
  return p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1];
}

namespace {

bool is_zero_point(const ProjPoint& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

int chart_of(const ProjPoint& p) {
  for (int c = 2; c >= 0; --c)
    if (p[c] != 0) return c;
  throw MathError("zero point is not a projective point");
}

std::array<int, 2> others(int chart) {
  if (chart == 0) return {1, 2};
  if (chart == 1) return {0, 2};
  return {0, 1};
}

}  // namespace

BiPoly localize(const HomogeneousCurve& f, const ProjPoint& p) {
  const int c = chart_of(p);
  auto o = others(c);
  return f.poly().dehomogenize(c).translate(p[o[0]] / p[c], p[o[1]] / p[c]);
}

ConeData multiplicity_and_cone(const BiPoly& g) {
  if (g.is_zero()) throw MathError("zero polynomial has no tangent cone");
  ConeData d;
  d.multiplicity = g.order();
  d.cone = g.homogeneous_part(d.multiplicity);
  if (d.multiplicity == 0) return d;
  int a = d.multiplicity;
  for (const auto& [e, c] : d.cone.terms()) a = std::min(a, e.second);
  std::vector<Rat> h(static_cast<std::size_t>(d.multiplicity - a + 1));
  for (const auto& [e, c] : d.cone.terms()) h[e.first] = c;
  if (a > 0) d.pattern.push_back(a);
  auto parts = squarefree_decomposition(UniPoly(std::move(h)));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int k = 0; k < parts[i].degree(); ++k) d.pattern.push_back(static_cast<int>(i) + 1);
  std::sort(d.pattern.rbegin(), d.pattern.rend());
  return d;
}

std::optional<long> intersection_multiplicity(const BiPoly& f0, const BiPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) return std::nullopt;
  if (f0.constant_term() != 0 || g0.constant_term() != 0) return 0;
  // Beyond the Bezout bound the two curves share a component.
  const long cap = static_cast<long>(f0.total_degree()) * g0.total_degree();
  BiPoly f = f0, g = g0;
  long acc = 0;
  for (;;) {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    if (f.constant_term() != 0 || g.constant_term() != 0) return acc;
    UniPoly fr = f.restrict_y0(), gr = g.restrict_y0();
    if (fr.is_zero() && gr.is_zero()) return std::nullopt;
    int r = std::max(fr.degree(), 0), s = std::max(gr.degree(), 0);
    if (r > s) {
      std::swap(f, g);
      std::swap(fr, gr);
      std::swap(r, s);
    }
    if (fr.is_zero()) {
      // I(yH, G) = I(y, G) + I(H, G)
      acc += gr.order();
      f = f.divide_by_y();
    } else {
      BiPoly shift(BiPoly::Terms{{{s - r, 0}, gr.leading()}});
      g = g * fr.leading() - shift * f;
    }
    if (acc > cap) return std::nullopt;
  }
}

SingularityReport milnor_and_classify(const BiPoly& g) {
  SingularityReport r;
  if (g.is_zero()) throw MathError("zero polynomial");
  if (g.constant_term() != 0) {
    r.label = "not on curve";
    return r;
  }
  ConeData cd = multiplicity_and_cone(g);
  r.multiplicity = cd.multiplicity;
  r.pattern = cd.pattern;
  r.milnor = intersection_multiplicity(g.dx(), g.dy());
  if (!r.milnor) {
    r.label = "non-reduced";
    return r;
  }
  const long mu = *r.milnor;
  if (r.multiplicity == 1) {
    r.label = "smooth";
  } else if (r.multiplicity == 2) {
    r.label = "A" + std::to_string(mu);
  } else if (r.multiplicity == 3 && r.pattern == std::vector<int>{3}) {
    r.label = (mu >= 6 && mu <= 8) ? "E" + std::to_string(mu) : "unclassified";
  } else if (r.multiplicity == 3 && mu >= 4) {
    r.label = "D" + std::to_string(mu);
  } else {
    r.label = "unclassified";
  }
  return r;
}

SingularityReport classify_point(const HomogeneousCurve& f, const ProjPoint& p) {
  SingularityReport r = milnor_and_classify(localize(f, p));
  r.point = p;
  return r;
}

std::optional<long> line_intersection_multiplicity(const HomogeneousCurve& f, const ProjPoint& p,
                                                   const ProjPoint& q) {
  if (is_zero_point(p) || is_zero_point(q)) throw MathError("zero point is not a projective point");
  if (same_point(p, q)) throw MathError("line needs two distinct points");
  ProjPoint d{q[0] - p[0], q[1] - p[1], q[2] - p[2]};
  UniPoly u = f.poly().along_line(p, d);
  if (u.is_zero()) return std::nullopt;
  return u.order();
}

// ---------------------------------------------------------------------------
// Singular support

std::string to_string(SupportStatus s) {
  switch (s) {
    case SupportStatus::Verified: return "verified";
    case SupportStatus::UndeclaredSingularPoint: return "undeclared singular point";
    case SupportStatus::DeclaredPointSmooth: return "declared point not singular";
    case SupportStatus::NonReduced: return "non-reduced";
    case SupportStatus::UnverifiedResidual: return "unverified residual";
  }
  return "?";
}

namespace {

constexpr int kTransforms = 8;

// Deterministic invertible integer coordinate changes.
std::vector<RatMatrix> coordinate_changes() {
  std::vector<RatMatrix> out;
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> dist(-3, 3);
  while (static_cast<int>(out.size()) < 4 * kTransforms) {
    RatMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = dist(rng);
    if (det_rational(t) != 0) out.push_back(t);
  }
  return out;
}

UniPoly strip_root(UniPoly p, const Rat& a) {
  const UniPoly lin(std::vector<Rat>{-a, 1});
  while (!p.is_zero() && p.degree() > 0 && p.eval(a) == 0) p = p.divmod(lin).first;
  return p;
}

UniPoly gcd_nonzero(const std::vector<UniPoly>& ps) {
  UniPoly g;
  for (const auto& p : ps)
    if (!p.is_zero()) g = gcd(g, p);
  return g;
}

struct ChartOutcome {
  bool reduced = true;
  bool residual = false;
  std::vector<ProjPoint> extra;  // transformed coordinates
};

ChartOutcome analyse_chart(const TriPoly& f, int chart, const std::vector<ProjPoint>& declared) {
  ChartOutcome out;
  const BiPoly g = f.dehomogenize(chart), gx = g.dx(), gy = g.dy();
  const UniPoly ryy = resultant_y(g, gy), rxx = resultant_x(g, gx);
  if (ryy.is_zero() || rxx.is_zero()) {
    out.reduced = false;
    return out;
  }
  auto o = others(chart);
  std::vector<Rat> as, bs;
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& p : declared) {
    if (p[chart] == 0) continue;
    Rat a = p[o[0]] / p[chart], b = p[o[1]] / p[chart];
    pts.emplace_back(a, b);
    if (std::find(as.begin(), as.end(), a) == as.end()) as.push_back(a);
    if (std::find(bs.begin(), bs.end(), b) == bs.end()) bs.push_back(b);
  }
  // Strip declared coordinates before the gcd to keep degrees small.
  std::vector<UniPoly> ra{ryy, resultant_y(g, gx), resultant_y(gx, gy)};
  std::vector<UniPoly> rb{rxx, resultant_x(g, gy), resultant_x(gx, gy)};
  for (auto& r : ra)
    for (const auto& a : as) r = strip_root(r, a);
  for (auto& r : rb)
    for (const auto& b : bs) r = strip_root(r, b);
  if (gcd_nonzero(ra).degree() > 0 || gcd_nonzero(rb).degree() > 0) {
    out.residual = true;
    return out;
  }
  for (const auto& a : as)
    for (const auto& b : bs) {
      if (std::find(pts.begin(), pts.end(), std::make_pair(a, b)) != pts.end()) continue;
      if (g.eval(a, b) == 0 && gx.eval(a, b) == 0 && gy.eval(a, b) == 0) {
        ProjPoint q;
        q[chart] = 1;
        q[o[0]] = a;
        q[o[1]] = b;
        out.extra.push_back(q);
      }
    }
  return out;
}

ProjPoint apply(const RatMatrix& m, const ProjPoint& p) {
  ProjPoint r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += m(i, j) * p[j];
  return r;
}

}  // namespace

SupportVerdict singular_support_check(const HomogeneousCurve& f, const std::vector<ProjPoint>& declared) {
  SupportVerdict v;
  for (const auto& p : declared) {
    if (is_zero_point(p)) throw MathError("zero point is not a projective point");
    SingularityReport r = classify_point(f, p);
    v.declared.push_back(r);
    if (r.label == "non-reduced") {
      v.status = SupportStatus::NonReduced;
      v.detail = "infinite Milnor number at " + to_string(p);
      return v;
    }
    if (!r.milnor || *r.milnor == 0) {
      v.status = SupportStatus::DeclaredPointSmooth;
      v.detail = to_string(p) + " is " + r.label;
      return v;
    }
  }

  const std::vector<RatMatrix> changes = coordinate_changes();
  int tried = 0;
  bool any_reduced = false;
  for (std::size_t t = 0; t < changes.size() && tried < kTransforms; ++t) {
    const RatMatrix& m = changes[t];
    bool generic = true;
    for (std::size_t j = 0; j < 3; ++j)
      if (f.poly().eval({m(0, j), m(1, j), m(2, j)}) == 0) generic = false;
    if (!generic) continue;
    ++tried;
    const RatMatrix minv = inverse(m);
    const TriPoly ft = f.poly().substitute_linear(m);
    std::vector<ProjPoint> dt;
    for (const auto& p : declared) dt.push_back(apply(minv, p));

    bool reduced = true, residual = false;
    std::vector<ProjPoint> extra;
    for (int chart = 0; chart < 3 && reduced && !residual; ++chart) {
      ChartOutcome co = analyse_chart(ft, chart, dt);
      reduced = co.reduced;
      residual = co.residual;
      for (const auto& q : co.extra) {
        ProjPoint back = apply(m, q);
        bool seen = std::any_of(extra.begin(), extra.end(), [&](const ProjPoint& e) { return same_point(e, back); });
        if (!seen) extra.push_back(back);
      }
    }
    if (!reduced) continue;
    any_reduced = true;
    if (residual) continue;
    v.transform = static_cast<int>(t);
    if (extra.empty()) {
      v.status = SupportStatus::Verified;
      v.detail = "singular locus equals the declared points";
    } else {
      v.status = SupportStatus::UndeclaredSingularPoint;
      v.undeclared = extra;
      v.detail = "singular at " + to_string(extra.front());
    }
    return v;
  }
  if (!any_reduced) {
    v.status = SupportStatus::NonReduced;
    v.detail = "resultant certificate vanishes identically";
  } else {
    v.status = SupportStatus::UnverifiedResidual;
    v.detail = "resultant gcd keeps a factor with no declared root";
  }
  return v;
}

// ---------------------------------------------------------------------------

ConditionsReport check_conditions(const HomogeneousCurve& f, const std::array<ProjPoint, 3>& p, const ProjPoint& q) {
  const std::array<ProjPoint, 4> pts{p[0], p[1], p[2], q};
  for (const auto& a : pts)
    if (is_zero_point(a)) throw MathError("zero point is not a projective point");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (same_point(pts[i], pts[j])) throw MathError("coincident points " + to_string(pts[i]));

  ConditionsReport r;
  r.general_position = true;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    RatMatrix m(3, 3);
    std::size_t row = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < 3; ++j) m(row, j) = pts[i][j];
      ++row;
    }
    if (det_rational(m) == 0) {
      r.general_position = false;
      r.failures.push_back("(i) three of the points are collinear");
      break;
    }
  }

  r.at_q = classify_point(f, q);
  r.singularities = r.at_q.label == "D4";
  if (!r.singularities) r.failures.push_back("(ii) " + r.at_q.label + " at q = " + to_string(q) + ", expected D4");
  for (std::size_t i = 0; i < 3; ++i) {
    r.at_p[i] = classify_point(f, p[i]);
    if (r.at_p[i].label != "A3") {
      r.singularities = false;
      r.failures.push_back("(ii) " + r.at_p[i].label + " at p" + std::to_string(i + 1) + " = " + to_string(p[i]) +
                           ", expected A3");
    }
  }
  r.support = singular_support_check(f, {p[0], p[1], p[2], q});
  if (!r.support.verified()) {
    r.singularities = false;
    r.failures.push_back("(ii) not smooth elsewhere: " + to_string(r.support.status) + ", " + r.support.detail);
  }

  r.line_multiplicities = true;
  for (std::size_t i = 0; i < 3; ++i) {
    auto at_p = line_intersection_multiplicity(f, p[i], q);
    auto at_q = line_intersection_multiplicity(f, q, p[i]);
    r.mult_at_p[i] = at_p ? *at_p : -1;
    r.mult_at_q[i] = at_q ? *at_q : -1;
    if (r.mult_at_p[i] != 2 || r.mult_at_q[i] != 4) {
      r.line_multiplicities = false;
      r.failures.push_back("(iii) line l" + std::to_string(i + 1) + ": multiplicity " + std::to_string(r.mult_at_p[i]) +
                           " at p" + std::to_string(i + 1) + ", " + std::to_string(r.mult_at_q[i]) +
                           " at q (expected 2 and 4; -1 = infinite)");
    }
  }
  return r;
}

}  // namespace k3lat
