#include "k3lat/io.hpp"

#include <fstream>
#include <sstream>

namespace k3lat {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw FormatError(path + ": " + msg); }

const Json& member(const Json& j, const std::string& path, const std::string& k) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(k);
  if (it == j.end()) fail(path, "missing key \"" + k + "\"");
  return *it;
}

bool valid_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  return s.find_first_not_of("0123456789", i) == std::string::npos;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                      (pos == std::string::npos ? what : what.substr(pos)));
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a decimal integer string");
  const std::string s = j.get<std::string>();
  if (!valid_integer_text(s)) fail(path, "invalid integer \"" + s + "\"");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat rat_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  const std::string s = j.get<std::string>();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  if (!valid_integer_text(num)) fail(path, "invalid rational \"" + s + "\"");
  Rat r(Int(num[0] == '+' ? num.substr(1) : num));
  if (slash != std::string::npos) {
    std::string den = s.substr(slash + 1);
    if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
      fail(path, "invalid rational \"" + s + "\"");
    Int d(den);
    if (d == 0) fail(path, "zero denominator");
    r /= Rat(d);
  }
  return r;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) fail(at(path, i), "expected an array");
    if (i == 0) cols = j[i].size();
    else if (j[i].size() != cols) fail(at(path, i), "row length " + std::to_string(j[i].size()) + " != " + std::to_string(cols));
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = int_from_json(j[i][k], at(at(path, i), k));
  return m;
}

Json to_json(const Int& v) { return v.get_str(); }

Json to_json(const Rat& v) { return v.get_str(); }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Lattice lattice_from_json(const Json& j, const std::string& path) {
  IntMatrix g = matrix_from_json(member(j, path, "gram"), key(path, "gram"));
  if (!g.is_square()) fail(key(path, "gram"), "Gram matrix is not square");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(key(path, "label"), "expected a string");
    label = j["label"].get<std::string>();
  }
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t k = i + 1; k < g.cols(); ++k)
      if (g(i, k) != g(k, i))
        fail(key(path, "gram"), "not symmetric: entries [" + std::to_string(i) + "][" + std::to_string(k) + "] = " +
                                    g(i, k).get_str() + " and [" + std::to_string(k) + "][" + std::to_string(i) +
                                    "] = " + g(k, i).get_str());
  try {
    return Lattice(std::move(g), label);
  } catch (const MathError& e) {
    fail(key(path, "gram"), e.what());
  }
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["gram"] = to_json(l.gram());
  if (!l.label().empty()) j["label"] = l.label();
  return j;
}

Embedding embedding_from_json(const Json& j, const std::string& path) {
  Lattice amb = lattice_from_json(member(j, path, "ambient"), key(path, "ambient"));
  IntMatrix b = matrix_from_json(member(j, path, "basis"), key(path, "basis"));
  if (b.rows() != amb.rank())
    fail(key(path, "basis"), "has " + std::to_string(b.rows()) + " rows, ambient rank is " + std::to_string(amb.rank()));
  try {
    return Embedding(std::move(amb), std::move(b));
  } catch (const MathError& e) {
    fail(key(path, "basis"), e.what());
  }
}

Json embedding_to_json(const Embedding& e) {
  Json j;
  j["ambient"] = lattice_to_json(e.ambient());
  j["basis"] = to_json(e.basis());
  return j;
}

HomogeneousCurve curve_from_json(const Json& j, const std::string& path) {
  const Json& d = member(j, path, "degree");
  if (!d.is_number_integer()) fail(key(path, "degree"), "expected an integer");
  const long degree = d.get<long>();
  if (degree < 1 || degree > 1000) fail(key(path, "degree"), "degree out of range");
  const Json& terms = member(j, path, "terms");
  if (!terms.is_array()) fail(key(path, "terms"), "expected an array");
  TriPoly::Terms t;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = at(key(path, "terms"), i);
    const Json& e = member(terms[i], tp, "exp");
    if (!e.is_array() || e.size() != 3) fail(key(tp, "exp"), "expected three exponents");
    TriPoly::Exp ex{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!e[k].is_number_integer() || e[k].get<long>() < 0) fail(at(key(tp, "exp"), k), "expected a nonnegative integer");
      ex[k] = static_cast<int>(e[k].get<long>());
    }
    if (ex[0] + ex[1] + ex[2] != degree)
      fail(key(tp, "exp"), "exponent sum " + std::to_string(ex[0] + ex[1] + ex[2]) + " != degree " + std::to_string(degree));
    if (t.count(ex)) fail(key(tp, "exp"), "duplicate monomial");
    t[ex] = rat_from_json(member(terms[i], tp, "coeff"), key(tp, "coeff"));
  }
  TriPoly p(std::move(t));
  if (p.is_zero()) fail(key(path, "terms"), "zero polynomial");
  return HomogeneousCurve(static_cast<int>(degree), std::move(p));
}

Json curve_to_json(const HomogeneousCurve& c) {
  Json j;
  j["degree"] = c.degree();
  Json terms = Json::array();
  const auto& t = c.poly().terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    terms.push_back(Json{{"exp", {it->first[0], it->first[1], it->first[2]}}, {"coeff", it->second.get_str()}});
  j["terms"] = terms;
  return j;
}

FiberConfiguration config_from_json(const Json& j, const std::string& path) {
  const Json& f = member(j, path, "fibers");
  if (!f.is_array()) fail(key(path, "fibers"), "expected an array");
  std::vector<KodairaFiber> fibers;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_string()) fail(at(key(path, "fibers"), i), "expected a fiber tag");
    try {
      fibers.push_back(KodairaFiber::parse(f[i].get<std::string>()));
    } catch (const MathError& e) {
      fail(at(key(path, "fibers"), i), e.what());
    }
  }
  try {
    return FiberConfiguration(std::move(fibers));
  } catch (const MathError& e) {
    fail(key(path, "fibers"), e.what());
  }
}

Json config_to_json(const FiberConfiguration& c) {
  Json a = Json::array();
  for (const auto& f : c.fibers) a.push_back(f.tag());
  return Json{{"fibers", a}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::string t;
    for (char c : item)
      if (c != ' ' && c != '(' && c != ')') t += c;
    out.push_back(t);
  }
  return out;
}

}  // namespace

ProjPoint parse_point(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw FormatError("point \"" + text + "\": expected three coordinates");
  ProjPoint p;
  for (std::size_t i = 0; i < 3; ++i) p[i] = rat_from_json(parts[i], "point \"" + text + "\"");
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) throw FormatError("point \"" + text + "\": zero vector");
  return p;
}

IntVector parse_int_vector(const std::string& text) {
  IntVector v;
  for (const auto& s : split(text, ',')) v.push_back(int_from_json(s, "vector \"" + text + "\""));
  return v;
}

Json to_json(const ProjPoint& p) { return Json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}); }

Json to_json(const Signature& s) { return Json{{"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}}; }

Json to_json(const FiniteQuadraticForm& q) {
  Json qv = Json::array();
  for (const auto& v : q.q_values()) qv.push_back(v.get_str());
  Json pr = Json::array();
  for (std::size_t i = 0; i < q.num_generators(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < q.num_generators(); ++k) row.push_back(q.pairings()(i, k).get_str());
    pr.push_back(row);
  }
  return Json{{"orders", to_json(q.orders())}, {"q_values", qv}, {"pairings", pr}, {"size", q.size().get_str()}};
}

Json to_json(const SingularityReport& r) {
  Json j{{"point", to_json(r.point)}, {"multiplicity", r.multiplicity}, {"label", r.label}, {"cone_pattern", r.pattern}};
  j["milnor"] = r.milnor ? Json(std::to_string(*r.milnor)) : Json("infinity");
  return j;
}

Json to_json(const SupportVerdict& v) {
  Json d = Json::array();
  for (const auto& r : v.declared) d.push_back(to_json(r));
  Json u = Json::array();
  for (const auto& p : v.undeclared) u.push_back(to_json(p));
  return Json{{"status", to_string(v.status)}, {"declared", d}, {"undeclared", u}, {"detail", v.detail}};
}

Json to_json(const ConditionsReport& r) {
  Json p = Json::array();
  for (const auto& s : r.at_p) p.push_back(to_json(s));
  return Json{{"ok", r.ok()},
              {"general_position", r.general_position},
              {"singularities", r.singularities},
              {"line_multiplicities", r.line_multiplicities},
              {"at_q", to_json(r.at_q)},
              {"at_p", p},
              {"support", to_json(r.support)},
              {"mult_at_p", r.mult_at_p},
              {"mult_at_q", r.mult_at_q},
              {"failures", r.failures}};
}

Json to_json(const RootClassification& rc) {
  Json comps = Json::array();
  for (const auto& c : rc.components) comps.push_back(c.name());
  return Json{{"negative_definite", rc.negative_definite},
              {"is_root_lattice", rc.is_root_lattice},
              {"root_count", std::to_string(rc.root_count)},
              {"components", comps},
              {"label", rc.label},
              {"root_sublattice_rank", rc.root_sublattice_rank},
              {"root_sublattice_index", rc.root_sublattice_index.get_str()},
              {"simple_roots", to_json(rc.simple_roots.transpose())}};
}

Json to_json(const CheckList& c) {
  Json a = Json::array();
  for (const auto& [name, ok] : c.items) a.push_back(Json{{"check", name}, {"ok", ok}});
  return a;
}

Json to_json(const ObstructionReport& r) {
  Json ratios = Json::array();
  for (const auto& rc : r.ratios)
    ratios.push_back(Json{{"candidate", rc.candidate},
                          {"d_candidate", rc.d_candidate.get_str()},
                          {"ratio", rc.ratio.get_str()},
                          {"square", rc.square}});
  return Json{{"include_g", r.include_g},
              {"e_ivstar_norm", r.e_ivstar_norm.get_str()},
              {"ivstar_shape", r.ivstar_shape},
              {"ivstar_reduced_label", r.ivstar_affine_label},
              {"s_generators", r.s_generators},
              {"s_rank", r.s_rank},
              {"s_degenerate", r.s_degenerate},
              {"perp_rank", r.perp_rank},
              {"perp_gram", to_json(r.perp_gram)},
              {"perp_negative_definite", r.perp_negative_definite},
              {"perp_roots", r.perp_roots},
              {"named_gram", to_json(r.named_gram)},
              {"named_in_perp", r.named_in_perp},
              {"named_span_roots", r.named_span_roots},
              {"named_index_in_perp", r.named_index_in_perp.get_str()},
              {"ratios", ratios},
              {"checks", to_json(r.checks)}};
}

}  // namespace k3lat
