#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "k3lat/claims.hpp"

using namespace k3lat;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  int threads = 0;

  std::string lattice_file, lattice_name, embedding_file;
  std::string config, config_file, required, allowed;
  std::string curve_file, curve_name;
  std::vector<std::string> points;
  std::string p1, p2, p3, q;
  std::string root, vector;
  std::string claim;
  std::string reading = "both";
  long det = 0, torsion = 1, mw_rank = 0, slots = 0, rank_sum = 0;
  std::string d_ns;
  bool count_only = false;
};

Lattice input_lattice(const Options& o) {
  if (!o.lattice_file.empty() && !o.lattice_name.empty()) throw UsageError("give either --lattice or --name");
  if (!o.lattice_file.empty()) return lattice_from_json(load_json_file(o.lattice_file));
  if (!o.lattice_name.empty()) return catalog(o.lattice_name);
  throw UsageError("a lattice is required (--lattice FILE or --name NAME)");
}

Embedding input_embedding(const Options& o) {
  if (o.embedding_file.empty()) throw UsageError("--embedding FILE is required");
  return embedding_from_json(load_json_file(o.embedding_file));
}

FiberConfiguration input_config(const Options& o) {
  if (!o.config.empty() && !o.config_file.empty()) throw UsageError("give either --config or --config-file");
  if (!o.config_file.empty()) return config_from_json(load_json_file(o.config_file));
  if (!o.config.empty()) return FiberConfiguration::parse(o.config);
  throw UsageError("a configuration is required (--config LIST or --config-file FILE)");
}

HomogeneousCurve input_curve(const Options& o) {
  if (!o.curve_file.empty() && !o.curve_name.empty()) throw UsageError("give either --curve or --name");
  if (!o.curve_file.empty()) return curve_from_json(load_json_file(o.curve_file));
  if (!o.curve_name.empty()) return curve_catalog(o.curve_name);
  throw UsageError("a curve is required (--curve FILE or --name NAME)");
}

std::vector<ProjPoint> input_points(const Options& o) {
  std::vector<ProjPoint> out;
  for (const auto& s : o.points) out.push_back(parse_point(s));
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " " : "") << m(i, k);
    os << "]\n";
  }
  return os.str();
}

std::string sig_text(const Signature& s) {
  std::string t = "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
  if (s.zero) t += " kernel " + std::to_string(s.zero);
  return t;
}

std::string milnor_text(const std::optional<long>& m) { return m ? std::to_string(*m) : "infinity"; }

std::string report_text(const SingularityReport& r) {
  std::ostringstream os;
  os << to_string(r.point) << ": " << r.label << " (multiplicity " << r.multiplicity << ", Milnor " << milnor_text(r.milnor)
     << ")";
  return os.str();
}

class Cli {
 public:
  Cli() : app_("Exact lattice, elliptic fibration and plane curve computations", "k3lat") {
    app_.add_flag("--json", o_.json, "Structured output");
    app_.add_option("--threads", o_.threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    app_.require_subcommand(1);
    build_lattice();
    build_glue();
    build_roots();
    build_fiber();
    build_curve();
    build_model_group();
    build_verify();
  }

  int run(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app_.exit(e);
      return code == 0 ? 0 : 2;
    }
    if (o_.threads > 0) omp_set_num_threads(o_.threads);
    if (!action_) return 2;
    try {
      return action_();
    } catch (const FormatError& e) {
      std::cerr << "format error: " << e.what() << "\n";
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << "\n";
    } catch (const MathError& e) {
      std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

 private:
  CLI::App app_;
  Options o_;
  std::function<int()> action_;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* s = parent->add_subcommand(name, help);
    s->callback([this, fn] { action_ = fn; });
    return s;
  }

  void lattice_opts(CLI::App* s) {
    s->add_option("--lattice", o_.lattice_file, "Lattice JSON file");
    s->add_option("--name", o_.lattice_name, "Catalog name, e.g. U+A5^3");
  }

  int out(const Json& j, const std::string& text) {
    if (o_.json) std::cout << emit(j);
    else std::cout << text;
    return 0;
  }

  void build_lattice() {
    auto* g = app_.add_subcommand("lattice", "Lattice invariants");
    g->require_subcommand(1);
    lattice_opts(leaf(g, "det", "Determinant of the Gram matrix", [this] {
      auto l = input_lattice(o_);
      return out(Json{{"det", l.det().get_str()}, {"abs_det", l.abs_det().get_str()}}, l.det().get_str() + "\n");
    }));
    lattice_opts(leaf(g, "signature", "Signature", [this] {
      auto l = input_lattice(o_);
      return out(to_json(l.signature()), sig_text(l.signature()) + "\n");
    }));
    lattice_opts(leaf(g, "discform", "Discriminant form", [this] {
      auto l = input_lattice(o_);
      auto q = disc_form_of(l);
      auto n = nikulin_hypothesis(l);
      Json j = to_json(q);
      j["length"] = length_of(q);
      j["nikulin_applies"] = n.indefinite && n.rank_condition;
      return out(j, to_string(q) + "\nlength " + std::to_string(length_of(q)) + "\n");
    }));
    auto emb_leaf = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
      leaf(g, name, help, std::move(fn))->add_option("--embedding", o_.embedding_file, "Embedding JSON file");
    };
    emb_leaf("complement", "Orthogonal complement of an embedded sublattice", [this] {
      auto c = orthogonal_complement(input_embedding(o_));
      auto cl = classify_root_lattice(c.sublattice());
      Json j = embedding_to_json(c);
      j["gram"] = to_json(c.induced_gram());
      j["roots"] = cl.label;
      std::ostringstream os;
      os << "rank " << c.rank() << "\ngram\n" << matrix_text(c.induced_gram());
      if (cl.negative_definite) os << "roots " << cl.label << "\n";
      os << "basis\n" << matrix_text(c.basis());
      return out(j, os.str());
    });
    emb_leaf("saturate", "Saturation of an embedded sublattice", [this] {
      auto e = input_embedding(o_);
      auto s = saturation(e);
      return out(embedding_to_json(s), "basis\n" + matrix_text(s.basis()));
    });
    emb_leaf("isprimitive", "Whether the sublattice is primitive", [this] {
      bool p = is_primitive(input_embedding(o_));
      return out(Json{{"primitive", p}}, std::string(p ? "true" : "false") + "\n");
    });
    emb_leaf("index", "Index of a finite-index sublattice and the determinant law", [this] {
      auto ic = index_and_check(input_embedding(o_));
      Json j{{"index", ic.index.get_str()},
             {"d_sub", ic.d_sub.get_str()},
             {"d_ambient", ic.d_ambient.get_str()},
             {"formula_holds", ic.formula_holds}};
      return out(j, "index " + ic.index.get_str() + "\nd(sub) = " + ic.d_sub.get_str() + " = " + ic.d_ambient.get_str() +
                        " * " + ic.index.get_str() + "^2: " + (ic.formula_holds ? "true" : "false") + "\n");
    });
    leaf(g, "binforms", "Reduced even positive definite binary forms of a determinant", [this] {
      auto forms = enumerate_even_posdef_binary(Int(o_.det));
      Json a = Json::array();
      std::string text;
      for (const auto& f : forms) {
        a.push_back(Json::array({f.a.get_str(), f.b.get_str(), f.c.get_str()}));
        text += f.to_string() + "\n";
      }
      return out(Json{{"det", std::to_string(o_.det)}, {"forms", a}}, text);
    })->add_option("--det", o_.det, "Determinant")->required();
  }

  void build_glue() {
    auto* s = leaf(&app_, "glue", "Gluing map between a primitive sublattice and its complement", [this] {
      auto e = input_embedding(o_);
      auto gd = glue_map(e.ambient(), e);
      Json rows = Json::array();
      std::ostringstream os;
      os << "|A_S| = " << gd.q_sub.size() << ", |A_T| = " << gd.q_comp.size() << "\n";
      for (std::size_t i = 0; i < gd.map_table.size(); ++i) {
        const auto& [s_cls, t_cls] = gd.map_table[i];
        rows.push_back(Json{{"h", to_json(gd.h_representatives[i])}, {"a_s", to_json(s_cls)}, {"a_t", to_json(t_cls)}});
        os << to_string(gd.h_representatives[i]) << ": " << to_string(s_cls) << " -> " << to_string(t_cls) << "\n";
      }
      Json j{{"q_sub", to_json(gd.q_sub)}, {"q_comp", to_json(gd.q_comp)}, {"map", rows},
             {"complement", embedding_to_json(gd.comp)}};
      return out(j, os.str());
    });
    s->add_option("--embedding", o_.embedding_file, "Embedding JSON file");
  }

  void build_roots() {
    auto* g = app_.add_subcommand("roots", "(-2)-roots of negative definite lattices");
    g->require_subcommand(1);
    auto* en = leaf(g, "enum", "Enumerate roots", [this] {
      auto roots = enumerate_roots(input_lattice(o_));
      Json a = Json::array();
      std::string text = std::to_string(roots.size()) + "\n";
      for (const auto& r : roots) {
        a.push_back(to_json(r));
        if (!o_.count_only) text += to_string(r) + "\n";
      }
      Json j{{"count", std::to_string(roots.size())}};
      if (!o_.count_only) j["roots"] = a;
      return out(j, text);
    });
    lattice_opts(en);
    en->add_flag("--count", o_.count_only, "Only print the number of roots");
    lattice_opts(leaf(g, "classify", "ADE type of the root system", [this] {
      auto rc = classify_root_lattice(input_lattice(o_));
      std::ostringstream os;
      os << rc.label << "\nroots " << rc.root_count << "\nroot sublattice rank " << rc.root_sublattice_rank;
      if (rc.root_sublattice_index != 0) os << ", index " << rc.root_sublattice_index;
      os << "\n";
      return out(to_json(rc), os.str());
    }));
    auto* rf = leaf(g, "reflect", "Reflection in a root", [this] {
      auto l = input_lattice(o_);
      auto img = reflection(l, parse_int_vector(o_.root), parse_int_vector(o_.vector));
      return out(Json{{"image", to_json(img)}}, to_string(img) + "\n");
    });
    lattice_opts(rf);
    rf->add_option("--root", o_.root, "Root, comma separated")->required();
    rf->add_option("--vector", o_.vector, "Vector to reflect")->required();
  }

  void config_opts(CLI::App* s) {
    s->add_option("--config", o_.config, "Fiber tags, comma separated");
    s->add_option("--config-file", o_.config_file, "Config JSON file");
  }

  void build_fiber() {
    auto* g = app_.add_subcommand("fiber", "Elliptic fibrations");
    g->require_subcommand(1);
    config_opts(leaf(g, "trivial", "Trivial lattice of a configuration", [this] {
      auto cfg = input_config(o_);
      auto t = trivial_lattice(cfg);
      Json j{{"config", cfg.to_string()}, {"rank", t.rank()}, {"abs_det", t.abs_det().get_str()}, {"lattice", lattice_to_json(t)}};
      return out(j, t.label() + "\nrank " + std::to_string(t.rank()) + "\n|det| " + t.abs_det().get_str() + "\n");
    }));
    auto* pic = leaf(g, "picard", "Picard number from fibers and Mordell-Weil rank", [this] {
      long rho = picard_from_config(input_config(o_), o_.mw_rank);
      return out(Json{{"picard", rho}}, std::to_string(rho) + "\n");
    });
    config_opts(pic);
    pic->add_option("--mw-rank", o_.mw_rank, "Mordell-Weil rank")->check(CLI::NonNegativeNumber);
    auto* det = leaf(g, "det", "Determinant of NS for Mordell-Weil rank 0", [this] {
      auto d = det_from_config(input_config(o_), Int(o_.torsion));
      Json j{{"product", d.product.get_str()}, {"det", d.value.get_str()}, {"integral", d.integral}};
      return out(j, d.value.get_str() + (d.integral ? "" : " (not an integer)") + "\n");
    });
    config_opts(det);
    det->add_option("--torsion", o_.torsion, "Order of the torsion group")->check(CLI::PositiveNumber);
    leaf(g, "mw", "Mordell-Weil rank and torsion of NS / trivial lattice", [this] {
      auto mw = mw_invariants(input_embedding(o_));
      return out(Json{{"rank", mw.rank}, {"torsion", mw.torsion.get_str()}},
                 "rank " + std::to_string(mw.rank) + "\ntorsion " + mw.torsion.get_str() + "\n");
    })->add_option("--embedding", o_.embedding_file, "Trivial lattice inside NS")->required();
    auto* se = leaf(g, "search", "Configurations extending a required set, judged by the square test", [this] {
      auto req = o_.required.empty() ? FiberConfiguration{} : FiberConfiguration::parse(o_.required);
      std::vector<KodairaFiber> allowed = FiberConfiguration::parse(o_.allowed).fibers;
      auto res = search_configs(req, static_cast<int>(o_.slots), allowed, static_cast<int>(o_.rank_sum), Int(o_.d_ns));
      Json rows = Json::array();
      std::ostringstream os;
      for (const auto& c : res) {
        rows.push_back(Json{{"config", c.config.to_string()}, {"d_trivial", c.d_trivial.get_str()},
                            {"ratio", c.ratio.get_str()}, {"square", c.square}});
        os << c.config.to_string() << "  d=" << c.d_trivial << "  ratio=" << c.ratio << "  "
           << (c.square ? "square" : "not a square") << "\n";
      }
      if (res.empty()) os << "no configurations\n";
      return out(Json{{"configs", rows}}, os.str());
    });
    se->add_option("--required", o_.required, "Required fibers, comma separated");
    se->add_option("--slots", o_.slots, "Number of additional fibers")->required()->check(CLI::NonNegativeNumber);
    se->add_option("--allowed", o_.allowed, "Allowed fiber tags")->required();
    se->add_option("--rank-sum", o_.rank_sum, "Root rank of the added fibers")->required();
    se->add_option("--d-ns", o_.d_ns, "Determinant of NS")->required();
  }

  void curve_opts(CLI::App* s) {
    s->add_option("--curve", o_.curve_file, "Curve JSON file");
    s->add_option("--name", o_.curve_name, "C3, C4, C7 or Dmu(x)");
  }

  void build_curve() {
    auto* g = app_.add_subcommand("curve", "Plane curve singularities");
    g->require_subcommand(1);
    auto* cl = leaf(g, "classify", "Multiplicity, Milnor number and ADE type at points", [this] {
      auto f = input_curve(o_);
      Json a = Json::array();
      std::string text;
      for (const auto& p : input_points(o_)) {
        auto r = classify_point(f, p);
        a.push_back(to_json(r));
        text += report_text(r) + "\n";
      }
      return out(a, text);
    });
    curve_opts(cl);
    cl->add_option("--point", o_.points, "Point a,b,c (repeatable)")->required();
    auto* co = leaf(g, "conditions", "The three conditions at p1, p2, p3 and q", [this] {
      auto r = check_conditions(input_curve(o_), {parse_point(o_.p1), parse_point(o_.p2), parse_point(o_.p3)},
                                parse_point(o_.q));
      std::ostringstream os;
      os << "(i)   general position: " << (r.general_position ? "pass" : "fail") << "\n"
         << "(ii)  singularities: " << (r.singularities ? "pass" : "fail") << "\n"
         << "(iii) line multiplicities: " << (r.line_multiplicities ? "pass" : "fail") << "\n"
         << "q:  " << report_text(r.at_q) << "\n";
      for (const auto& s : r.at_p) os << "p:  " << report_text(s) << "\n";
      os << "support: " << to_string(r.support.status) << "\n";
      for (const auto& f : r.failures) os << "failure " << f << "\n";
      os << (r.ok() ? "conditions hold" : "conditions fail") << "\n";
      return out(to_json(r), os.str());
    });
    curve_opts(co);
    co->add_option("--p1", o_.p1, "First point")->required();
    co->add_option("--p2", o_.p2, "Second point")->required();
    co->add_option("--p3", o_.p3, "Third point")->required();
    co->add_option("--q", o_.q, "Fourth point")->required();
    auto* su = leaf(g, "support", "Certify the singular points are exactly the declared ones", [this] {
      auto v = singular_support_check(input_curve(o_), input_points(o_));
      std::ostringstream os;
      os << to_string(v.status) << "\n";
      for (const auto& r : v.declared) os << "  " << report_text(r) << "\n";
      for (const auto& p : v.undeclared) os << "  undeclared " << to_string(p) << "\n";
      if (!v.detail.empty()) os << v.detail << "\n";
      return out(to_json(v), os.str());
    });
    curve_opts(su);
    su->add_option("--point", o_.points, "Declared point a,b,c (repeatable)");
    leaf(g, "catalog", "Emit a catalog curve as JSON", [this] {
      std::cout << emit(curve_to_json(curve_catalog(o_.curve_name)));
      return 0;
    })->add_option("--name", o_.curve_name, "C3, C4, C7 or Dmu(x)")->required();
  }

  void build_model_group() {
    auto* g = app_.add_subcommand("ns-model", "The U+A5^3 Neron-Severi model");
    g->require_subcommand(1);
    auto* obstruction = leaf(g, "obstruction", "Isotropic IV* class, the sublattice S and its complement", [this] {
      auto m = build_ns_model();
      auto model = verify_model(m);
      std::vector<bool> readings;
      if (o_.reading != "with-g") readings.push_back(false);
      if (o_.reading != "without-g") readings.push_back(true);
      Json j{{"model_checks", to_json(model)}};
      std::ostringstream os;
      os << "model identities: " << (model.ok() ? "pass" : "fail") << "\n";
      bool ok = model.ok();
      for (bool with_g : readings) {
        auto r = obstruction_analysis(m, with_g);
        j[with_g ? "with_g" : "without_g"] = to_json(r);
        ok = ok && r.checks.ok();
        os << "\nS " << (with_g ? "with" : "without") << " g: " << r.s_generators << " generators, rank " << r.s_rank
           << (r.s_degenerate ? ", degenerate" : "") << "\n"
           << "E_IV*^2 = " << r.e_ivstar_norm << ", IV* shape " << (r.ivstar_shape ? "ok" : "wrong") << " ("
           << r.ivstar_affine_label << ")\n"
           << "S^perp rank " << r.perp_rank
           << (r.perp_negative_definite ? ", negative definite, roots " + std::to_string(r.perp_roots) : ", indefinite")
           << "\nS^perp gram\n"
           << matrix_text(r.perp_gram) << "A, Theta^2, Theta^3 gram\n"
           << matrix_text(r.named_gram) << "orthogonal to S: " << (r.named_in_perp ? "yes" : "no")
           << ", roots in span " << r.named_span_roots << ", index in S^perp " << r.named_index_in_perp << "\n";
        for (const auto& rc : r.ratios)
          os << "d(NS)/d(" << rc.candidate << ") = " << rc.ratio << (rc.square ? " square" : " not a square") << "\n";
        for (const auto& [name, pass] : r.checks.items)
          if (!pass) os << "check failed: " << name << "\n";
      }
      out(j, os.str());
      return ok ? 0 : 1;
    });
    obstruction->alias("section8");
    obstruction->add_option("--reading", o_.reading, "Generators of S")->check(CLI::IsMember({"with-g", "without-g", "both"}));
  }

  void build_verify() {
    auto* g = app_.add_subcommand("verify", "Run the claim suite");
    g->require_subcommand(1);
    auto* s = leaf(g, "claims", "Run all claims, or one with --claim", [this] {
      std::vector<std::string> ids = o_.claim.empty() ? claim_ids() : std::vector<std::string>{o_.claim};
      if (!o_.claim.empty() && !is_claim_id(o_.claim)) throw UsageError("unknown claim id: " + o_.claim);
      auto recs = run_claims(ids);
      bool failed = false;
      Json a = Json::array();
      std::ostringstream os;
      for (const auto& r : recs) {
        failed = failed || r.status == ClaimStatus::Fail;
        a.push_back(to_json(r));
        os << std::left << std::setw(20) << r.id << std::setw(21) << to_string(r.status) << std::right << std::fixed
           << std::setprecision(2) << std::setw(8) << r.seconds << "s  " << r.description << "\n";
        for (const auto& f : r.failed_checks) os << "    failed: " << f << "\n";
      }
      out(Json{{"claims", a}, {"ok", !failed}}, os.str());
      return failed ? 1 : 0;
    });
    s->alias("paper");
    s->add_option("--claim", o_.claim, "Claim id");
  }
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.run(argc, argv);
}
