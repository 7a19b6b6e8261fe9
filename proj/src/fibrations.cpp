#include <omp.h>

#include <cctype>
#include <sstream>

#include "k3lat/fibrations.hpp"

namespace k3lat {

namespace {

int parse_index(const std::string& digits, const std::string& tag) {
  if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw MathError("unknown Kodaira fiber '" + tag + "'");
  return std::stoi(digits);
}

}  // namespace

KodairaFiber KodairaFiber::parse(const std::string& tag) {
  if (tag == "II") return {KodairaKind::II, 0};
  if (tag == "III") return {KodairaKind::III, 0};
  if (tag == "IV") return {KodairaKind::IV, 0};
  if (tag == "II*") return {KodairaKind::IIStar, 0};
  if (tag == "III*") return {KodairaKind::IIIStar, 0};
  if (tag == "IV*") return {KodairaKind::IVStar, 0};
  if (tag.rfind("I*", 0) == 0) return {KodairaKind::InStar, parse_index(tag.substr(2), tag)};
  if (tag.rfind("I", 0) == 0) {
    int n = parse_index(tag.substr(1), tag);
    if (n < 1) throw MathError("I_n requires n >= 1");
    return {KodairaKind::In, n};
  }
  throw MathError("unknown Kodaira fiber '" + tag + "'");
}

std::string KodairaFiber::tag() const {
  switch (kind) {
    case KodairaKind::In: return "I" + std::to_string(n);
    case KodairaKind::InStar: return "I*" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::IIStar: return "II*";
    case KodairaKind::IIIStar: return "III*";
    case KodairaKind::IVStar: return "IV*";
  }
  return "?";
}

std::optional<DynkinComponent> KodairaFiber::root_type() const {
  switch (kind) {
    case KodairaKind::In:
      if (n >= 2) return DynkinComponent{'A', n - 1};
      return std::nullopt;
    case KodairaKind::InStar: return DynkinComponent{'D', n + 4};
    case KodairaKind::II: return std::nullopt;
    case KodairaKind::III: return DynkinComponent{'A', 1};
    case KodairaKind::IV: return DynkinComponent{'A', 2};
    case KodairaKind::IIStar: return DynkinComponent{'E', 8};
    case KodairaKind::IIIStar: return DynkinComponent{'E', 7};
    case KodairaKind::IVStar: return DynkinComponent{'E', 6};
  }
  return std::nullopt;
}

int KodairaFiber::root_rank() const {
  auto t = root_type();
  return t ? t->rank : 0;
}

int KodairaFiber::components() const {
  switch (kind) {
    case KodairaKind::In: return n;
    case KodairaKind::InStar: return n + 5;
    case KodairaKind::II: return 1;
    case KodairaKind::III: return 2;
    case KodairaKind::IV: return 3;
    case KodairaKind::IIStar: return 9;
    case KodairaKind::IIIStar: return 8;
    case KodairaKind::IVStar: return 7;
  }
  return 0;
}

int KodairaFiber::mult_one_components() const {
  switch (kind) {
    case KodairaKind::In: return n;
    case KodairaKind::InStar: return 4;
    case KodairaKind::II: return 1;
    case KodairaKind::III: return 2;
    case KodairaKind::IV: return 3;
    case KodairaKind::IIStar: return 1;
    case KodairaKind::IIIStar: return 2;
    case KodairaKind::IVStar: return 3;
  }
  return 0;
}

FiberConfiguration::FiberConfiguration(std::vector<KodairaFiber> f) : fibers(std::move(f)) {
  if (root_rank_sum() > 18)
    throw MathError("fiber configuration has root rank " + std::to_string(root_rank_sum()) + " > 18");
}

FiberConfiguration FiberConfiguration::parse(const std::string& list) {
  std::vector<KodairaFiber> f;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) continue;
    f.push_back(KodairaFiber::parse(t));
  }
  return FiberConfiguration(std::move(f));
}

std::string FiberConfiguration::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < fibers.size(); ++i) s += (i ? "," : "") + fibers[i].tag();
  return s;
}

int FiberConfiguration::root_rank_sum() const {
  int s = 0;
  for (const auto& f : fibers) s += f.root_rank();
  return s;
}

Lattice root_lattice_of(const DynkinComponent& c) {
  switch (c.type) {
    case 'A': return catalog_A(c.rank);
    case 'D': return catalog_D(c.rank);
    case 'E': return catalog_E(c.rank);
    default: throw MathError("unknown root type");
  }
}

Lattice trivial_lattice(const FiberConfiguration& cfg) {
  std::vector<Lattice> parts{catalog_U()};
  for (const auto& f : cfg.fibers)
    if (auto t = f.root_type()) parts.push_back(root_lattice_of(*t));
  return direct_sum(parts);
}

long picard_from_config(const FiberConfiguration& cfg, long mw_rank) {
  if (mw_rank < 0) throw MathError("Mordell-Weil rank must be nonnegative");
  long rho = mw_rank + 2;
  for (const auto& f : cfg.fibers) rho += f.components() - 1;
  return rho;
}

ConfigDeterminant det_from_config(const FiberConfiguration& cfg, const Int& torsion) {
  if (torsion < 1) throw MathError("torsion order must be positive");
  ConfigDeterminant d;
  d.product = 1;
  for (const auto& f : cfg.fibers) d.product *= f.mult_one_components();
  d.value = Rat(d.product) / Rat(torsion * torsion);
  d.integral = d.value.get_den() == 1;
  return d;
}

MwInvariants mw_invariants(const Embedding& trivial_in_ns) {
  MwInvariants r;
  r.rank = trivial_in_ns.ambient().rank() - trivial_in_ns.rank();
  r.torsion = 1;
  for (const auto& d : snf(trivial_in_ns.basis()).diag)
    if (d != 0) r.torsion *= d;
  return r;
}

bool square_obstruction(const Int& d_trivial, const Int& d_ns) {
  if (d_trivial <= 0 || d_ns <= 0) throw MathError("determinants must be positive");
  if (d_trivial % d_ns != 0) return false;
  Int q = d_trivial / d_ns;
  return mpz_perfect_square_p(q.get_mpz_t()) != 0;
}

bool is_rational_square(const Rat& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) && mpz_perfect_square_p(x.get_den().get_mpz_t());
}

std::vector<ConfigVerdict> search_configs(const FiberConfiguration& required, int slots,
                                          const std::vector<KodairaFiber>& allowed, int rank_target,
                                          const Int& d_ns) {
  if (slots < 0) throw MathError("slot count must be nonnegative");
  if (required.root_rank_sum() + rank_target > 18) return {};
  std::vector<std::vector<KodairaFiber>> picks;
  std::vector<KodairaFiber> cur;
  // Multisets as nondecreasing index sequences into `allowed`.
  auto rec = [&](auto&& self, std::size_t from, int left, int rank) -> void {
    if (left == 0) {
      if (rank == rank_target) picks.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < allowed.size(); ++i) {
      cur.push_back(allowed[i]);
      self(self, i, left - 1, rank + allowed[i].root_rank());
      cur.pop_back();
    }
  };
  rec(rec, 0, slots, 0);

  std::vector<std::optional<ConfigVerdict>> out(picks.size());
  const long count = static_cast<long>(picks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    std::vector<KodairaFiber> f = required.fibers;
    f.insert(f.end(), picks[i].begin(), picks[i].end());
    ConfigVerdict v;
    v.config = FiberConfiguration(std::move(f));
    v.d_trivial = trivial_lattice(v.config).abs_det();
    v.ratio = Rat(v.d_trivial) / Rat(d_ns);
    v.square = square_obstruction(v.d_trivial, d_ns);
    out[i] = std::move(v);
  }
  std::vector<ConfigVerdict> res;
  for (auto& v : out)
    if (v) res.push_back(std::move(*v));
  return res;
}

}  // namespace k3lat
