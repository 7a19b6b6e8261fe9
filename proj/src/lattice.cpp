#include "k3lat/lattice.hpp"

#include <cctype>
#include <sstream>

namespace k3lat {

Lattice::Lattice(IntMatrix gram, std::string label, bool allow_degenerate)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_square()) throw MathError("Gram matrix is not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw MathError("Gram matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!allow_degenerate && det_exact(gram_) == 0) throw MathError("degenerate Gram matrix");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

bool Lattice::is_negative_definite() const {
  return signature().minus == static_cast<int>(rank());
}

bool Lattice::is_positive_definite() const {
  return signature().plus == static_cast<int>(rank());
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

IntMatrix cartan_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return g;
}

}  // namespace

Lattice catalog_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

Lattice catalog_A(int n) {
  if (n < 1) throw MathError("A_n requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Lattice(cartan_from_edges(n, edges), "A" + std::to_string(n));
}

Lattice catalog_D(int n) {
  if (n < 4) throw MathError("D_n requires n >= 4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i + 1 <= n - 2; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 2, n - 1);
  edges.emplace_back(n - 2, n);
  return Lattice(cartan_from_edges(n, edges), "D" + std::to_string(n));
}

Lattice catalog_E(int n) {
  if (n < 6 || n > 8) throw MathError("E_n requires n in {6,7,8}");
  std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {2, 4}};
  for (int i = 4; i < n; ++i) edges.emplace_back(i, i + 1);
  return Lattice(cartan_from_edges(n, edges), "E" + std::to_string(n));
}

namespace {

Lattice catalog_atom(const std::string& tok) {
  if (tok == "U") return catalog_U();
  if (tok.size() < 2) throw MathError("unknown lattice name '" + tok + "'");
  char kind = tok[0];
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw MathError("unknown lattice name '" + tok + "'");
  int n = std::stoi(tok.substr(1));
  switch (kind) {
    case 'A': return catalog_A(n);
    case 'D': return catalog_D(n);
    case 'E': return catalog_E(n);
    default: throw MathError("unknown lattice name '" + tok + "'");
  }
}

}  // namespace

Lattice catalog(const std::string& name) {
  std::vector<Lattice> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, '+')) {
    int power = 1;
    auto caret = item.find('^');
    std::string base = item.substr(0, caret);
    if (caret != std::string::npos) {
      std::string p = item.substr(caret + 1);
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
        throw MathError("bad power in lattice name '" + item + "'");
      power = std::stoi(p);
      if (power < 1) throw MathError("bad power in lattice name '" + item + "'");
    }
    Lattice atom = catalog_atom(base);
    for (int i = 0; i < power; ++i) parts.push_back(atom);
  }
  if (parts.empty()) throw MathError("empty lattice name");
  if (parts.size() == 1) return Lattice(parts[0].gram(), name);
  return direct_sum(parts, name);
}

Lattice direct_sum(const std::vector<Lattice>& parts, std::string label) {
  std::vector<IntMatrix> blocks;
  blocks.reserve(parts.size());
  for (const auto& p : parts) blocks.push_back(p.gram());
  if (label.empty()) {
    for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "+" : "") + parts[i].label();
  }
  return Lattice(block_diagonal(blocks), std::move(label));
}

Lattice rescale(const Lattice& l, const Int& k) {
  if (k == 0) throw MathError("rescale by zero");
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return Lattice(std::move(g), l.label() + "(" + k.get_str() + ")");
}

// ---------------------------------------------------------------------------
// Embeddings

IntMatrix induced_gram(const IntMatrix& gram, const IntMatrix& basis) {
  return basis.transpose() * gram * basis;
}

Embedding::Embedding(Lattice ambient, IntMatrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_.rank()) throw MathError("embedding basis has wrong number of rows");
  if (rank_of(basis_) != basis_.cols()) throw MathError("embedding basis columns are linearly dependent");
  if (basis_.cols() > 0 && det_exact(induced_gram()) == 0) throw MathError("degenerate induced Gram");
}

IntMatrix Embedding::induced_gram() const { return k3lat::induced_gram(ambient_.gram(), basis_); }

Lattice Embedding::sublattice(std::string label) const { return Lattice(induced_gram(), std::move(label)); }

Embedding orthogonal_complement(const Embedding& e) {
  IntMatrix k = kernel_saturated(e.basis().transpose() * e.ambient().gram());
  return Embedding(e.ambient(), std::move(k));
}

Embedding saturation(const Embedding& e) {
  // Integer points of the rational span: kernel of the kernel of B^T.
  IntMatrix perp = kernel_saturated(e.basis().transpose());
  IntMatrix sat = perp.cols() == 0 ? IntMatrix::identity(e.basis().rows()) : kernel_saturated(perp.transpose());
  return Embedding(e.ambient(), std::move(sat));
}

bool is_primitive(const Embedding& e) {
  SnfResult s = snf(e.basis());
  for (const auto& d : s.diag)
    if (d != 1) return false;
  return true;
}

IndexCheck index_and_check(const Embedding& sub) {
  if (sub.rank() != sub.ambient().rank()) throw MathError("not a finite-index sublattice (rank mismatch)");
  IndexCheck r;
  r.index = 1;
  for (const auto& d : snf(sub.basis()).diag) r.index *= d;
  r.d_sub = abs(det_exact(sub.induced_gram()));
  r.d_ambient = sub.ambient().abs_det();
  r.formula_holds = (r.d_sub == r.d_ambient * r.index * r.index);
  return r;
}

// ---------------------------------------------------------------------------
// Binary forms

std::string BinaryFormClass::to_string() const {
  return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

std::vector<BinaryFormClass> enumerate_even_posdef_binary(const Int& det) {
  if (det < 1) throw MathError("determinant must be positive");
  std::vector<BinaryFormClass> out;
  // Reduction gives det = ac - b^2 >= a^2 - a^2/4, so 3a^2 <= 4 det.
  for (Int a = 2; 3 * a * a <= 4 * det; a += 2) {
    for (Int b = 0; 2 * b <= a; ++b) {
      Int num = det + b * b;
      if (num % a != 0) continue;
      Int c = num / a;
      if (c % 2 != 0 || c < a) continue;
      out.push_back({a, b, c, true});
    }
  }
  return out;
}

}  // namespace k3lat
