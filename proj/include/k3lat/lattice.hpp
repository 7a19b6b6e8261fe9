#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/exactmat.hpp"

namespace k3lat {

/// An integral lattice given by its symmetric Gram matrix.
class Lattice {
 public:
  Lattice() = default;
  /// Rejects non-symmetric and (unless allow_degenerate) singular Gram matrices.
  explicit Lattice(IntMatrix gram, std::string label = {}, bool allow_degenerate = false);

  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  std::size_t rank() const { return gram_.rows(); }

  bool is_even() const;
  /// Signed determinant of the Gram matrix.
  Int det() const { return det_exact(gram_); }
  /// d(L) = |det|.
  Int abs_det() const { return abs(det()); }
  Signature signature() const { return signature_symmetric(gram_); }
  bool is_unimodular() const { return abs_det() == 1; }
  bool is_negative_definite() const;
  bool is_positive_definite() const;

  Int pair(const IntVector& x, const IntVector& y) const { return bilinear(gram_, x, y); }
  Int norm(const IntVector& x) const { return bilinear(gram_, x, x); }

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  IntMatrix gram_;
  std::string label_;
};

/// Catalog of named lattices. Root lattices are negative definite.
///
/// Node orderings (1-based, frozen):
///   A_n  chain 1-2-...-n
///   D_n  chain 1-2-...-(n-2), nodes n-1 and n both attached to n-2
///   E_n  Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
Lattice catalog_U();
Lattice catalog_A(int n);
Lattice catalog_D(int n);
Lattice catalog_E(int n);
/// Accepts "U", "A5", "D6", "E8" and sums with powers such as "U+A5^3",
/// "U^3+E8^2".
Lattice catalog(const std::string& name);

Lattice direct_sum(const std::vector<Lattice>& parts, std::string label = {});
Lattice rescale(const Lattice& l, const Int& k);

/// A sublattice given by the ambient coordinates of its basis (one column per
/// basis vector).
class Embedding {
 public:
  Embedding() = default;
  /// Columns must be linearly independent and span a nondegenerate sublattice.
  Embedding(Lattice ambient, IntMatrix basis);

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.cols(); }
  IntMatrix induced_gram() const;
  Lattice sublattice(std::string label = {}) const;

 private:
  Lattice ambient_;
  IntMatrix basis_;
};

/// Induced Gram B^T G B, no validation.
IntMatrix induced_gram(const IntMatrix& gram, const IntMatrix& basis);

Embedding orthogonal_complement(const Embedding& e);
Embedding saturation(const Embedding& e);
bool is_primitive(const Embedding& e);

struct IndexCheck {
  Int index;
  Int d_sub;
  Int d_ambient;
  bool formula_holds = false;  // d(sub) == d(ambient) * index^2
};
/// Requires a finite-index sublattice.
IndexCheck index_and_check(const Embedding& sub);

/// Reduced representative [[a,b],[b,c]] of an even positive-definite binary form.
struct BinaryFormClass {
  Int a, b, c;
  bool reduced = true;
  bool operator==(const BinaryFormClass&) const = default;
  std::string to_string() const;
};
/// All reduced classes with a, c even, 0 <= 2b <= a <= c and ac - b^2 = det.
std::vector<BinaryFormClass> enumerate_even_posdef_binary(const Int& det);

}  // namespace k3lat
