#pragma once

// Discriminant groups A_L = L*/L with their finite quadratic forms, isometry
// testing, gluing over unimodular lattices and even overlattices.

#include <optional>
#include <utility>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/// Canonical residues: q in [0,2), b in [0,1).
Rat mod2(const Rat& x);
Rat mod1(const Rat& x);

/// A finite abelian group Z/d_1 + ... + Z/d_k (d_i | d_{i+1}, d_i > 1) with a
/// quadratic form into Q/2Z and its bilinear form into Q/Z. Elements are
/// coefficient vectors with respect to the generators.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(IntVector orders, RatVector q_values, RatMatrix pairings);

  const IntVector& orders() const { return orders_; }
  const RatVector& q_values() const { return q_values_; }
  const RatMatrix& pairings() const { return pairings_; }
  std::size_t num_generators() const { return orders_.size(); }
  Int size() const;
  bool is_trivial() const { return orders_.empty(); }

  Rat q(const IntVector& x) const;
  Rat b(const IntVector& x, const IntVector& y) const;
  IntVector reduce(IntVector x) const;
  IntVector add(const IntVector& x, const IntVector& y) const;
  Int order_of(const IntVector& x) const;

  /// Mixed-radix enumeration, first coordinate most significant.
  IntVector element(Int index) const;
  std::vector<IntVector> elements() const;

  /// Columns are dual vectors (source-lattice coordinates) lifting the generators.
  const std::optional<RatMatrix>& lift() const { return lift_; }
  /// Rows map a dual vector to generator coefficients (before reduction).
  const std::optional<RatMatrix>& to_coefficients() const { return to_coeffs_; }
  void set_lift(RatMatrix lift, RatMatrix to_coeffs);
  RatVector lift_of(const IntVector& x) const;
  IntVector element_of_dual(const RatVector& z) const;

  bool operator==(const FiniteQuadraticForm& o) const {
    return orders_ == o.orders_ && q_values_ == o.q_values_ && pairings_ == o.pairings_;
  }

 private:
  IntVector orders_;
  RatVector q_values_;
  RatMatrix pairings_;
  std::optional<RatMatrix> lift_;
  std::optional<RatMatrix> to_coeffs_;
};

/// Requires an even nondegenerate lattice.
FiniteQuadraticForm disc_form_of(const Lattice& l);

int length_of(const FiniteQuadraticForm& q);

struct NikulinCheck {
  std::size_t rank = 0;
  int length = 0;
  bool indefinite = false;
  bool rank_condition = false;  // rank >= length + 2
};
NikulinCheck nikulin_hypothesis(const Lattice& l);

FiniteQuadraticForm negate(const FiniteQuadraticForm& q);
/// Orthogonal sum renormalized to a divisibility chain.
FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& parts);

struct IsometryResult {
  bool isomorphic = false;
  /// images[i] = image of generator i of the first form, as an element of the second.
  std::vector<IntVector> images;
};
/// Exhaustive backtracking; the witness is the lexicographically least one.
IsometryResult are_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b,
                              const Int& bound = Int(10000));

/// Elements of exact order `order` with q == 0, in enumeration order.
std::vector<IntVector> isotropic_elements(const FiniteQuadraticForm& q, const Int& order);

struct GluingData {
  Lattice ambient;
  Embedding sub;
  Embedding comp;
  FiniteQuadraticForm q_sub;
  FiniteQuadraticForm q_comp;
  /// Coset representatives of L / (S + T) in ambient coordinates.
  std::vector<IntVector> h_representatives;
  /// (class in A_S, class in A_T) for every element of H.
  std::vector<std::pair<IntVector, IntVector>> map_table;
};
/// Requires an even unimodular ambient and a primitive nondegenerate sub.
GluingData glue_map(const Lattice& ambient, const Embedding& sub);

struct Overlattice {
  Lattice lattice;
  /// The original lattice inside the overlattice.
  Embedding original;
  Int index;
};
/// Even overlattice generated by L and lifts of isotropic elements of A_L.
/// `q` must carry lifts into L (as produced by disc_form_of or direct_sum).
Overlattice overlattice_from_isotropic(const Lattice& l, const FiniteQuadraticForm& q,
                                       const std::vector<IntVector>& generators);

std::string to_string(const IntVector& v);
std::string to_string(const FiniteQuadraticForm& q);

}  // namespace k3lat
