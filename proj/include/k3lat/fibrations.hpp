#pragma once

// (-2)-roots and Dynkin classification, Kodaira fibers and trivial lattices,
// Mordell-Weil invariants, configuration search, and the explicit
// U+A5^3 Neron-Severi model.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/discform.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// ---------------------------------------------------------------------------
// Short vectors and roots

/// All x with x^T Q x == target for positive definite Q, sorted
/// lexicographically. Exact Fincke-Pohst enumeration.
std::vector<IntVector> short_vectors_serial(const IntMatrix& posdef, const Int& target);
/// Same result; top-level branches distributed over OpenMP threads.
std::vector<IntVector> short_vectors(const IntMatrix& posdef, const Int& target);

/// The (-2)-vectors of a negative definite lattice.
std::vector<IntVector> enumerate_roots(const Lattice& l);
std::vector<IntVector> enumerate_roots_serial(const Lattice& l);

/// s_delta(x) = x + <x,delta> delta; requires delta^2 = -2.
IntVector reflection(const Lattice& l, const IntVector& delta, const IntVector& x);

struct DynkinComponent {
  char type = 'A';
  int rank = 0;
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  bool operator==(const DynkinComponent&) const = default;
};

struct RootClassification {
  bool negative_definite = false;
  bool is_root_lattice = false;
  std::size_t root_count = 0;
  /// Components of the root sublattice.
  std::vector<DynkinComponent> components;
  /// e.g. "A2+A1"; "0" when there are no roots.
  std::string label;
  /// Columns are simple roots.
  IntMatrix simple_roots;
  std::size_t root_sublattice_rank = 0;
  /// Index of the root sublattice when it has full rank, otherwise 0.
  Int root_sublattice_index = 0;
};
RootClassification classify_root_lattice(const Lattice& l);

// ---------------------------------------------------------------------------
// Kodaira fibers

enum class KodairaKind { In, InStar, II, III, IV, IIStar, IIIStar, IVStar };

/// Frozen dictionary (tag -> root type, m_v, m_v^(1)):
///   I_n   -> A_{n-1}, n, n        (n >= 2; I_1 has no root type, 1, 1)
///   II    -> none, 1, 1           III  -> A1, 2, 2      IV   -> A2, 3, 3
///   I*_n  -> D_{n+4}, n+5, 4      IV*  -> E6, 7, 3      III* -> E7, 8, 2
///   II*   -> E8, 9, 1
struct KodairaFiber {
  KodairaKind kind = KodairaKind::In;
  int n = 1;

  static KodairaFiber parse(const std::string& tag);
  std::string tag() const;
  std::optional<DynkinComponent> root_type() const;
  int root_rank() const;
  int components() const;
  int mult_one_components() const;
  bool operator==(const KodairaFiber&) const = default;
};

struct FiberConfiguration {
  std::vector<KodairaFiber> fibers;

  FiberConfiguration() = default;
  /// Rejects configurations whose root ranks sum past 18.
  explicit FiberConfiguration(std::vector<KodairaFiber> f);
  /// Comma-separated tags, e.g. "IV*,IV*,IV*".
  static FiberConfiguration parse(const std::string& list);
  std::string to_string() const;
  int root_rank_sum() const;
};

Lattice root_lattice_of(const DynkinComponent& c);
/// U + (sum of the fibers' root lattices).
Lattice trivial_lattice(const FiberConfiguration& cfg);
/// rho = r + 2 + sum (m_v - 1)
long picard_from_config(const FiberConfiguration& cfg, long mw_rank);

struct ConfigDeterminant {
  Int product;  // prod m_v^(1)
  Rat value;    // product / n^2
  bool integral = false;
};
ConfigDeterminant det_from_config(const FiberConfiguration& cfg, const Int& torsion);

struct MwInvariants {
  std::size_t rank = 0;
  Int torsion = 1;
};
/// NS / T for a sublattice T of NS.
MwInvariants mw_invariants(const Embedding& trivial_in_ns);

/// True iff d_trivial / d_ns is the square of a positive integer.
bool square_obstruction(const Int& d_trivial, const Int& d_ns);
/// True iff a positive rational is the square of a rational.
bool is_rational_square(const Rat& x);

struct ConfigVerdict {
  FiberConfiguration config;
  Int d_trivial;
  Rat ratio;  // d_trivial / d_ns
  bool square = false;
};
/// All multisets extending `required` by `slots` fibers drawn from `allowed`
/// whose added root ranks sum to `rank_target`, each judged against d_ns.
std::vector<ConfigVerdict> search_configs(const FiberConfiguration& required, int slots,
                                          const std::vector<KodairaFiber>& allowed, int rank_target,
                                          const Int& d_ns);

// ---------------------------------------------------------------------------
// The U + A5^3 model

/// Basis order: E, F, then Theta^k_1..Theta^k_5 for k = 1, 2, 3.
struct NsModel {
  Lattice lattice;
  IntVector E, F, g;
  /// theta[k][i], k = 0..2 (fiber 1..3), i = 0..5; theta[k][0] = E - sum_i theta[k][i].
  std::array<std::array<IntVector, 6>, 3> theta;
  /// 3g + 2 sum Theta^k_0 + sum Theta^k_1
  IntVector e_ivstar;
  /// E_IV* - (Theta^k_3 + Theta^k_4)
  std::array<IntVector, 3> e_k;
  /// Theta^k_1 + 2 Theta^k_2 + Theta^k_3 - Theta^k_5
  std::array<IntVector, 3> theta_div;
  /// 2 E_IV* + Theta^1
  IntVector a;
};
NsModel build_ns_model();

struct CheckList {
  std::vector<std::pair<std::string, bool>> items;
  void add(std::string name, bool ok) { items.emplace_back(std::move(name), ok); }
  bool ok() const;
};
CheckList verify_model(const NsModel& m);

struct RatioCheck {
  std::string candidate;
  Int d_candidate;
  Rat ratio;  // d(NS) / d(candidate)
  bool square = false;
};

struct ObstructionReport {
  bool include_g = false;
  Int e_ivstar_norm;
  bool ivstar_shape = false;
  std::string ivstar_affine_label;  // classification after dropping one simple component
  std::size_t s_generators = 0;
  std::size_t s_rank = 0;
  bool s_degenerate = false;
  std::size_t perp_rank = 0;
  IntMatrix perp_gram;
  bool perp_negative_definite = false;
  std::size_t perp_roots = 0;
  IntMatrix named_gram;  // A, Theta^2, Theta^3
  bool named_in_perp = false;
  std::size_t named_span_roots = 0;
  /// Index of span(A, Theta^2, Theta^3) in S^perp when ranks agree, else 0.
  Int named_index_in_perp = 0;
  std::vector<RatioCheck> ratios;
  CheckList checks;
};
ObstructionReport obstruction_analysis(const NsModel& m, bool include_g_in_s);

// ---------------------------------------------------------------------------
// U + A5^3 inside the K3 lattice U^3 + E8^2

struct K3EmbeddingWitness {
  bool found = false;
  Lattice k3;
  /// Columns: images of E, F and the three A5 chains.
  IntMatrix ns_basis;
  std::optional<Embedding> ns;
  std::optional<Embedding> transcendental;
  Signature t_signature;
  Int t_abs_det = 0;
  bool primitive = false;
  bool forms_match = false;  // q_T ~ -q_NS
  /// Box radius at which the third chain was found.
  int coefficient_bound = 0;
  std::size_t candidates_tried = 0;
};
/// U to the first U block, two A5 chains into the E8 blocks, the third chain by
/// backtracking over roots of the remaining signature (2,8) block with
/// coefficients bounded by 1, 2, ..., max_bound in turn.
K3EmbeddingWitness embed_u_a5cubed_in_k3(int max_bound = 2);

}  // namespace k3lat
