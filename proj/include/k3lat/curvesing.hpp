#pragma once

// Plane curves over Q: local multiplicities, tangent cones, intersection
// numbers, Milnor numbers, ADE labels and a certified singular-locus check.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/poly.hpp"

namespace k3lat {

using ProjPoint = std::array<Rat, 3>;

/// Nonzero homogeneous polynomial of the given degree.
class HomogeneousCurve {
 public:
  HomogeneousCurve() = default;
  HomogeneousCurve(int degree, TriPoly poly);

  int degree() const { return degree_; }
  const TriPoly& poly() const { return poly_; }
  bool operator==(const HomogeneousCurve& o) const { return degree_ == o.degree_ && poly_ == o.poly_; }

 private:
  int degree_ = 0;
  TriPoly poly_;
};

/// "C3", "C4", "C7".
HomogeneousCurve curve_catalog(const std::string& name);
/// D_mu; mu = 0 is rejected.
HomogeneousCurve curve_dmu(const Rat& mu);

std::string to_string(const ProjPoint& p);
bool same_point(const ProjPoint& p, const ProjPoint& q);

/// Dehomogenize in the chart of the largest-index nonzero coordinate and move
/// p to the origin.
BiPoly localize(const HomogeneousCurve& f, const ProjPoint& p);

struct ConeData {
  int multiplicity = 0;
  /// Multiplicities of the distinct linear factors over the closure, descending.
  std::vector<int> pattern;
  BiPoly cone;
};
ConeData multiplicity_and_cone(const BiPoly& g);

/// Intersection number at the origin; nullopt means infinity.
std::optional<long> intersection_multiplicity(const BiPoly& f, const BiPoly& g);

struct SingularityReport {
  ProjPoint point{};
  int multiplicity = 0;
  /// nullopt when infinite (non-isolated singularity).
  std::optional<long> milnor;
  std::vector<int> pattern;
  /// "smooth", "A3", "D4", "E6", ..., "not on curve", "non-reduced", "unclassified"
  std::string label;
};
SingularityReport milnor_and_classify(const BiPoly& g);
SingularityReport classify_point(const HomogeneousCurve& f, const ProjPoint& p);

/// Order at p of f restricted to the line through p and q; nullopt when the
/// line is a component.
std::optional<long> line_intersection_multiplicity(const HomogeneousCurve& f, const ProjPoint& p,
                                                   const ProjPoint& q);

enum class SupportStatus { Verified, UndeclaredSingularPoint, DeclaredPointSmooth, NonReduced, UnverifiedResidual };
std::string to_string(SupportStatus s);

struct SupportVerdict {
  SupportStatus status = SupportStatus::UnverifiedResidual;
  /// Reports at the declared points.
  std::vector<SingularityReport> declared;
  /// Singular points found outside the declared set.
  std::vector<ProjPoint> undeclared;
  /// Index of the coordinate change that produced the certificate, -1 if none.
  int transform = -1;
  std::string detail;
  bool verified() const { return status == SupportStatus::Verified; }
};
/// Certifies that the singular points of f are exactly the declared ones.
SupportVerdict singular_support_check(const HomogeneousCurve& f, const std::vector<ProjPoint>& declared);

struct ConditionsReport {
  bool general_position = false;
  bool singularities = false;
  bool line_multiplicities = false;
  SingularityReport at_q;
  std::array<SingularityReport, 3> at_p;
  SupportVerdict support;
  /// I_{p_i}(C, l_i) and I_q(C, l_i); -1 stands for infinity.
  std::array<long, 3> mult_at_p{};
  std::array<long, 3> mult_at_q{};
  std::vector<std::string> failures;
  bool ok() const { return general_position && singularities && line_multiplicities; }
};
ConditionsReport check_conditions(const HomogeneousCurve& f, const std::array<ProjPoint, 3>& p, const ProjPoint& q);

}  // namespace k3lat
