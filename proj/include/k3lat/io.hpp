#pragma once

// JSON file formats. Integers and rationals are decimal strings ("-3", "7/2").
//
//   Lattice    {"label": str?, "gram": [[str]]}
//   Embedding  {"ambient": Lattice, "basis": [[str]]}   rows = ambient coordinates,
//                                                       columns = sublattice basis
//   Curve      {"degree": int, "terms": [{"exp": [a,b,c], "coeff": "p/q"}]}
//   Config     {"fibers": ["IV*", "I6", "I*2", ...]}
//
// Emission is canonical: sorted keys, two-space indent, trailing newline, curve
// terms in decreasing exponent order.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "k3lat/curvesing.hpp"
#include "k3lat/discform.hpp"
#include "k3lat/fibrations.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

using Json = nlohmann::json;

/// Malformed input; the message starts with a JSON path or a line/column.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);
std::string emit(const Json& j);

Int int_from_json(const Json& j, const std::string& path);
Rat rat_from_json(const Json& j, const std::string& path);
IntMatrix matrix_from_json(const Json& j, const std::string& path);
Json to_json(const Int& v);
Json to_json(const Rat& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);

Lattice lattice_from_json(const Json& j, const std::string& path = "$");
Json lattice_to_json(const Lattice& l);
Embedding embedding_from_json(const Json& j, const std::string& path = "$");
Json embedding_to_json(const Embedding& e);
HomogeneousCurve curve_from_json(const Json& j, const std::string& path = "$");
Json curve_to_json(const HomogeneousCurve& c);
FiberConfiguration config_from_json(const Json& j, const std::string& path = "$");
Json config_to_json(const FiberConfiguration& c);

/// "a,b,c" with rational entries.
ProjPoint parse_point(const std::string& text);
/// "1,0,-1" with integer entries.
IntVector parse_int_vector(const std::string& text);

Json to_json(const ProjPoint& p);
Json to_json(const Signature& s);
Json to_json(const FiniteQuadraticForm& q);
Json to_json(const SingularityReport& r);
Json to_json(const SupportVerdict& v);
Json to_json(const ConditionsReport& r);
Json to_json(const RootClassification& rc);
Json to_json(const ObstructionReport& r);
Json to_json(const CheckList& c);

}  // namespace k3lat
