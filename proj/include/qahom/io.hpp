#pragma once

// JSON records for every input and output object. Rationals are strings
// "p/q" (a bare integer "p" is accepted on input).

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qahom/algebra.hpp"
#include "qahom/complex.hpp"
#include "qahom/koszul.hpp"
#include "qahom/lie.hpp"
#include "qahom/model.hpp"

namespace qahom::io {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json parse_file(const std::string& path);

Rational rational_from_json(const Json& j, const std::string& field);
Json to_json(const Rational& r);

Matrix matrix_from_json(const Json& j, const std::string& field);
Json to_json(const Matrix& m);

FiltObject object_from_json(const Json& j, const std::string& field);
Json to_json(const FiltObject& v);

FiltMorphism morphism_from_json(const Json& j, const std::string& field);
Json to_json(const FiltMorphism& f);

/// { "objects": {degree: object}, "differentials": {degree: matrix} }
Complex complex_from_json(const Json& j, const std::string& field);
Json to_json(const Complex& c);

/// { "source", "target", "components": {degree: matrix} }
ChainMap chain_map_from_json(const Json& j, const std::string& field);
Json to_json(const ChainMap& f);

/// { "A", "B", "X", "Y": complexes; "left", "right", "top", "bottom": {degree: matrix} }
LiftingSquare square_from_json(const Json& j, const std::string& field);
Json to_json(const LiftingSquare& sq);

/// { "library": name } or { "dim", "degrees", "weights", "brackets": [{ "i", "j", "coeffs" }],
///   "differential"?, "names"? }
DGLie lie_from_json(const Json& j, const std::string& field);
Json to_json(const DGLie& g);

/// A string, { "polynomial", "variables"? } or { "vars", "terms": [{ "coeff", "exponents" }] }.
Polynomial polynomial_from_json(const Json& j, const std::string& field);
Json to_json(const Polynomial& f);

struct DerivedQuotientInput {
  DGLie lie;
  GradedBasisAlgebra algebra;
  std::vector<Matrix> action;
};
/// { "lie", "algebra": { "generators": [{ "name", "weight" }], "bound" },
///   "action": [{ "element", "generator", "value": polynomial }] }
DerivedQuotientInput derived_quotient_from_json(const Json& j, const std::string& field, std::size_t default_bound);

struct KoszulInput {
  FiltObject p;
  std::optional<std::vector<Rational>> m;
};
/// { "P": object } or { "weights": [...] }, with an optional "m".
KoszulInput koszul_from_json(const Json& j, const std::string& field);

}  // namespace qahom::io
