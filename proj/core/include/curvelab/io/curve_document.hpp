#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/poly/rational.hpp"

namespace curvelab {

struct CurveParameter {
  std::string name;
  Rational default_value;
  Rational min;
  Rational max;
};

/// Coordinates as expression text in one parameter variable.
struct ParamSpec {
  std::string variable;
  std::string x;
  std::string y;
};

/// Serialized form of a base curve. JSON fields: name, description,
/// variables, params [{name, default, min, max}], implicit, trig_param,
/// rational_param ({var, x, y}), notes.
struct CurveDocument {
  std::string name;
  std::string description;
  std::vector<std::string> variables{"x", "y"};
  std::vector<CurveParameter> params;
  std::optional<std::string> implicit;
  std::optional<ParamSpec> trig_param;
  std::optional<ParamSpec> rational_param;
  std::vector<std::string> notes;

  const CurveParameter* find_param(std::string_view name) const;
  /// Throws kValidation: no representation, default outside its range,
  /// duplicate or reserved parameter names, expressions using undeclared
  /// symbols or functions not allowed for that representation.
  void validate() const;
};

/// Rationals are read from JSON integers, decimals or "p/q" strings and
/// written as integers when integral, else as "p/q" strings.
nlohmann::json to_json(const CurveDocument& doc);
CurveDocument curve_document_from_json(const nlohmann::json& j);
CurveDocument parse_curve_document(std::string_view json_text);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace curvelab
