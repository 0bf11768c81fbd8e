#include "curvelab/io/curve_document.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"

namespace curvelab {

using nlohmann::json;

const CurveParameter* CurveDocument::find_param(std::string_view n) const {
  for (const auto& p : params) {
    if (p.name == n) return &p;
  }
  return nullptr;
}

namespace {

[[noreturn]] void invalid(const CurveDocument& doc, const std::string& message) {
  throw Error(ErrorCode::kValidation, "curve document '" + doc.name + "': " + message);
}

void check_calls(const CurveDocument& doc, const ExprAst& ast, const std::string& where, bool allow_trig,
                 bool allow_sqrt, const std::string& trig_var) {
  if (ast.kind == ExprAst::Kind::kCall) {
    const bool trig = ast.name != "sqrt";
    if (trig && !allow_trig) invalid(doc, where + " may not use " + ast.name + "()");
    if (!trig && !allow_sqrt) invalid(doc, where + " may not use sqrt()");
    if (trig) {
      const ExprAst& arg = ast.children[0];
      if (arg.kind != ExprAst::Kind::kVariable || arg.name != trig_var) {
        invalid(doc, where + ": trigonometric functions must be applied to '" + trig_var + "' directly");
      }
    }
  }
  for (const auto& c : ast.children) check_calls(doc, c, where, allow_trig, allow_sqrt, trig_var);
}

void check_expression(const CurveDocument& doc, const std::string& text, const std::string& where,
                      std::set<std::string> declared, bool allow_trig, bool allow_sqrt,
                      const std::string& var = "") {
  ExprAst ast;
  try {
    ast = parse_expression(text, declared);
  } catch (const Error& e) {
    invalid(doc, where + ": " + e.what());
  }
  check_calls(doc, ast, where, allow_trig, allow_sqrt, var);
}

}  // namespace

void CurveDocument::validate() const {
  if (name.empty()) invalid(*this, "missing name");
  if (!implicit && !trig_param && !rational_param) {
    invalid(*this, "needs at least one of implicit, trig_param, rational_param");
  }
  std::set<std::string> symbols;
  for (const auto& p : params) {
    if (p.name == "x" || p.name == "y" || is_known_function(p.name)) {
      invalid(*this, "parameter name '" + p.name + "' is reserved");
    }
    if (!symbols.insert(p.name).second) invalid(*this, "duplicate parameter '" + p.name + "'");
    if (!(p.min < p.max)) invalid(*this, "parameter '" + p.name + "' has an empty range");
    if (p.default_value < p.min || p.default_value > p.max) {
      invalid(*this, "default of '" + p.name + "' lies outside [" + p.min.to_string() + ", " +
                         p.max.to_string() + "]");
    }
  }
  if (implicit) {
    auto declared = symbols;
    declared.insert({"x", "y"});
    check_expression(*this, *implicit, "implicit", declared, false, false);
  }
  for (const auto* spec : {&trig_param, &rational_param}) {
    if (!*spec) continue;
    const bool trig = spec == &trig_param;
    const std::string where = trig ? "trig_param" : "rational_param";
    const auto& ps = **spec;
    if (ps.variable.empty() || symbols.count(ps.variable) || ps.variable == "x" || ps.variable == "y") {
      invalid(*this, where + " needs a fresh variable name");
    }
    auto declared = symbols;
    declared.insert(ps.variable);
    check_expression(*this, ps.x, where + ".x", declared, trig, !trig, ps.variable);
    check_expression(*this, ps.y, where + ".y", declared, trig, !trig, ps.variable);
  }
}

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  return r.to_string();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_number()) return Rational::parse(j.dump());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::kValidation, "expected a rational number, got " + j.dump());
}

json to_json(const CurveDocument& doc) {
  json j;
  j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  j["variables"] = doc.variables;
  j["params"] = json::array();
  for (const auto& p : doc.params) {
    j["params"].push_back({{"name", p.name},
                           {"default", rational_to_json(p.default_value)},
                           {"min", rational_to_json(p.min)},
                           {"max", rational_to_json(p.max)}});
  }
  if (doc.implicit) j["implicit"] = *doc.implicit;
  if (doc.trig_param) {
    j["trig_param"] = {{"var", doc.trig_param->variable}, {"x", doc.trig_param->x}, {"y", doc.trig_param->y}};
  }
  if (doc.rational_param) {
    j["rational_param"] = {
        {"var", doc.rational_param->variable}, {"x", doc.rational_param->x}, {"y", doc.rational_param->y}};
  }
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  return j;
}

CurveDocument curve_document_from_json(const json& j) {
  CurveDocument doc;
  try {
    doc.name = j.at("name").get<std::string>();
    doc.description = j.value("description", "");
    if (j.contains("variables")) doc.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto& p : j.value("params", json::array())) {
      CurveParameter cp;
      cp.name = p.at("name").get<std::string>();
      cp.default_value = rational_from_json(p.at("default"));
      cp.min = rational_from_json(p.at("min"));
      cp.max = rational_from_json(p.at("max"));
      doc.params.push_back(std::move(cp));
    }
    if (j.contains("implicit")) doc.implicit = j.at("implicit").get<std::string>();
    for (const char* key : {"trig_param", "rational_param"}) {
      if (!j.contains(key)) continue;
      const auto& s = j.at(key);
      ParamSpec ps{s.at("var").get<std::string>(), s.at("x").get<std::string>(), s.at("y").get<std::string>()};
      (std::string(key) == "trig_param" ? doc.trig_param : doc.rational_param) = std::move(ps);
    }
    if (j.contains("notes")) doc.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("malformed curve document: ") + e.what());
  }
  if (doc.variables != std::vector<std::string>{"x", "y"}) {
    throw Error(ErrorCode::kValidation, "curve document '" + doc.name + "': variables must be [\"x\", \"y\"]");
  }
  doc.validate();
  return doc;
}

CurveDocument parse_curve_document(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSyntax, std::string("invalid JSON: ") + e.what(),
                SourceLocation{e.byte, 0, 0});
  }
  return curve_document_from_json(j);
}

}  // namespace curvelab
