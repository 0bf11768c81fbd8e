#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/io/curve_document.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/param/parametric.hpp"
#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

/// Parameter name -> expression (a rational or other symbols).
using Bindings = std::map<std::string, ExprAst, std::less<>>;

Bindings parse_bindings(std::string_view text);  // "a=2, b=c/2"
/// Numeric bindings only; throws kInvalidArgument for symbolic values.
Assignment bindings_to_assignment(const Bindings& b);

struct CatalogEntry {
  std::string name;
  CurveDocument document;
  /// Implicit equation with bindings applied; zero when the document has none.
  MultiPoly implicit;
  /// Rational parametrization used as the mover: the document's
  /// rational_param, else the tangent half-angle image of trig_param.
  ParametricPoint mover;
  std::string mover_source;  // "rational_param" or "trig_param"
  std::vector<std::string> notes;
};

struct NamedProgram {
  std::string name;  // file stem
  std::string text;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CurveDocument> documents, std::vector<NamedProgram> constructions = {});

  /// Curves and construction programs compiled into the library.
  static const Catalog& builtin();
  /// Every *.json (curves) and *.dsl (constructions) in `dir` and its
  /// catalog/ and constructions/ subdirectories.
  static Catalog load_directory(const std::filesystem::path& dir);

  std::vector<std::string> names() const;
  bool contains(std::string_view name) const;
  /// Throws kUnknownCurve.
  const CurveDocument& document(std::string_view name) const;
  /// Throws kUnknownCurve, or kUnboundParameter when a binding names a
  /// parameter the curve does not have. Unbound parameters stay symbolic.
  CatalogEntry get(std::string_view name, const Bindings& bindings = {}) const;

  const std::vector<NamedProgram>& constructions() const { return constructions_; }
  /// Throws kInvalidArgument for an unknown construction name.
  const NamedProgram& construction(std::string_view name) const;

 private:
  std::map<std::string, CurveDocument, std::less<>> documents_;
  std::vector<NamedProgram> constructions_;
};

CatalogEntry catalog_get(std::string_view name, const Bindings& bindings = {});

struct VerifyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Exact check of every parametrization of every entry against its
/// implicit equation.
std::vector<VerifyResult> catalog_verify_all(const Catalog& catalog = Catalog::builtin());

}  // namespace curvelab
