#include "curvelab/catalog/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "curvelab/error.hpp"
#include "embedded_fixtures.hpp"

namespace curvelab {

Bindings parse_bindings(std::string_view text) {
  Bindings out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      throw Error(ErrorCode::kSyntax, "empty binding in '" + std::string(text) + "'");
    }
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kSyntax, "binding '" + std::string(item) + "' must have the form name=value");
    }
    std::string name(item.substr(0, eq));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    const ExprAst key = parse_expression(name);
    if (key.kind != ExprAst::Kind::kVariable) {
      throw Error(ErrorCode::kSyntax, "binding target '" + name + "' is not a name");
    }
    out[key.name] = parse_expression(item.substr(eq + 1));
  }
  return out;
}

Assignment bindings_to_assignment(const Bindings& b) {
  Assignment out;
  for (const auto& [name, ast] : b) {
    const MultiPoly v = ast_to_poly(ast);
    if (!v.is_constant()) {
      throw Error(ErrorCode::kInvalidArgument, "binding " + name + " = " + v.to_string() + " is not a number");
    }
    out[name] = v.is_zero() ? Rational() : v.constant_value();
  }
  return out;
}

Catalog::Catalog(std::vector<CurveDocument> documents, std::vector<NamedProgram> constructions)
    : constructions_(std::move(constructions)) {
  for (auto& d : documents) {
    d.validate();
    const std::string name = d.name;
    if (!documents_.emplace(name, std::move(d)).second) {
      throw Error(ErrorCode::kValidation, "duplicate catalog curve '" + name + "'");
    }
  }
  std::sort(constructions_.begin(), constructions_.end(),
            [](const NamedProgram& a, const NamedProgram& b) { return a.name < b.name; });
}

namespace {

std::string stem(std::string_view file) {
  const std::size_t dot = file.rfind('.');
  return std::string(file.substr(0, dot));
}

}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog instance = [] {
    std::vector<CurveDocument> docs;
    for (std::size_t i = 0; i < detail::kEmbeddedCatalogCount; ++i) {
      docs.push_back(parse_curve_document(detail::kEmbeddedCatalog[i].text));
    }
    std::vector<NamedProgram> programs;
    for (std::size_t i = 0; i < detail::kEmbeddedConstructionsCount; ++i) {
      programs.push_back({stem(detail::kEmbeddedConstructions[i].name), detail::kEmbeddedConstructions[i].text});
    }
    return Catalog(std::move(docs), std::move(programs));
  }();
  return instance;
}

Catalog Catalog::load_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kInvalidArgument, "not a directory: " + dir.string());
  }
  std::vector<CurveDocument> docs;
  std::vector<NamedProgram> programs;
  std::vector<fs::path> files;
  for (const fs::path& d : {dir, dir / "catalog", dir / "constructions"}) {
    if (!fs::is_directory(d)) continue;
    for (const auto& e : fs::directory_iterator(d)) {
      if (e.is_regular_file()) files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    if (f.extension() == ".json") {
      docs.push_back(parse_curve_document(ss.str()));
    } else if (f.extension() == ".dsl") {
      programs.push_back({f.stem().string(), ss.str()});
    }
  }
  return Catalog(std::move(docs), std::move(programs));
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, doc] : documents_) out.push_back(name);
  return out;
}

bool Catalog::contains(std::string_view name) const { return documents_.find(name) != documents_.end(); }

const CurveDocument& Catalog::document(std::string_view name) const {
  const auto it = documents_.find(name);
  if (it == documents_.end()) {
    std::string known;
    for (const auto& [n, d] : documents_) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::kUnknownCurve, "unknown curve '" + std::string(name) + "' (known: " + known + ")");
  }
  return it->second;
}

const NamedProgram& Catalog::construction(std::string_view name) const {
  for (const auto& p : constructions_) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown construction '" + std::string(name) + "'");
}

namespace {

SurdFunc coordinate(const std::string& text, const Bindings& bindings) {
  return ast_to_surd(substitute_variables(parse_expression(text), bindings));
}

RatFunc trig_coordinate(const std::string& text, const std::string& var, const Bindings& bindings) {
  return weierstrass_substitute(substitute_variables(parse_expression(text), bindings), var, "u");
}

}  // namespace

CatalogEntry Catalog::get(std::string_view name, const Bindings& bindings) const {
  const CurveDocument& doc = document(name);
  for (const auto& [key, value] : bindings) {
    if (!doc.find_param(key)) {
      throw Error(ErrorCode::kUnboundParameter,
                  "curve " + doc.name + " has no parameter '" + key + "' to bind");
    }
    std::set<std::string> used;
    value.collect_variables(used);
    for (const auto* spec : {&doc.trig_param, &doc.rational_param}) {
      if (*spec && used.count((*spec)->variable)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "binding " + key + " may not use the curve's parameter variable '" + (*spec)->variable + "'");
      }
    }
    if (used.count("x") || used.count("y") || value.contains_call()) {
      throw Error(ErrorCode::kInvalidArgument, "binding " + key + " must be a polynomial in symbols other than x, y");
    }
  }

  CatalogEntry entry;
  entry.name = doc.name;
  entry.document = doc;
  entry.notes = doc.notes;
  if (doc.implicit) entry.implicit = ast_to_poly(substitute_variables(parse_expression(*doc.implicit), bindings));
  if (doc.rational_param) {
    const auto& p = *doc.rational_param;
    entry.mover = ParametricPoint(coordinate(p.x, bindings), coordinate(p.y, bindings), p.variable);
    entry.mover_source = "rational_param";
  } else if (doc.trig_param) {
    const auto& p = *doc.trig_param;
    entry.mover = ParametricPoint(SurdFunc(trig_coordinate(p.x, p.variable, bindings)),
                                  SurdFunc(trig_coordinate(p.y, p.variable, bindings)), "u");
    entry.mover_source = "trig_param";
  }
  return entry;
}

CatalogEntry catalog_get(std::string_view name, const Bindings& bindings) {
  return Catalog::builtin().get(name, bindings);
}

std::vector<VerifyResult> catalog_verify_all(const Catalog& catalog) {
  std::vector<VerifyResult> out;
  for (const auto& name : catalog.names()) {
    VerifyResult r{name, true, ""};
    try {
      const CurveDocument& doc = catalog.document(name);
      const CatalogEntry entry = catalog.get(name);
      if (entry.implicit.is_zero()) {
        r.detail = "no implicit equation to check";
      } else {
        std::vector<std::string> failed;
        if (doc.rational_param) {
          const auto& p = *doc.rational_param;
          const ParametricPoint pt(coordinate(p.x, {}), coordinate(p.y, {}), p.variable);
          if (!verify_on_curve(entry.implicit, pt)) failed.push_back("rational_param");
        }
        if (doc.trig_param) {
          const auto& p = *doc.trig_param;
          const ParametricPoint pt(SurdFunc(trig_coordinate(p.x, p.variable, {})),
                                   SurdFunc(trig_coordinate(p.y, p.variable, {})), "u");
          if (!verify_on_curve(entry.implicit, pt)) failed.push_back("trig_param");
        }
        if (failed.empty()) {
          r.detail = "degree " + std::to_string(entry.implicit.degree_in({"x", "y"}));
        } else {
          r.passed = false;
          for (const auto& f : failed) r.detail += (r.detail.empty() ? "" : ", ") + f;
          r.detail += " does not satisfy the implicit equation";
        }
      }
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace curvelab
