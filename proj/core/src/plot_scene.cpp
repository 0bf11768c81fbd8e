#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/locus/locus.hpp"
#include "curvelab/plot/plot.hpp"

namespace curvelab {

namespace {

using json = nlohmann::json;

json point(const Point2& p) { return json::array({p[0], p[1]}); }

Point2 read_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::kValidation, "a point is [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string text_field(const json& j, const char* key, const std::string& fallback = "") {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) throw Error(ErrorCode::kValidation, std::string("'") + key + "' must be a string");
  return j[key].get<std::string>();
}

Bindings bindings_field(const json& j) {
  if (!j.contains("bindings")) return {};
  const json& b = j["bindings"];
  if (b.is_string()) return parse_bindings(b.get<std::string>());
  if (!b.is_object()) throw Error(ErrorCode::kValidation, "'bindings' must be a string or an object");
  Bindings out;
  for (const auto& [k, v] : b.items()) {
    out[k] = parse_expression(v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

PlotLayer read_layer(const json& j, const Catalog& catalog) {
  if (!j.is_object()) throw Error(ErrorCode::kValidation, "a layer is an object");
  const std::string kind = text_field(j, "kind");
  PlotLayer layer;
  layer.name = text_field(j, "name");

  if (j.contains("polynomial")) {
    const MultiPoly F = parse_poly(text_field(j, "polynomial"));
    const int grid = j.value("grid", 64);
    const Viewport vp = j.contains("viewport") ? Viewport{j["viewport"].value("xmin", 0.0), j["viewport"].value("xmax", 0.0),
                                                          j["viewport"].value("ymin", 0.0), j["viewport"].value("ymax", 0.0)}
                                               : Viewport{};
    layer.style = "implicit";
    layer.segments = contour_implicit(F, bindings_to_assignment(bindings_field(j)), vp, grid);
    if (layer.name.empty()) layer.name = canonical_text(F);
  } else if (j.contains("curve") || j.contains("construction") || j.contains("dsl")) {
    const Bindings b = bindings_field(j);
    ParametricPoint pt;
    std::string style = "locus";
    if (j.contains("curve")) {
      const std::string curve = text_field(j, "curve");
      pt = catalog.get(curve, b).mover;
      style = "base";
      if (layer.name.empty()) layer.name = curve;
    } else {
      const std::string program =
          j.contains("dsl") ? text_field(j, "dsl") : catalog.construction(text_field(j, "construction")).text;
      pt = compile_construction(parse_construction(program), catalog, b);
      if (layer.name.empty()) layer.name = text_field(j, "construction", "locus");
    }
    double lo = -10, hi = 10;
    if (j.contains("range")) {
      const Point2 r = read_point(j["range"]);
      lo = r[0];
      hi = r[1];
    }
    PlotLayer traced = parametric_layer(pt, lo, hi, j.value("samples", 800), layer.name, style, j.value("guard", 1e-3));
    layer = std::move(traced);
  } else if (!kind.empty() && kind != "parametric" && kind != "implicit" && kind != "reference") {
    throw Error(ErrorCode::kValidation, "unknown layer kind '" + kind + "'");
  } else if (kind == "implicit") {
    layer.style = "implicit";
  } else if (kind == "reference") {
    layer.style = "reference";
  }
  layer.style = text_field(j, "style", layer.style);

  if (j.contains("polylines")) {
    for (const auto& pl : j["polylines"]) {
      std::vector<Point2> line;
      for (const auto& p : pl) line.push_back(read_point(p));
      layer.polylines.push_back(std::move(line));
    }
  }
  if (j.contains("segments")) {
    for (const auto& s : j["segments"]) {
      if (!s.is_array() || s.size() != 4) throw Error(ErrorCode::kValidation, "a segment is [x1, y1, x2, y2]");
      layer.segments.push_back({{s[0].get<double>(), s[1].get<double>()}, {s[2].get<double>(), s[3].get<double>()}});
    }
  }
  if (j.contains("lines")) {
    for (const auto& l : j["lines"]) {
      if (!l.is_array() || l.size() != 3) throw Error(ErrorCode::kValidation, "a line is [a, b, c] for ax + by + c = 0");
      layer.lines.push_back({l[0].get<double>(), l[1].get<double>(), l[2].get<double>()});
    }
  }
  if (j.contains("points")) {
    for (const auto& p : j["points"]) layer.points.push_back(read_point(p));
  }
  return layer;
}

}  // namespace

nlohmann::json to_json(const PlotScene& scene) {
  json layers = json::array();
  for (const auto& l : scene.layers) {
    json polylines = json::array(), segments = json::array(), lines = json::array(), points = json::array();
    for (const auto& pl : l.polylines) {
      json line = json::array();
      for (const auto& p : pl) line.push_back(point(p));
      polylines.push_back(std::move(line));
    }
    for (const auto& s : l.segments) segments.push_back({s.a[0], s.a[1], s.b[0], s.b[1]});
    for (const auto& r : l.lines) lines.push_back({r.a, r.b, r.c});
    for (const auto& p : l.points) points.push_back(point(p));
    layers.push_back({{"name", l.name},
                      {"style", l.style},
                      {"polylines", polylines},
                      {"segments", segments},
                      {"lines", lines},
                      {"points", points}});
  }
  return {{"title", scene.title},
          {"viewport",
           {{"xmin", scene.viewport.xmin}, {"xmax", scene.viewport.xmax}, {"ymin", scene.viewport.ymin},
            {"ymax", scene.viewport.ymax}}},
          {"orthonormal", scene.orthonormal},
          {"width", scene.width},
          {"height", scene.height},
          {"layers", layers}};
}

PlotScene scene_from_json(const nlohmann::json& j, const Catalog& catalog) {
  try {
    if (!j.is_object() || !j.contains("viewport")) throw Error(ErrorCode::kValidation, "a scene needs a viewport");
    PlotScene scene;
    const json& v = j["viewport"];
    scene.viewport = {v.at("xmin").get<double>(), v.at("xmax").get<double>(), v.at("ymin").get<double>(),
                      v.at("ymax").get<double>()};
    scene.viewport.validate();
    scene.title = text_field(j, "title");
    scene.orthonormal = j.value("orthonormal", false);
    scene.width = j.value("width", 640);
    scene.height = j.value("height", 480);
    if (j.contains("layers")) {
      for (const auto& l : j["layers"]) {
        json layer = l;
        if (layer.is_object() && layer.contains("polynomial") && !layer.contains("viewport")) layer["viewport"] = v;
        scene.layers.push_back(read_layer(layer, catalog));
      }
    }
    scene.validate();
    return scene;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("malformed scene: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw Error(ErrorCode::kValidation, e.what());
    throw;
  }
}

}  // namespace curvelab
