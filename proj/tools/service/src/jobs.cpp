#include <chrono>
#include <cmath>
#include <future>
#include <memory>
#include <thread>

#include "curvelab/analysis/analysis.hpp"
#include "curvelab/elim/implicitize.hpp"
#include "curvelab/error.hpp"
#include "curvelab/io/construction.hpp"
#include "curvelab/io/curve_document.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/locus/locus.hpp"
#include "curvelab/plot/plot.hpp"
#include "curvelab/service/service.hpp"

namespace curvelab::service {

namespace {

using json = nlohmann::json;

// Extra time a bounded job gets to unwind on its own before the caller gives up.
constexpr std::chrono::milliseconds kGrace{250};

std::string string_field(const json& p, const char* key, const std::string& fallback = "") {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_string()) throw Error(ErrorCode::kValidation, std::string("'") + key + "' must be a string");
  return p[key].get<std::string>();
}

double number_field(const json& p, const char* key, double fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number()) throw Error(ErrorCode::kValidation, std::string("'") + key + "' must be a number");
  const double v = p[key].get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::kValidation, std::string("'") + key + "' must be finite");
  return v;
}

int int_field(const json& p, const char* key, int fallback, int lo, int hi) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number_integer()) throw Error(ErrorCode::kValidation, std::string("'") + key + "' must be an integer");
  const auto v = p[key].get<long long>();
  if (v < lo || v > hi) {
    throw Error(ErrorCode::kValidation,
                std::string("'") + key + "' must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

Bindings bindings_field(const json& p) {
  if (!p.contains("bindings") || p["bindings"].is_null()) return {};
  const json& b = p["bindings"];
  if (b.is_string()) return parse_bindings(b.get<std::string>());
  if (!b.is_object()) throw Error(ErrorCode::kValidation, "'bindings' must be a string or an object");
  Bindings out;
  for (const auto& [k, v] : b.items()) {
    if (v.is_string()) {
      out[k] = parse_expression(v.get<std::string>());
    } else if (v.is_number_integer()) {
      out[k] = parse_expression(v.dump());
    } else {
      throw Error(ErrorCode::kValidation, "binding '" + k + "' must be an integer or an expression string");
    }
  }
  return out;
}

// "x=a", "x = a" or just "a".
std::string line_value(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::string(line);
  std::string lhs(line.substr(0, eq));
  std::erase_if(lhs, [](char c) { return c == ' ' || c == '\t'; });
  if (lhs != "x") throw Error(ErrorCode::kValidation, "the line must be vertical, written x=<expr>");
  return std::string(line.substr(eq + 1));
}

std::string program_text(const json& p, const Catalog& catalog) {
  if (p.contains("dsl")) return string_field(p, "dsl");
  if (p.contains("construction")) return catalog.construction(string_field(p, "construction")).text;
  throw Error(ErrorCode::kValidation, "expected 'dsl' or 'construction'");
}

json provenance_json(const Provenance& pv) {
  json removed = json::array();
  for (const auto& r : pv.removed) removed.push_back({{"factor", canonical_text(r.factor)}, {"reason", r.reason}});
  json out = {{"construction", pv.construction}, {"path", pv.path}, {"removed", removed}, {"notes", pv.notes}};
  if (pv.paths_agree) out["paths_agree"] = *pv.paths_agree;
  return out;
}

json curve_json(const ImplicitCurve& c) {
  return {{"implicit", canonical_text(c.defining)},
          {"degree", {{"total", c.total_degree}, {"xy", c.degree_xy}, {"x", c.degree_x}, {"y", c.degree_y}}},
          {"provenance", provenance_json(c.provenance)}};
}

json point_json(const ParametricPoint& pt) {
  json excluded = json::array();
  for (const auto& e : pt.excluded) excluded.push_back(canonical_text(e));
  return {{"parameter", pt.parameter}, {"x", pt.x.to_string()}, {"y", pt.y.to_string()}, {"excluded", excluded},
          {"notes", pt.notes}};
}

ImplicitizeOptions elim_options(const json& p, const Deadline& deadline, std::string construction) {
  ImplicitizeOptions opts;
  opts.method = parse_elim_method(string_field(p, "method", "resultant"));
  opts.deadline = deadline;
  opts.construction = std::move(construction);
  return opts;
}

json implicitize_job(const JobRequest& job, const Catalog& catalog, const Deadline& deadline) {
  const json& p = job.payload;
  const Bindings bindings = bindings_field(p);
  ParametricPoint point;
  std::string label;
  if (p.contains("curve")) {
    const std::string curve = string_field(p, "curve");
    const std::string map = string_field(p, "map", "hyperbolism");
    if (!p.contains("line")) {
      point = catalog.get(curve, bindings).mover;
      label = curve;
    } else if (map == "hyperbolism") {
      point = hyperbolism(curve, bindings, line_value(string_field(p, "line")), catalog);
      label = "hyperbolism of " + curve;
    } else if (map == "antihyperbolism") {
      point = antihyperbolism(curve, bindings, line_value(string_field(p, "line")), catalog);
      label = "antihyperbolism of " + curve;
    } else {
      throw Error(ErrorCode::kValidation, "'map' must be hyperbolism or antihyperbolism");
    }
  } else {
    point = compile_construction(parse_construction(program_text(p, catalog)), catalog, bindings);
    label = p.contains("construction") ? string_field(p, "construction") : "dsl";
  }
  const ImplicitizeOptions opts = elim_options(p, deadline, label);
  json out = curve_json(implicitize(point, opts));
  out["method"] = elim_method_name(opts.method);
  out["parametrization"] = point_json(point);
  return out;
}

json objects_at(const CompiledConstruction& cc, double u) {
  const std::map<std::string, double, std::less<>> at{{cc.point.parameter, u}};
  json out = json::array();
  for (const auto& [name, obj] : cc.objects) {
    if (const auto* pt = std::get_if<GeomPoint>(&obj)) {
      const double x = pt->x.evaluate_double(at), y = pt->y.evaluate_double(at);
      if (std::isfinite(x) && std::isfinite(y)) out.push_back({{"name", name}, {"kind", "point"}, {"at", {x, y}}});
    } else {
      const auto& ln = std::get<GeomLine>(obj);
      const double a = ln.alpha.evaluate_double(at), b = ln.beta.evaluate_double(at), c = ln.gamma.evaluate_double(at);
      if (std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && (a != 0 || b != 0)) {
        out.push_back({{"name", name}, {"kind", "line"}, {"coefficients", {a, b, c}}});
      }
    }
  }
  return out;
}

json locus_job(const JobRequest& job, const Catalog& catalog, const Deadline& deadline) {
  const json& p = job.payload;
  const Bindings bindings = bindings_field(p);
  const std::string label = p.contains("construction") ? string_field(p, "construction") : "dsl";
  const CompiledConstruction cc = compile(parse_construction(program_text(p, catalog)), catalog, bindings);
  const ImplicitizeOptions opts = elim_options(p, deadline, label);
  const ImplicitCurve curve = implicitize(cc.point, opts);

  json out = curve_json(curve);
  out["method"] = elim_method_name(opts.method);
  out["base_curve"] = cc.base_curve;
  out["parametrization"] = point_json(cc.point);

  json notes = json::array();
  json samples = json::array();
  json excluded = json::array();
  const bool numeric = cc.point.symbols().empty();
  if (numeric) {
    double lo = -10, hi = 10;
    if (p.contains("range")) {
      const json& r = p["range"];
      if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number()) {
        throw Error(ErrorCode::kValidation, "'range' is [lo, hi]");
      }
      lo = r[0].get<double>();
      hi = r[1].get<double>();
    }
    const int n = int_field(p, "samples", 400, 2, 100000);
    const double guard = number_field(p, "guard", 1e-3);
    for (const auto& s : trace_samples(cc.point, lo, hi, n, guard)) {
      samples.push_back({{"u", s.u}, {"x", s.x}, {"y", s.y}, {"segment", s.segment}});
    }
    for (double e : excluded_real_values(cc.point)) excluded.push_back(e);
    if (p.contains("u")) out["construction"] = objects_at(cc, number_field(p, "u", 0));
  } else {
    notes.push_back("samples need numeric bindings for every parameter");
  }
  out["samples"] = samples;
  out["excluded"] = excluded;

  AnalysisOptions aopts;
  aopts.irreducibility.seed = job.seed;
  aopts.point = cc.point;
  deadline.check("analysis");
  out["analysis"] = to_json(analyze(curve.defining, aopts));
  out["notes"] = notes;
  return out;
}

json analyze_job(const JobRequest& job) {
  const json& p = job.payload;
  if (!p.contains("polynomial")) throw Error(ErrorCode::kValidation, "expected 'polynomial'");
  AnalysisOptions opts;
  opts.irreducibility.seed = job.seed;
  opts.irreducibility.trials = int_field(p, "trials", kDefaultIrreducibilityTrials, 1, 64);
  opts.bindings = bindings_to_assignment(bindings_field(p));
  return to_json(analyze(parse_poly(string_field(p, "polynomial")), opts));
}

json catalog_job(const Catalog& catalog) {
  json entries = json::array();
  for (const auto& name : catalog.names()) entries.push_back(to_json(catalog.document(name)));
  json constructions = json::array();
  for (const auto& prog : catalog.constructions()) {
    json c = {{"name", prog.name}, {"text", prog.text}};
    try {
      c["params"] = parse_construction(prog.text).params;
    } catch (const Error& e) {
      c["error"] = e.what();
    }
    constructions.push_back(std::move(c));
  }
  return {{"entries", entries}, {"constructions", constructions}};
}

}  // namespace

const char* operation_name(Operation op) {
  switch (op) {
    case Operation::kImplicitize: return "implicitize";
    case Operation::kLocus: return "locus";
    case Operation::kAnalyze: return "analyze";
    case Operation::kPlot: return "plot";
    case Operation::kCatalog: return "catalog";
  }
  return "?";
}

Operation parse_operation(std::string_view name) {
  for (Operation op : {Operation::kImplicitize, Operation::kLocus, Operation::kAnalyze, Operation::kPlot,
                       Operation::kCatalog}) {
    if (name == operation_name(op)) return op;
  }
  throw Error(ErrorCode::kValidation, "unknown operation '" + std::string(name) + "'");
}

JobRequest job_from_json(Operation op, const json& body) {
  if (!body.is_object()) throw Error(ErrorCode::kValidation, "the request body must be a JSON object");
  JobRequest job;
  job.operation = op;
  job.payload = body;
  job.deadline_ms = int_field(body, "deadline_ms", kDefaultDeadlineMs, kMinDeadlineMs, kMaxDeadlineMs);
  if (body.contains("seed")) {
    const json& seed = body["seed"];
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0)) {
      throw Error(ErrorCode::kValidation, "'seed' must be a non-negative integer");
    }
    job.seed = seed.get<std::uint64_t>();
  }
  job.payload.erase("deadline_ms");
  job.payload.erase("seed");
  return job;
}

json run_job(const JobRequest& job, const Catalog& catalog, const Deadline& deadline) {
  try {
    switch (job.operation) {
      case Operation::kImplicitize: return implicitize_job(job, catalog, deadline);
      case Operation::kLocus: return locus_job(job, catalog, deadline);
      case Operation::kAnalyze: return analyze_job(job);
      case Operation::kPlot:
        if (!job.payload.contains("scene")) throw Error(ErrorCode::kValidation, "expected 'scene'");
        return {{"svg", render_svg(scene_from_json(job.payload["scene"], catalog))}};
      case Operation::kCatalog: return catalog_job(catalog);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("malformed request: ") + e.what());
  }
  throw Error(ErrorCode::kValidation, "unknown operation");
}

json run_job_bounded(const JobRequest& job, const Catalog& catalog) {
  const Deadline deadline = Deadline::after(std::chrono::milliseconds(job.deadline_ms));
  auto promise = std::make_shared<std::promise<json>>();
  std::future<json> result = promise->get_future();
  // Detached so that a job that ignores cancellation cannot hold the reply;
  // it owns copies of everything except the catalog.
  std::thread([promise, job, &catalog, deadline] {
    try {
      promise->set_value(run_job(job, catalog, deadline));
    } catch (...) {
      promise->set_exception(std::current_exception());
    }
  }).detach();
  if (result.wait_for(std::chrono::milliseconds(job.deadline_ms) + kGrace) != std::future_status::ready) {
    deadline.cancel();
    throw Error(ErrorCode::kDeadlineExceeded,
                std::string(operation_name(job.operation)) + " exceeded its deadline of " +
                    std::to_string(job.deadline_ms) + " ms");
  }
  return result.get();
}

ErrorReply error_reply(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const Error& e) {
    json body = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (e.location()) {
      body["location"] = {{"offset", e.location()->offset}, {"line", e.location()->line},
                          {"column", e.location()->column}};
    }
    const bool timed_out = e.code() == ErrorCode::kDeadlineExceeded || e.code() == ErrorCode::kEliminationFailed;
    return {timed_out ? 408 : 400, std::move(body)};
  } catch (...) {
    return {500, {{"code", "internal"}, {"message", "internal error"}}};
  }
}

}  // namespace curvelab::service
