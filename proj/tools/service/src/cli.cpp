#include <CLI11.hpp>
#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/service/cli.hpp"
#include "curvelab/service/http.hpp"
#include "curvelab/service/service.hpp"

namespace curvelab::service {

namespace {

using json = nlohmann::json;

// Problems with the command line itself (exit 1), as opposed to errors
// raised while computing (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::is_regular_file(path, ec);
}

std::string join(const json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

std::string interval_text(const json& r) {
  if (r.contains("value")) return r["value"].get<std::string>();
  return "~" + r["approx"].dump();
}

void print_analysis(const json& r, std::ostream& out) {
  out << "polynomial: " << r["input"].get<std::string>() << "\n";
  if (r["bound"] != r["input"]) out << "bound: " << r["bound"].get<std::string>() << "\n";
  out << "irreducibility: " << r["irreducibility"]["summary"].get<std::string>() << "\n";
  if (r["irreducibility"].contains("witness_point")) {
    out << "  witness: " << r["irreducibility"]["witness_point"].dump() << "\n";
  }
  for (const auto& f : r["factors"]) {
    out << "factor " << f["factor"].get<std::string>();
    if (f["multiplicity"].get<int>() > 1) out << " (multiplicity " << f["multiplicity"].get<int>() << ")";
    if (f["extraneous"].get<bool>()) out << ": extraneous candidate";
    if (f.contains("reason")) out << " (" << f["reason"].get<std::string>() << ")";
    if (f.contains("conic")) out << ": conic " << f["conic"]["kind"].get<std::string>();
    if (f.contains("conic") && f["conic"].contains("center")) {
      out << " centred at (" << join(f["conic"]["center"], ", ") << ")";
    }
    out << "\n";
  }
  const json& s = r["symmetry"];
  out << "symmetry: x-axis " << (s["x_axis"].get<bool>() ? "yes" : "no") << ", y-axis "
      << (s["y_axis"].get<bool>() ? "yes" : "no") << ", origin " << (s["origin"].get<bool>() ? "yes" : "no") << "\n";
  if (!r["conic"].is_null()) {
    const json& c = r["conic"];
    out << "conic: " << c["kind"].get<std::string>();
    if (c.contains("center")) out << ", center (" << join(c["center"], ", ") << ")";
    out << "\n";
  }
  if (r.contains("asymptotes") && !r["asymptotes"].is_null()) {
    std::string list;
    for (const auto& v : r["asymptotes"]["rational_roots"]) {
      list += (list.empty() ? "x = " : ", x = ") + v["x"].get<std::string>();
    }
    out << "vertical asymptotes: " << (list.empty() ? "no rational ones" : list) << "\n";
  }
  if (!r["singular_points"].is_null()) {
    const json& sp = r["singular_points"];
    if (sp["points"].empty()) out << "singular points: none\n";
    for (const auto& p : sp["points"]) {
      out << "singular point (" << interval_text(p["x"]) << ", " << interval_text(p["y"])
          << "): " << p["kind"].get<std::string>();
      if (p.contains("note")) out << " (" << p["note"].get<std::string>() << ")";
      out << "\n";
    }
  }
  for (const auto& n : r["notes"]) out << "note: " << n.get<std::string>() << "\n";
}

struct Common {
  std::string bindings;
  int deadline_ms = kDefaultDeadlineMs;
  std::uint64_t seed = kDefaultAnalysisSeed;
  bool as_json = false;
};

json run(Operation op, json payload, const Common& common, const Catalog& catalog) {
  if (!common.bindings.empty()) payload["bindings"] = common.bindings;
  payload["deadline_ms"] = common.deadline_ms;
  payload["seed"] = common.seed;
  const JobRequest job = job_from_json(op, payload);
  return run_job(job, catalog, Deadline::after(std::chrono::milliseconds(job.deadline_ms)));
}

void add_common(CLI::App* cmd, Common& c, bool with_bind = true) {
  if (with_bind) cmd->add_option("--bind,-b", c.bindings, "Parameter bindings, e.g. a=2,b=1");
  cmd->add_option("--deadline-ms", c.deadline_ms, "Computation budget in milliseconds")
      ->check(CLI::Range(kMinDeadlineMs, kMaxDeadlineMs));
  cmd->add_option("--seed", c.seed, "Seed for probabilistic irreducibility checks");
  cmd->add_flag("--json", c.as_json, "Print the full JSON result");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact plane-curve laboratory: hyperbolisms, implicitization and curve analysis", "curvelab"};
  app.require_subcommand(1);
  std::string catalog_dir;
  app.add_option("--catalog", catalog_dir, "Load curves and constructions from this directory")
      ->check(CLI::ExistingDirectory);

  Common common;
  const std::vector<std::string> methods{"resultant", "groebner", "both"};

  auto* implicitize = app.add_subcommand("implicitize", "Implicit equation of a curve, its hyperbolism or a DSL program");
  std::string target, line, method = "resultant";
  std::vector<std::string> keep_symbolic;
  bool anti = false;
  implicitize->add_option("target", target, "Catalog curve, construction name or DSL file")->required();
  implicitize->add_option("--line", line, "Vertical line of the hyperbolism, x=<expr>");
  implicitize->add_option("--method", method, "Elimination path")->check(CLI::IsMember(methods));
  implicitize->add_option("--param", keep_symbolic, "Curve parameter that must stay symbolic");
  implicitize->add_flag("--anti", anti, "Antihyperbolism instead of hyperbolism");
  add_common(implicitize, common);

  auto* locus = app.add_subcommand("locus", "Implicit equation of the locus traced by a DSL program");
  std::string dsl_file;
  locus->add_option("program", dsl_file, "DSL file or construction name")->required();
  locus->add_option("--method", method, "Elimination path")->check(CLI::IsMember(methods));
  add_common(locus, common);

  auto* analyze = app.add_subcommand("analyze", "Factor and classify an implicit polynomial");
  std::string poly;
  int trials = kDefaultIrreducibilityTrials;
  analyze->add_option("polynomial", poly, "Polynomial text or a file holding it")->required();
  analyze->add_option("--trials", trials, "Specializations for the irreducibility check")->check(CLI::Range(1, 64));
  add_common(analyze, common);

  auto* plot = app.add_subcommand("plot", "Render a scene JSON file to SVG");
  std::string scene_file, output;
  plot->add_option("scene", scene_file, "Scene JSON file")->required()->check(CLI::ExistingFile);
  plot->add_option("-o,--output", output, "SVG file (default: stdout)");
  add_common(plot, common, false);

  auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the curve catalog");
  catalog_cmd->require_subcommand(1);
  auto* list = catalog_cmd->add_subcommand("list", "List curves and constructions");
  auto* show = catalog_cmd->add_subcommand("show", "Print a curve document or a construction program");
  std::string show_name;
  show->add_option("name", show_name)->required();
  auto* verify = catalog_cmd->add_subcommand("verify", "Check every parametrization against its implicit equation");

  auto* serve = app.add_subcommand("serve", "Run the HTTP JSON service");
  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port,-p", port, "Listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--static", static_dir, "Directory served at /")->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    std::ostringstream help;
    app.exit(e, help, help);
    err << "curvelab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::optional<Catalog> loaded;
    if (!catalog_dir.empty()) loaded = Catalog::load_directory(catalog_dir);
    const Catalog& catalog = loaded ? *loaded : Catalog::builtin();

    if (*implicitize) {
      json payload = {{"method", method}};
      if (is_file(target)) {
        if (!line.empty()) throw UsageError("--line applies to catalog curves, not to DSL programs");
        payload["dsl"] = read_file(target);
      } else if (catalog.contains(target)) {
        payload["curve"] = target;
        if (!line.empty()) payload["line"] = line;
        if (anti) payload["map"] = "antihyperbolism";
        const CurveDocument& doc = catalog.document(target);
        const Bindings bound = common.bindings.empty() ? Bindings{} : parse_bindings(common.bindings);
        for (const auto& p : keep_symbolic) {
          if (doc.find_param(p) == nullptr) throw UsageError("curve '" + target + "' has no parameter '" + p + "'");
          if (bound.contains(p)) throw UsageError("parameter '" + p + "' is both bound and kept symbolic");
        }
      } else {
        bool known = false;
        for (const auto& c : catalog.constructions()) known = known || c.name == target;
        if (!known) throw UsageError("'" + target + "' is neither a file, a catalog curve nor a construction");
        if (!line.empty()) throw UsageError("--line applies to catalog curves, not to constructions");
        payload["construction"] = target;
      }
      const json r = run(Operation::kImplicitize, payload, common, catalog);
      out << (common.as_json ? r.dump(2) : r["implicit"].get<std::string>()) << "\n";
    } else if (*locus) {
      json payload = {{"method", method}};
      if (is_file(dsl_file)) {
        payload["dsl"] = read_file(dsl_file);
      } else {
        payload["construction"] = dsl_file;
      }
      const json r = run(Operation::kLocus, payload, common, catalog);
      out << (common.as_json ? r.dump(2) : r["implicit"].get<std::string>()) << "\n";
    } else if (*analyze) {
      const std::string text = is_file(poly) ? read_file(poly) : poly;
      const json r = run(Operation::kAnalyze, {{"polynomial", text}, {"trials", trials}}, common, catalog);
      if (common.as_json) {
        out << r.dump(2) << "\n";
      } else {
        print_analysis(r, out);
      }
    } else if (*plot) {
      json scene;
      try {
        scene = json::parse(read_file(scene_file));
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::kValidation, std::string("scene is not JSON: ") + e.what());
      }
      const json r = run(Operation::kPlot, {{"scene", scene}}, common, catalog);
      if (output.empty()) {
        out << r["svg"].get<std::string>();
      } else {
        std::ofstream f(output, std::ios::binary);
        f << r["svg"].get<std::string>();
        if (!f) throw UsageError("cannot write '" + output + "'");
      }
    } else if (*list) {
      for (const auto& name : catalog.names()) {
        const CurveDocument& doc = catalog.document(name);
        std::string params;
        for (const auto& p : doc.params) params += (params.empty() ? "" : ", ") + p.name;
        out << name << " (" << params << "): " << doc.description << "\n";
      }
      for (const auto& c : catalog.constructions()) out << "construction " << c.name << "\n";
    } else if (*show) {
      if (catalog.contains(show_name)) {
        out << to_json(catalog.document(show_name)).dump(2) << "\n";
      } else {
        out << catalog.construction(show_name).text;
      }
    } else if (*verify) {
      bool all = true;
      for (const auto& v : catalog_verify_all(catalog)) {
        out << (v.passed ? "PASS " : "FAIL ") << v.name;
        if (!v.detail.empty()) out << ": " << v.detail;
        out << "\n";
        all = all && v.passed;
      }
      return all ? kExitOk : kExitComputation;
    } else if (*serve) {
      httplib::Server server;
      register_routes(server, catalog);
      if (!static_dir.empty()) server.set_mount_point("/", static_dir);
      err << "curvelab: listening on http://" << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        err << "curvelab: cannot listen on " << host << ":" << port << "\n";
        return kExitComputation;
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "curvelab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "curvelab: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "curvelab: internal error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace curvelab::service
