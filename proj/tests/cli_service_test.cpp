#include <gtest/gtest.h>
#include <httplib.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "curvelab/service/cli.hpp"
#include "curvelab/service/http.hpp"
#include "curvelab/service/service.hpp"

using namespace curvelab;
using namespace curvelab::service;
using json = nlohmann::json;

namespace {

std::string fixture(const std::string& rel) { return std::string(CURVELAB_FIXTURE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "curvelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Http : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    server_ = new httplib::Server;
    register_routes(*server_, Catalog::builtin());
    port_ = server_->bind_to_any_port("127.0.0.1");
    thread_ = new std::thread([] { server_->listen_after_bind(); });
    server_->wait_until_ready();
  }
  static void TearDownTestSuite() {
    server_->stop();
    thread_->join();
    delete thread_;
    delete server_;
  }

  static httplib::Client client() {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(120, 0);
    return c;
  }
  static httplib::Result post(const std::string& path, const json& body) {
    return client().Post(path, body.dump(), "application/json");
  }

  static httplib::Server* server_;
  static std::thread* thread_;
  static int port_;
};

httplib::Server* Http::server_ = nullptr;
std::thread* Http::thread_ = nullptr;
int Http::port_ = 0;

}  // namespace

TEST_F(Http, ImplicitizeEllipseHyperbolism) {
  const auto res = post("/api/v1/implicitize", {{"curve", "ellipse"}, {"line", "x=a"}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const json j = json::parse(res->body);
  EXPECT_EQ(j["implicit"], "b^2*x^2 + x^2*y^2 - a^2*b^2");
  EXPECT_EQ(j["provenance"]["path"], "resultant");
  EXPECT_EQ(j["degree"]["total"], 4);
}

TEST_F(Http, CatalogListsEntriesUnderBothPrefixes) {
  for (const char* path : {"/api/v1/catalog", "/api/catalog"}) {
    const auto res = client().Get(path);
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 200);
    const json j = json::parse(res->body);
    EXPECT_GE(j["entries"].size(), 6u);
    EXPECT_GE(j["constructions"].size(), 6u);
    for (const auto& e : j["entries"]) {
      for (const auto& p : e["params"]) {
        EXPECT_TRUE(p.contains("min") && p.contains("max")) << e["name"];
      }
    }
    EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  }
}

TEST_F(Http, GeronoLocusSamplesLieOnTheBoundCurve) {
  const auto res = post("/api/v1/locus", {{"dsl", slurp(fixture("gerono.dsl"))}, {"bindings", "a=2, b=1"}, {"u", 0.5}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const json j = json::parse(res->body);
  EXPECT_EQ(j["implicit"], "x^4 - 4*x^2 + y^2");
  ASSERT_GT(j["samples"].size(), 100u);
  for (const auto& s : j["samples"]) {
    const double x = s["x"], y = s["y"];
    EXPECT_LT(std::abs(x * x * x * x - 4 * x * x + y * y), 1e-8) << s.dump();
  }
  EXPECT_EQ(j["base_curve"], "circle");
  EXPECT_EQ(j["analysis"]["irreducibility"]["verdict"], "irreducible");
  // Construction overlay at u = 1/2: M0 on the circle of radius 2.
  bool saw_mover = false;
  for (const auto& o : j["construction"]) {
    if (o["name"] == "M0") {
      saw_mover = true;
      EXPECT_NEAR(o["at"][0].get<double>(), 2 * (1 - 0.25) / 1.25, 1e-12);
      EXPECT_NEAR(o["at"][1].get<double>(), 2 * 2 * 0.5 / 1.25, 1e-12);
    }
  }
  EXPECT_TRUE(saw_mover);
}

TEST_F(Http, SymbolicLocusHasNoSamples) {
  const auto res = post("/api/locus", {{"construction", "gerono"}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const json j = json::parse(res->body);
  EXPECT_EQ(j["implicit"], "x^4 - a^2*x^2 + b^2*y^2");
  EXPECT_TRUE(j["samples"].empty());
  EXPECT_FALSE(j["notes"].empty());
}

TEST_F(Http, CliAndHttpGiveIdenticalText) {
  const CliResult c1 = cli({"implicitize", "circle", "--param", "r", "--line", "x=r"});
  ASSERT_EQ(c1.code, 0) << c1.err;
  EXPECT_EQ(c1.out, "r^2*x^2 + x^2*y^2 - r^4\n");
  const auto h1 = post("/api/v1/implicitize", {{"curve", "circle"}, {"line", "x=r"}});
  ASSERT_TRUE(h1);
  EXPECT_EQ(json::parse(h1->body)["implicit"].get<std::string>() + "\n", c1.out);

  const CliResult c2 = cli({"locus", fixture("gerono.dsl"), "--bind", "b=3"});
  ASSERT_EQ(c2.code, 0) << c2.err;
  const auto h2 = post("/api/v1/locus", {{"dsl", slurp(fixture("gerono.dsl"))}, {"bindings", "b=3"}});
  ASSERT_TRUE(h2);
  EXPECT_EQ(json::parse(h2->body)["implicit"].get<std::string>() + "\n", c2.out);

  const CliResult c3 = cli({"analyze", "x*(9*x^2 - 54*x + 4*y^2)", "--json", "--seed", "7"});
  ASSERT_EQ(c3.code, 0) << c3.err;
  const auto h3 = post("/api/v1/analyze", {{"polynomial", "x*(9*x^2 - 54*x + 4*y^2)"}, {"seed", 7}});
  ASSERT_TRUE(h3);
  EXPECT_EQ(json::parse(h3->body), json::parse(c3.out));
}

TEST_F(Http, SeededVerdictsAreReproducible) {
  const json body = {{"polynomial", "x^2*y^2 + a^2*x^2 - a^2*b^2"}, {"seed", 12345}, {"trials", 3}};
  const auto a = post("/api/v1/analyze", body);
  const auto b = post("/api/v1/analyze", body);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->body, b->body);
  const json j = json::parse(a->body);
  EXPECT_EQ(j["irreducibility"]["verdict"], "irreducible");
  EXPECT_FALSE(j["irreducibility"]["exact"].get<bool>());
}

TEST_F(Http, RequestOrderDoesNotMatter) {
  const json first = {{"curve", "piriform_upper"}, {"line", "x=a"}, {"bindings", "a=6, b=4"}};
  const json second = {{"polynomial", "x^3 - y^2"}};
  const std::string a1 = post("/api/v1/implicitize", first)->body;
  const std::string b1 = post("/api/v1/analyze", second)->body;
  const std::string b2 = post("/api/v1/analyze", second)->body;
  const std::string a2 = post("/api/v1/implicitize", first)->body;
  EXPECT_EQ(a1, a2);
  EXPECT_EQ(b1, b2);
}

TEST_F(Http, PlotReturnsSvg) {
  const json scene = {{"viewport", {{"xmin", -3}, {"xmax", 3}, {"ymin", -3}, {"ymax", 3}}},
                      {"layers", json::array({{{"kind", "implicit"}, {"polynomial", "x^4 - 4*x^2 + y^2"}},
                                              {{"kind", "parametric"}, {"curve", "circle"}, {"bindings", "r=2"}}})}};
  const auto res = post("/api/v1/plot", {{"scene", scene}});
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200) << res->body;
  const std::string svg = json::parse(res->body)["svg"];
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
}

TEST_F(Http, ErrorsCarryCodesAndStatuses) {
  auto res = client().Post("/api/v1/analyze", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["code"], "validation-error");

  res = post("/api/v1/analyze", {{"polynomial", "x^2 + * y"}});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  json j = json::parse(res->body);
  EXPECT_EQ(j["code"], "syntax-error");
  ASSERT_TRUE(j.contains("location"));
  EXPECT_EQ(j["location"]["offset"], 6);

  res = post("/api/v1/implicitize", {{"curve", "nosuchcurve"}, {"line", "x=1"}});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  EXPECT_EQ(json::parse(res->body)["code"], "unknown-curve");

  for (int bad : {99, 600001}) {
    res = post("/api/v1/analyze", {{"polynomial", "x - y"}, {"deadline_ms", bad}});
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
  }

  res = client().Get("/api/v1/nothing");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["code"], "not-found");

  res = client().Options("/api/v1/locus");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
}

TEST_F(Http, DeadlineIsHonoured) {
  // A three-parameter locus on the nephroid; its Gröbner basis takes far
  // longer than the budget.
  const std::string dsl = R"(param a
param b
param c
point O = (0, 0)
point M0 = on_curve(nephroid(a=a))
line D = vertical(x=b)
point P = intersect(D, line_through(O, M0))
point Q = intersect(horizontal(y=c), line_through(P, (1, 2)))
point M = intersect(line_through(O, Q), vertical_through(M0))
locus M
)";
  const auto start = std::chrono::steady_clock::now();
  const auto res = post("/api/v1/implicitize", {{"dsl", dsl}, {"method", "groebner"}, {"deadline_ms", 300}});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 408) << res->body;
  EXPECT_EQ(json::parse(res->body)["code"], "deadline-exceeded");
  EXPECT_LT(elapsed, std::chrono::milliseconds(3000));
}

TEST(Jobs, RequestValidation) {
  EXPECT_EQ(parse_operation("plot"), Operation::kPlot);
  EXPECT_THROW(parse_operation("draw"), Error);
  EXPECT_THROW(job_from_json(Operation::kAnalyze, json::array()), Error);
  EXPECT_THROW(job_from_json(Operation::kAnalyze, {{"seed", -1}}), Error);
  const JobRequest job = job_from_json(Operation::kAnalyze, {{"polynomial", "x"}, {"deadline_ms", 100}, {"seed", 3}});
  EXPECT_EQ(job.deadline_ms, 100);
  EXPECT_EQ(job.seed, 3u);
  EXPECT_FALSE(job.payload.contains("seed"));
  EXPECT_EQ(error_reply(std::make_exception_ptr(std::logic_error("secret"))).body["message"], "internal error");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"implicitize"}).code, kExitUsage);
  EXPECT_EQ(cli({"implicitize", "circle", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(cli({"implicitize", "no-such-thing"}).code, kExitUsage);
  EXPECT_EQ(cli({"implicitize", "circle", "--param", "q", "--line", "x=r"}).code, kExitUsage);
  const CliResult bad = cli({"analyze", "x^2 +"});
  EXPECT_EQ(bad.code, kExitComputation);
  EXPECT_NE(bad.err.find("syntax-error"), std::string::npos);
  EXPECT_EQ(bad.err.find('\n'), bad.err.size() - 1);  // one line
  EXPECT_EQ(cli({"implicitize", "circle", "--line", "x=0"}).code, kExitComputation);
}

TEST(Cli, PaperCommands) {
  CliResult r = cli({"locus", fixture("gerono.dsl")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x^4 - a^2*x^2 + b^2*y^2\n");

  r = cli({"analyze", "x*(9*x^2 - 54*x + 4*y^2)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("factor x: extraneous candidate"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("factor 9*x^2 + 4*y^2 - 54*x: conic ellipse centred at (3, 0)"), std::string::npos) << r.out;

  r = cli({"implicitize", "kulp", "--bind", "r=4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x^2*y^2 + 16*x^2 - 256\n");

  r = cli({"implicitize", "circle_origin", "--line", "x=a", "--anti", "--method", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST(Cli, CatalogAndPlot) {
  CliResult r = cli({"catalog", "list"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ellipse (a, b)"), std::string::npos);
  r = cli({"catalog", "verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = cli({"catalog", "show", "circle"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["name"], "circle");
  r = cli({"catalog", "show", "kulp"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hyperbolism(circle(r=r), x=r)"), std::string::npos);

  const std::string scene = ::testing::TempDir() + "scene.json";
  const std::string svg = ::testing::TempDir() + "scene.svg";
  std::ofstream(scene) << R"({"viewport": {"xmin": -2, "xmax": 2, "ymin": -2, "ymax": 2},
                             "layers": [{"kind": "implicit", "polynomial": "x^2 + y^2 - 1"}]})";
  r = cli({"plot", scene, "-o", svg});
  ASSERT_EQ(r.code, 0) << r.err;
  const CliResult again = cli({"plot", scene});
  EXPECT_EQ(slurp(svg), again.out);
}
