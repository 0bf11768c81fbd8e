#include <httplib.h>

#include "curvelab/error.hpp"
#include "curvelab/service/http.hpp"
#include "curvelab/service/service.hpp"

namespace curvelab::service {

namespace {

using json = nlohmann::json;

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void handle(const Catalog& catalog, Operation op, const httplib::Request& req, httplib::Response& res) {
  try {
    json body = json::object();
    if (!req.body.empty()) {
      try {
        body = json::parse(req.body);
      } catch (const json::parse_error& e) {
        throw Error(ErrorCode::kValidation, std::string("request body is not JSON: ") + e.what(),
                    SourceLocation{e.byte > 0 ? e.byte - 1 : 0, 0, 0});
      }
    }
    reply(res, 200, run_job_bounded(job_from_json(op, body), catalog));
  } catch (...) {
    const ErrorReply err = error_reply(std::current_exception());
    reply(res, err.status, err.body);
  }
}

}  // namespace

void register_routes(httplib::Server& server, const Catalog& catalog) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  for (const std::string prefix : {"/api/v1", "/api"}) {
    server.Get(prefix + "/catalog", [&catalog](const httplib::Request& req, httplib::Response& res) {
      handle(catalog, Operation::kCatalog, req, res);
    });
    for (Operation op : {Operation::kImplicitize, Operation::kLocus, Operation::kAnalyze, Operation::kPlot}) {
      server.Post(prefix + "/" + operation_name(op), [&catalog, op](const httplib::Request& req, httplib::Response& res) {
        handle(catalog, op, req, res);
      });
    }
  }

  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      const std::string code = res.status == 404 ? "not-found" : "http-" + std::to_string(res.status);
      res.set_content(json{{"code", code}, {"message", httplib::status_message(res.status)}}.dump(), kJson);
    }
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    reply(res, 500, {{"code", "internal"}, {"message", "internal error"}});
  });
}

}  // namespace curvelab::service
