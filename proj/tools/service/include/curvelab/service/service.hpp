#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "curvelab/analysis/factor.hpp"
#include "curvelab/catalog/catalog.hpp"
#include "curvelab/elim/deadline.hpp"

namespace curvelab::service {

enum class Operation { kImplicitize, kLocus, kAnalyze, kPlot, kCatalog };

const char* operation_name(Operation op);
/// Throws kValidation for an unknown name.
Operation parse_operation(std::string_view name);

inline constexpr int kMinDeadlineMs = 100;
inline constexpr int kMaxDeadlineMs = 600000;
inline constexpr int kDefaultDeadlineMs = 60000;

struct JobRequest {
  Operation operation = Operation::kCatalog;
  /// Operation fields (see run_job).
  nlohmann::json payload = nlohmann::json::object();
  int deadline_ms = kDefaultDeadlineMs;
  std::uint64_t seed = kDefaultAnalysisSeed;
};

/// Splits deadline_ms and seed off a request body. Throws kValidation when
/// the body is not an object or the deadline is outside
/// [kMinDeadlineMs, kMaxDeadlineMs].
JobRequest job_from_json(Operation op, const nlohmann::json& body);

/// Runs the job on the calling thread. Payloads:
///   implicitize {curve, line?, map?, bindings?, method?} or {dsl | construction, bindings?, method?}
///     -> {implicit, method, degree, provenance, parametrization}
///   locus       {dsl | construction, bindings?, method?, range?, samples?, guard?, u?}
///     -> {implicit, samples, excluded, construction?, analysis, base_curve, notes}
///   analyze     {polynomial, bindings?, trials?} -> analysis report
///   plot        {scene} -> {svg}
///   catalog     {} -> {entries, constructions}
/// Throws curvelab::Error.
nlohmann::json run_job(const JobRequest& job, const Catalog& catalog, const Deadline& deadline);

/// run_job on a worker thread. Returns within the job deadline (plus a short
/// grace period) or throws kDeadlineExceeded after cancelling the worker's
/// Deadline.
nlohmann::json run_job_bounded(const JobRequest& job, const Catalog& catalog);

struct ErrorReply {
  int status = 500;
  /// {code, message, location?}
  nlohmann::json body;
};

/// 408 for deadlines (elimination failures included, since both paths
/// ran out of time), 400 for every other library error, 500 (with a
/// generic message) for anything else.
ErrorReply error_reply(const std::exception_ptr& error);

}  // namespace curvelab::service
