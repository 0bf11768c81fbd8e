#pragma once

#include <string>

#include "curvelab/catalog/catalog.hpp"

namespace httplib {
class Server;
}

namespace curvelab::service {

/// Registers GET /api/v1/catalog and POST /api/v1/{implicitize, locus,
/// analyze, plot}, the same routes under /api, and CORS headers. The catalog
/// must outlive the server.
void register_routes(httplib::Server& server, const Catalog& catalog);

}  // namespace curvelab::service
