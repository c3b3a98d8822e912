#pragma once

#include <optional>
#include <string>

#include "polarfront/slice_service.hpp"

namespace httplib {
class Server;
}

namespace polarfront::http {

/// Routes /meta, /marginal, /slice, /domination and POST /decide onto the
/// service. Every response carries permissive CORS headers; `static_dir`,
/// when set, is mounted at "/".
void bind_routes(httplib::Server& server, SliceService& service,
                 const std::optional<std::string>& static_dir = std::nullopt);

}  // namespace polarfront::http
