#include "http_server.hpp"

#include <httplib.h>

#include "polarfront/error.hpp"

namespace polarfront::http {

namespace {

QueryParams query_of(const httplib::Request& req) {
  QueryParams out;
  for (const auto& [key, value] : req.params) out[key] = value;
  return out;
}

void reply(httplib::Response& res, const ServiceResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

void bind_routes(httplib::Server& server, SliceService& service,
                 const std::optional<std::string>& static_dir) {
  server.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/meta", [&service](const httplib::Request&, httplib::Response& res) {
    reply(res, service.meta());
  });
  server.Get("/marginal", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.marginal(query_of(req)));
  });
  server.Get("/slice", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.slice(query_of(req)));
  });
  server.Get("/domination", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.domination(query_of(req)));
  });
  server.Post("/decide", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.decide(req.body));
  });

  if (static_dir && !server.set_mount_point("/", *static_dir)) {
    throw DataError("static directory '" + *static_dir + "' does not exist");
  }
}

}  // namespace polarfront::http
