#include "server.hpp"

#include <nlohmann/json.hpp>

#include "escandir/report.hpp"

namespace escandir::server {

namespace {

void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

void install_routes(httplib::Server& server, const ServerConfig& config) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Headers", "Content-Type"},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
  });

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, {{"status", "ok"}});
  });

  server.Options("/analyze", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/analyze", [&config](const httplib::Request& req, httplib::Response& res) {
    nlohmann::json request;
    try {
      request = nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
      send_json(res, 400, {{"error", std::string("invalid JSON: ") + e.what()}});
      return;
    }
    try {
      send_json(res, 200, handle_analyze(request, config.defaults, config.lexicon, config.catalog));
    } catch (const std::invalid_argument& e) {
      send_json(res, 400, {{"error", e.what()}});
    } catch (const std::exception& e) {
      send_json(res, 500, {{"error", e.what()}});
    }
  });
}

}  // namespace escandir::server
