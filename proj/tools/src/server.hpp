#pragma once

#include <httplib.h>

#include "escandir/lexicon.hpp"
#include "escandir/pattern.hpp"
#include "escandir/poem.hpp"

namespace escandir::server {

/// Everything a request needs. Must outlive the server it is installed on.
struct ServerConfig {
  PoemOptions defaults;
  LexiconConfig lexicon = LexiconConfig::standard();
  Catalog catalog = Catalog::bundled();
};

/// POST /analyze and GET /health, with permissive CORS for a browser client.
void install_routes(httplib::Server& server, const ServerConfig& config);

}  // namespace escandir::server
