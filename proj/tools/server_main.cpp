// Copyright 2026 The Quantum Anticipation Explorer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <httplib.h>

#include <csignal>
#include <iostream>

#include "qae/service.hpp"

namespace {

httplib::Server* g_server = nullptr;

extern "C" void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for quantum anticipation runs"};
  std::string host = "127.0.0.1";
  int port = 8080;
  qae::ServiceOptions options;
  app.add_option("--host", host, "bind address");
  app.add_option("--port", port, "listen port")->check(CLI::Range(0, 65535));
  app.add_option("--sync-limit", options.sync_step_limit, "largest run answered synchronously (steps)");
  CLI11_PARSE(app, argc, argv);

  qae::Service service(options);
  httplib::Server server;
  service.mount(server);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  if (port == 0) {
    port = server.bind_to_any_port(host.c_str());
    if (port < 0) {
      std::cerr << "cannot bind " << host << '\n';
      return 1;
    }
    std::cout << "listening on http://" << host << ':' << port << std::endl;
    return server.listen_after_bind() ? 0 : 1;
  }
  if (!server.bind_to_port(host.c_str(), port)) {
    std::cerr << "cannot bind " << host << ':' << port << '\n';
    return 1;
  }
  std::cout << "listening on http://" << host << ':' << port << std::endl;
  return server.listen_after_bind() ? 0 : 1;
}
