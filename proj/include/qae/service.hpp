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

#pragma once

// HTTP/JSON facade over the sweep engine.
//
//   POST   /runs              submit a run (sync for short runs, 202 otherwise)
//   GET    /runs/{id}         status, stats and a page of the series
//   GET    /runs/{id}/events  server-sent events, one per evaluated step
//   GET    /runs/{id}/plot.svg
//   DELETE /runs/{id}         cancel
//   GET    /health

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qae/sweep.hpp"

namespace httplib {
class Server;
}

namespace qae {

enum class RunStatus { Running, Completed, Cancelled, Failed };
std::string_view to_string(RunStatus status);

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  // Runs planned above this many steps go to the background.
  std::size_t sync_step_limit = 20'000;
  std::size_t page_limit = 10'000;
};

class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  HttpReply create_run(const std::string& body);
  HttpReply get_run(const std::string& id, std::size_t offset = 0, std::optional<std::size_t> limit = {});
  HttpReply delete_run(const std::string& id);
  HttpReply plot(const std::string& id);
  HttpReply health() const;

  /// Copies the events from index first on into out (SSE-framed). Waits up to
  /// timeout for new events while the run is active. Returns false for an
  /// unknown id; sets finished once the closing event has been written.
  bool read_events(const std::string& id, std::size_t& next, std::string& out, bool& finished,
                   std::chrono::milliseconds timeout);

  /// Blocks until the run leaves Running or the timeout elapses.
  bool wait(const std::string& id, std::chrono::milliseconds timeout);

  void mount(httplib::Server& server);

 private:
  struct Run {
    std::string id;
    ResolvedRun resolved;
    std::atomic<bool> cancel{false};
    mutable std::mutex mutex;
    std::condition_variable changed;
    RunStatus status = RunStatus::Running;
    std::vector<StepRecord> progress;
    std::optional<SweepResult> result;
    std::string error;
    std::jthread worker;
  };

  std::shared_ptr<Run> find(const std::string& id) const;
  std::string next_id();
  static void execute_run(Run& run);
  std::string response_body(const Run& run, std::size_t offset, std::size_t limit) const;

  ServiceOptions options_;
  mutable std::mutex registry_mutex_;
  std::map<std::string, std::shared_ptr<Run>> runs_;
  std::size_t counter_ = 0;
};

}  // namespace qae
