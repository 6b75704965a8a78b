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

#include "qae/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <charconv>

#include "qae/common.hpp"
#include "qae/plot.hpp"
#include "qae/run_json.hpp"

namespace qae {
namespace {

HttpReply json_reply(int status, const Json& body) { return {status, "application/json", body.dump()}; }

HttpReply error_reply(int status, const std::string& message) {
  return json_reply(status, Json{{"error", message}});
}

std::size_t parse_count(const std::string& text, const char* name) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidInput(std::string("'") + name + "' must be a non-negative integer");
  }
  return value;
}

bool runs_inline(const RunConfig& config) {
  return config.mode == SearchMode::Single || config.mode == SearchMode::SeekPositive ||
         config.mode == SearchMode::SeekEqual || config.mode == SearchMode::SeekDimChange;
}

}  // namespace

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Running:
      return "running";
    case RunStatus::Completed:
      return "completed";
    case RunStatus::Cancelled:
      return "cancelled";
    case RunStatus::Failed:
      return "failed";
  }
  return "failed";
}

Service::Service(ServiceOptions options) : options_(options) {}

Service::~Service() {
  std::map<std::string, std::shared_ptr<Run>> runs;
  {
    std::lock_guard lock(registry_mutex_);
    runs.swap(runs_);
  }
  for (auto& [id, run] : runs) run->cancel = true;
  for (auto& [id, run] : runs) {
    if (run->worker.joinable()) run->worker.join();
  }
}

std::shared_ptr<Service::Run> Service::find(const std::string& id) const {
  std::lock_guard lock(registry_mutex_);
  const auto it = runs_.find(id);
  return it == runs_.end() ? nullptr : it->second;
}

std::string Service::next_id() {
  std::lock_guard lock(registry_mutex_);
  return "run-" + std::to_string(++counter_);
}

void Service::execute_run(Run& run) {
  RunControl control;
  control.cancel = &run.cancel;
  control.progress = [&run](std::size_t, double, const StepRecord& record) {
    {
      std::lock_guard lock(run.mutex);
      run.progress.push_back(record);
    }
    run.changed.notify_all();
  };
  std::optional<SweepResult> result;
  std::string error;
  try {
    result = execute(run.resolved, control);
  } catch (const std::exception& e) {
    error = e.what();
  }
  {
    std::lock_guard lock(run.mutex);
    if (result) {
      run.status = result->cancelled ? RunStatus::Cancelled : RunStatus::Completed;
      run.result = std::move(result);
      run.progress.clear();
      run.progress.shrink_to_fit();
    } else {
      run.status = RunStatus::Failed;
      run.error = std::move(error);
    }
  }
  run.changed.notify_all();
}

std::string Service::response_body(const Run& run, std::size_t offset, std::size_t limit) const {
  // Caller holds run.mutex.
  Json j;
  if (run.result) {
    j = result_to_json(run.resolved, *run.result, SeriesPage{offset, limit});
  } else {
    SweepResult partial;
    partial.series = run.progress;
    partial.planned_steps = planned_steps(run.resolved.config);
    partial.stats = compute_stats(partial.series, run.resolved.config.order);
    j = result_to_json(run.resolved, partial, SeriesPage{offset, limit});
  }
  j["id"] = run.id;
  j["status"] = to_string(run.status);
  j["completed_steps"] = run.result ? run.result->series.size() : run.progress.size();
  if (!run.error.empty()) j["error"] = run.error;
  return j.dump();
}

HttpReply Service::create_run(const std::string& body) {
  Json request;
  try {
    request = Json::parse(body);
  } catch (const Json::parse_error& e) {
    return error_reply(400, std::string("malformed JSON: ") + e.what());
  }
  auto run = std::make_shared<Run>();
  bool force_async = false;
  SeriesPage page{0, options_.page_limit};
  try {
    const RunConfig config = config_from_json(request);
    if (request.contains("async")) {
      if (!request["async"].is_boolean()) throw InvalidInput("'async' must be a boolean");
      force_async = request["async"].get<bool>();
    }
    if (request.contains("series_offset")) {
      if (!request["series_offset"].is_number_unsigned()) throw InvalidInput("'series_offset' must be a non-negative integer");
      page.offset = request["series_offset"].get<std::size_t>();
    }
    if (request.contains("series_limit")) {
      if (!request["series_limit"].is_number_unsigned()) throw InvalidInput("'series_limit' must be a non-negative integer");
      page.limit = std::min(options_.page_limit, request["series_limit"].get<std::size_t>());
    }
    run->resolved = resolve(config);
  } catch (const InvalidInput& e) {
    return error_reply(400, e.what());
  }
  run->id = next_id();
  {
    std::lock_guard lock(registry_mutex_);
    runs_[run->id] = run;
  }

  const bool background =
      force_async || (!runs_inline(run->resolved.config) && planned_steps(run->resolved.config) > options_.sync_step_limit);
  if (!background) {
    execute_run(*run);
    std::lock_guard lock(run->mutex);
    return {run->status == RunStatus::Failed ? 500 : 200, "application/json",
            response_body(*run, page.offset, page.limit)};
  }

  Run* raw = run.get();
  run->worker = std::jthread([raw] { execute_run(*raw); });
  Json accepted{{"id", run->id},
                {"status", to_string(RunStatus::Running)},
                {"planned_steps", planned_steps(run->resolved.config)},
                {"config", config_to_json(run->resolved.config)},
                {"seed", run->resolved.seed},
                {"spectrum", spectrum_to_json(run->resolved.spectrum)}};
  return json_reply(202, accepted);
}

HttpReply Service::get_run(const std::string& id, std::size_t offset, std::optional<std::size_t> limit) {
  const auto run = find(id);
  if (!run) return error_reply(404, "unknown run '" + id + "'");
  const std::size_t page = std::min(limit.value_or(options_.page_limit), options_.page_limit);
  std::lock_guard lock(run->mutex);
  return {200, "application/json", response_body(*run, offset, page)};
}

HttpReply Service::delete_run(const std::string& id) {
  const auto run = find(id);
  if (!run) return error_reply(404, "unknown run '" + id + "'");
  run->cancel = true;
  std::unique_lock lock(run->mutex);
  run->changed.wait(lock, [&] { return run->status != RunStatus::Running; });
  return {200, "application/json", response_body(*run, 0, options_.page_limit)};
}

HttpReply Service::plot(const std::string& id) {
  const auto run = find(id);
  if (!run) return error_reply(404, "unknown run '" + id + "'");
  std::vector<StepRecord> series;
  {
    std::lock_guard lock(run->mutex);
    series = run->result ? run->result->series : run->progress;
  }
  if (series.empty()) return error_reply(409, "run has no evaluated steps");
  const auto& config = run->resolved.config;
  const bool measure_view = config.mode != SearchMode::Continuous && config.mode != SearchMode::Random;
  if (measure_view && series.front().measure) {
    return {200, "image/svg+xml", render_spectrum_svg(*series.front().measure, series.front().time)};
  }
  return {200, "image/svg+xml", render_curves_svg(series, config.order)};
}

HttpReply Service::health() const {
  std::size_t active = 0;
  std::size_t total = 0;
  {
    std::lock_guard lock(registry_mutex_);
    total = runs_.size();
    for (const auto& [id, run] : runs_) {
      std::lock_guard run_lock(run->mutex);
      if (run->status == RunStatus::Running) ++active;
    }
  }
  return json_reply(200, Json{{"status", "ok"}, {"runs", total}, {"active", active}});
}

bool Service::read_events(const std::string& id, std::size_t& next, std::string& out, bool& finished,
                          std::chrono::milliseconds timeout) {
  const auto run = find(id);
  if (!run) return false;
  std::unique_lock lock(run->mutex);
  const auto available = [&] {
    const auto& series = run->result ? run->result->series : run->progress;
    return next < series.size() || run->status != RunStatus::Running;
  };
  run->changed.wait_for(lock, timeout, available);
  const auto& series = run->result ? run->result->series : run->progress;
  for (; next < series.size(); ++next) {
    const StepRecord& r = series[next];
    out += "id: " + std::to_string(next) + "\nevent: step\ndata: " + event_to_json(next, r.time, r).dump() + "\n\n";
  }
  if (run->status != RunStatus::Running) {
    const Json end{{"status", to_string(run->status)}, {"steps", series.size()}};
    out += "event: end\ndata: " + end.dump() + "\n\n";
    finished = true;
  }
  return true;
}

bool Service::wait(const std::string& id, std::chrono::milliseconds timeout) {
  const auto run = find(id);
  if (!run) return false;
  std::unique_lock lock(run->mutex);
  return run->changed.wait_for(lock, timeout, [&] { return run->status != RunStatus::Running; });
}

void Service::mount(httplib::Server& server) {
  const auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  server.Post("/runs", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, create_run(req.body));
  });
  server.Get(R"(/runs/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    try {
      const std::size_t offset = req.has_param("offset") ? parse_count(req.get_param_value("offset"), "offset") : 0;
      std::optional<std::size_t> limit;
      if (req.has_param("limit")) limit = parse_count(req.get_param_value("limit"), "limit");
      send(res, get_run(req.matches[1], offset, limit));
    } catch (const InvalidInput& e) {
      send(res, error_reply(400, e.what()));
    }
  });
  server.Delete(R"(/runs/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, delete_run(req.matches[1]));
  });
  server.Get(R"(/runs/([^/]+)/plot\.svg)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, plot(req.matches[1]));
  });
  server.Get(R"(/runs/([^/]+)/events)", [this, send](const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    if (!find(id)) {
      send(res, error_reply(404, "unknown run '" + id + "'"));
      return;
    }
    std::size_t start = 0;
    try {
      if (req.has_param("from")) start = parse_count(req.get_param_value("from"), "from");
      else if (req.has_header("Last-Event-ID")) start = parse_count(req.get_header_value("Last-Event-ID"), "Last-Event-ID") + 1;
    } catch (const InvalidInput& e) {
      send(res, error_reply(400, e.what()));
      return;
    }
    auto next = std::make_shared<std::size_t>(start);
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider("text/event-stream", [this, id, next](std::size_t, httplib::DataSink& sink) {
      std::string chunk;
      bool finished = false;
      if (!read_events(id, *next, chunk, finished, std::chrono::milliseconds(250))) return false;
      if (!chunk.empty() && !sink.write(chunk.data(), chunk.size())) return false;
      if (finished) sink.done();
      return true;
    });
  });
  server.Get("/health", [this, send](const httplib::Request&, httplib::Response& res) { send(res, health()); });
}

}  // namespace qae
