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

#include <doctest.h>

#include <fstream>
#include <string>

#include "qae/common.hpp"
#include "qae/run_json.hpp"

using namespace qae;

TEST_CASE("defaults and expressions") {
  const RunConfig c = config_from_json(Json::object());
  CHECK(c.mode == SearchMode::Continuous);
  CHECK(c.spectrum_kind == SpectrumKind::HAtom);
  CHECK(c.dimension == 3);
  CHECK(c.to == 72.0);

  const RunConfig e = config_from_json(Json::parse(R"({"mode":"single","from":"9/16","location":"-pi/2"})"));
  CHECK(e.mode == SearchMode::Single);
  CHECK(e.from == 0.5625);
  CHECK(e.location == doctest::Approx(-kPi / 2));
}

TEST_CASE("previous spectrum") {
  const RunConfig c = config_from_json(Json::parse(R"({"spectrum":"previous","spectrum_values":[0,1,2]})"));
  CHECK(c.previous_spectrum);
  CHECK(c.spectrum_values == std::vector<double>{0, 1, 2});
}

TEST_CASE("rejected requests") {
  const char* bad[] = {
      R"({"colour":"red"})",          R"({"dimension":"three"})", R"({"dimension":-1})",
      R"({"order":1.5})",             R"({"seed":-3})",           R"({"max_steps":0})",
      R"({"threads":1000})",          R"({"from":"abc"})",        R"({"mode":"sideways"})",
      R"({"measure_values":[1,"x"]})", R"([1,2])",                R"({"previous_spectrum":1})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(config_from_json(Json::parse(text)), InvalidInput);
  }
  try {
    config_from_json(Json::parse(R"({"colour":"red"})"));
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()) == "unknown field 'colour'");
  }
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.mode = SearchMode::SeekDimChange;
  c.spectrum_kind = SpectrumKind::Random;
  c.measure_kind = MeasureKind::Equal;
  c.order = 2;
  c.dimension = 9;
  c.step_size = 0.001;
  c.seed = 42;
  c.direction = Direction::Backward;
  Json j = config_to_json(c);
  const RunConfig back = config_from_json(j);
  CHECK(back.mode == c.mode);
  CHECK(back.spectrum_kind == c.spectrum_kind);
  CHECK(back.measure_kind == c.measure_kind);
  CHECK(back.order == 2);
  CHECK(back.dimension == 9);
  CHECK(back.step_size == 0.001);
  CHECK(back.seed == 42);
  CHECK(back.direction == Direction::Backward);
}

TEST_CASE("result documents") {
  RunConfig c;
  c.to = 1.0;
  const auto run = resolve(c);
  const auto result = run_continuous(run);
  const Json j = result_to_json(run, result, {10, 20});
  CHECK(j["planned_steps"] == 100);
  CHECK(j["series"]["total"] == 100);
  CHECK(j["series"]["offset"] == 10);
  CHECK(j["series"]["records"].size() == 20);
  CHECK(j["series"]["records"][0]["index"] == 10);
  CHECK(j["stats"]["steps"] == 100);
  CHECK(j["spectrum"]["kind"] == "h-atom");
  CHECK(j["spectrum"]["seed"].is_null());
  CHECK(j["stats"].contains("time_of_maximum"));

  const Json past = result_to_json(run, result, {500, 20});
  CHECK(past["series"]["records"].empty());

  const Json event = event_to_json(3, 0.03, result.series[3]);
  CHECK(event["index"] == 3);
  CHECK(event["flags"].contains("positive"));
  CHECK(event.size() == 6);
}

TEST_CASE("published request schema matches the parser") {
  std::ifstream in(QAE_SCHEMA_DIR "/run_request.schema.json");
  REQUIRE(in);
  const Json schema = Json::parse(in);
  CHECK(schema["additionalProperties"] == false);
  for (const auto& [key, property] : schema["properties"].items()) {
    CAPTURE(key);
    Json request = Json::object();
    if (property.contains("enum")) {
      for (const auto& value : property["enum"]) {
        request[key] = value;
        if (key == "spectrum" && value == "prescribed") request["spectrum_values"] = {0.0, 1.0, 2.0};
        CHECK_NOTHROW(config_from_json(request));
        request = Json::object();
      }
    } else if (key != "async" && key != "series_offset" && key != "series_limit") {
      if (property.contains("default")) request[key] = property["default"];
      else if (property.value("type", "") == "array") request[key] = Json::array({0.5});
      else if (property.value("type", "") == "boolean") request[key] = false;
      else request[key] = 1;
      CHECK_NOTHROW(config_from_json(request));
    }
  }
  const RunConfig defaults;
  CHECK(schema["properties"]["dimension"]["default"] == defaults.dimension);
  CHECK(schema["properties"]["to"]["default"].get<double>() == defaults.to);
  CHECK(schema["properties"]["step_size"]["default"].get<double>() == defaults.step_size);
  CHECK(schema["properties"]["location"]["default"].get<double>() == defaults.location);
  CHECK(schema["properties"]["max_steps"]["default"] == defaults.max_steps);
}

TEST_CASE("result documents carry the fields of the response schema") {
  std::ifstream in(QAE_SCHEMA_DIR "/run_response.schema.json");
  REQUIRE(in);
  const Json schema = Json::parse(in);
  RunConfig c;
  c.mode = SearchMode::Single;
  c.from = 0.5625;
  const auto run = resolve(c);
  const Json j = result_to_json(run, run_single(run));
  for (const auto& key : schema["$defs"]["stats"]["required"]) CHECK(j["stats"].contains(key.get<std::string>()));
  for (const auto& key : schema["$defs"]["record"]["required"]) {
    CHECK(j["series"]["records"][0].contains(key.get<std::string>()));
  }
  for (const auto& key : schema["$defs"]["measure"]["required"]) CHECK(j["measure"].contains(key.get<std::string>()));
  for (const auto& key : schema["$defs"]["config"]["required"]) CHECK(j["config"].contains(key.get<std::string>()));
  for (const auto& key : schema["$defs"]["event"]["required"]) {
    CHECK(event_to_json(0, 0.0, run_single(run).series[0]).contains(key.get<std::string>()));
  }
}
