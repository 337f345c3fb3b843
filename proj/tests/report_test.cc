/**
 * Copyright 2026, The squ Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy of
 * the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
 * License for the specific language governing permissions and limitations under
 * the License.
 */

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "squ/report.h"
#include "support/toys.h"

using namespace squ;
using namespace squ::testing;

namespace fs = std::filesystem;

namespace {

SuiteResult small_suite() {
  World w = make_world({{"a", {"Q"}}, {"b", {"Q", "X"}}, {"c", {}}, {"d", {"X"}}},
                       {{"a", {"R"}}, {"b", {"R"}}, {"c", {"Y"}}, {"d", {}}});
  auto spec = make_spec(w, "Q", "R", TeacherPolicy::kRandom, StudentPolicy::kFrequency, 3, 0);
  spec.id = "T->S|Q|R, \"quoted\"";
  SuiteOptions options;
  options.repetitions = 2;
  return run_suite({spec}, options, "toy");
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("traces csv has one row per cycle and round-trips") {
  const SuiteResult result = small_suite();
  const std::string csv = traces_csv(result.points);
  CHECK(csv.starts_with("experiment_id,"));
  CHECK(lines(csv) == result.points.size() + 1);

  const auto back = parse_traces_csv(csv);
  REQUIRE(back.size() == result.points.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& x = back[i];
    const auto& y = result.points[i];
    CHECK(x.experiment_id == y.experiment_id);
    CHECK(x.policies == y.policies);
    CHECK(x.repetition == y.repetition);
    CHECK(x.record.cycle == y.record.cycle);
    CHECK(x.record.feedback == y.record.feedback);
    CHECK(x.record.precision == doctest::Approx(y.record.precision).epsilon(1e-6));
    CHECK(x.record.recall == doctest::Approx(y.record.recall).epsilon(1e-6));
    CHECK(x.record.teacher_episodic == y.record.teacher_episodic);
  }
  CHECK(traces_csv(back) == csv);

  CHECK_THROWS_AS(parse_traces_csv(""), Error);
  CHECK_THROWS_AS(parse_traces_csv("a,b\n"), ParseError);
}

TEST_CASE("one trace of three cycles gives three rows") {
  std::vector<TracePoint> points;
  for (std::size_t c = 1; c <= 3; ++c) {
    TracePoint p;
    p.experiment_id = "e";
    p.record.cycle = c;
    p.record.examples_sent = c;
    points.push_back(p);
  }
  CHECK(lines(traces_csv(points)) == 4);
}

TEST_CASE("aggregate csv covers every pair and cycle") {
  const SuiteResult result = small_suite();
  std::size_t max_cycle = 0;
  for (const auto& p : result.points) max_cycle = std::max(max_cycle, p.record.cycle);
  CHECK(result.aggregates.size() == 4 * max_cycle);
  CHECK(lines(aggregate_csv(result.aggregates)) == result.aggregates.size() + 1);
  CHECK(lines(memory_csv(result.memory)) == 5);
}

TEST_CASE("performance svg") {
  const SuiteResult result = small_suite();
  const std::string svg = performance_svg(result.aggregates, "toy <data> & more", 5);
  CHECK(svg.starts_with("<svg"));
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("toy &lt;data&gt; &amp; more") != std::string::npos);
  CHECK(svg.find("Precision") != std::string::npos);
  CHECK(svg.find("Recall") != std::string::npos);
  for (const auto& pair : full_policy_grid()) CHECK(svg.find(label(pair)) != std::string::npos);
}

TEST_CASE("emit_outputs writes four files and rejects empty results") {
  const fs::path dir = fs::temp_directory_path() / "squ_report_out";
  fs::remove_all(dir);
  const auto written = emit_outputs(small_suite(), dir, 5);
  CHECK(written.size() == 4);
  for (const auto& path : written) CHECK(fs::file_size(path) > 0);
  CHECK(fs::exists(dir / "toy_performance.svg"));

  CHECK_THROWS_AS(emit_outputs(SuiteResult{}, dir), Error);
  write_text_file(dir / "blocker", "x");
  CHECK_THROWS_AS(emit_outputs(small_suite(), dir / "blocker" / "sub"), Error);
}
