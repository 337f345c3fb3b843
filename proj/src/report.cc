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

#include "squ/report.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>

#include <fmt/core.h>

namespace squ {

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string number(double v) { return fmt::format("{:.6f}", v); }

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error("csv: unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

constexpr std::array<std::string_view, 16> kTraceColumns = {
    "experiment_id", "teacher_ontology", "student_ontology", "query_property", "target_property",
    "teacher_policy", "student_policy", "repetition", "cycle", "precision",
    "recall", "examples_sent", "teacher_episodic", "student_episodic", "student_working",
    "feedback"};

std::size_t to_size(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(line, fmt::format("'{}' is not an integer", s));
  }
}

double to_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, fmt::format("'{}' is not a number", s));
  }
}

}  // namespace

std::string traces_csv(const std::vector<TracePoint>& points) {
  std::string out;
  for (std::size_t i = 0; i < kTraceColumns.size(); ++i) {
    out += kTraceColumns[i];
    out += i + 1 < kTraceColumns.size() ? ',' : '\n';
  }
  for (const TracePoint& p : points) {
    const CycleRecord& r = p.record;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(p.experiment_id),
                       csv_field(p.teacher_ontology), csv_field(p.student_ontology), csv_field(p.query_property),
                       csv_field(p.target_property), to_string(p.policies.teacher), to_string(p.policies.student),
                       p.repetition, r.cycle, number(r.precision), number(r.recall), r.examples_sent,
                       r.teacher_episodic, r.student_episodic, r.student_working,
                       r.feedback == Feedback::kClear ? "clear" : "unclear");
  }
  return out;
}

std::vector<TracePoint> parse_traces_csv(std::string_view text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw Error("traces csv is empty");
  const auto& header = rows.front();
  if (header.size() != kTraceColumns.size() || !std::equal(header.begin(), header.end(), kTraceColumns.begin())) {
    throw ParseError(1, "unexpected traces.csv header");
  }
  std::vector<TracePoint> points;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    const std::size_t line = i + 1;
    if (f.size() != kTraceColumns.size()) {
      throw ParseError(line, fmt::format("expected {} fields, found {}", kTraceColumns.size(), f.size()));
    }
    TracePoint p;
    p.experiment_id = f[0];
    p.teacher_ontology = f[1];
    p.student_ontology = f[2];
    p.query_property = f[3];
    p.target_property = f[4];
    p.policies = {parse_teacher_policy(f[5]), parse_student_policy(f[6])};
    p.repetition = to_size(f[7], line);
    p.record.cycle = to_size(f[8], line);
    p.record.precision = to_double(f[9], line);
    p.record.recall = to_double(f[10], line);
    p.record.examples_sent = to_size(f[11], line);
    p.record.teacher_episodic = to_size(f[12], line);
    p.record.student_episodic = to_size(f[13], line);
    p.record.student_working = to_size(f[14], line);
    if (f[15] != "clear" && f[15] != "unclear") throw ParseError(line, "feedback must be clear or unclear");
    p.record.feedback = f[15] == "clear" ? Feedback::kClear : Feedback::kUnclear;
    points.push_back(std::move(p));
  }
  return points;
}

std::string aggregate_csv(const std::vector<AggregateRow>& rows) {
  std::string out =
      "teacher_policy,student_policy,cycle,experiments,precision,recall,teacher_episodic,student_episodic,"
      "student_working\n";
  for (const AggregateRow& r : rows) {
    if (r.experiments == 0) {
      out += fmt::format("{},{},{},0,,,,,\n", to_string(r.policies.teacher), to_string(r.policies.student), r.cycle);
      continue;
    }
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(r.policies.teacher), to_string(r.policies.student),
                       r.cycle, r.experiments, number(r.precision), number(r.recall), number(r.teacher_episodic),
                       number(r.student_episodic), number(r.student_working));
  }
  return out;
}

std::string memory_csv(const std::vector<MemorySummary>& rows) {
  std::string out =
      "teacher_policy,student_policy,experiments,student_working,student_episodic,teacher_episodic,initial_pool,"
      "examples_sent,teacher_episodic_pct_pool,student_episodic_pct_pool,teacher_episodic_pct_sent,"
      "student_episodic_pct_sent\n";
  for (const MemorySummary& m : rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", to_string(m.policies.teacher),
                       to_string(m.policies.student), m.experiments, number(m.student_working),
                       number(m.student_episodic), number(m.teacher_episodic), number(m.initial_pool),
                       number(m.examples_sent), number(m.teacher_episodic_pct_pool),
                       number(m.student_episodic_pct_pool), number(m.teacher_episodic_pct_sent),
                       number(m.student_episodic_pct_sent));
  }
  return out;
}

std::string performance_svg(const std::vector<AggregateRow>& rows, std::string_view title, std::size_t max_cycle) {
  constexpr double kPanelW = 420, kPanelH = 280, kLeft = 60, kTop = 70, kGap = 80;
  constexpr std::array<std::string_view, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                      "#ff7f0e", "#9467bd", "#8c564b"};
  max_cycle = std::max<std::size_t>(max_cycle, 2);
  const double width = kLeft + 2 * kPanelW + kGap + 40;
  const double height = kTop + kPanelH + 90;

  std::map<PolicyPair, std::vector<const AggregateRow*>> series;
  for (const AggregateRow& r : rows) {
    if (r.experiments > 0 && r.cycle <= max_cycle) series[r.policies].push_back(&r);
  }

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n",
      width, height, width / 2, xml_escape(title));

  auto x_of = [&](double panel_x, std::size_t cycle) {
    return panel_x + (static_cast<double>(cycle) - 1.0) / static_cast<double>(max_cycle - 1) * kPanelW;
  };
  auto y_of = [&](double v) { return kTop + (1.0 - v) * kPanelH; };

  for (int panel = 0; panel < 2; ++panel) {
    const double px = kLeft + panel * (kPanelW + kGap);
    const std::string_view metric = panel == 0 ? "Precision" : "Recall";
    svg += fmt::format("<g class=\"panel\" id=\"{}\">\n", panel == 0 ? "precision" : "recall");
    svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n", px,
                       kTop, kPanelW, kPanelH);
    for (int t = 0; t <= 5; ++t) {
      const double v = t / 5.0;
      svg += fmt::format(
          "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#ddd\"/>"
          "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5:.1f}</text>\n",
          px, y_of(v), px + kPanelW, px - 6, y_of(v) + 4, v);
    }
    const std::size_t step = std::max<std::size_t>(1, max_cycle / 5);
    std::vector<std::size_t> ticks{1};
    for (std::size_t c = step; c <= max_cycle; c += step) {
      if (c > 1) ticks.push_back(c);
    }
    for (std::size_t c : ticks) {
      svg += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", x_of(px, c),
                         kTop + kPanelH + 18, c);
    }
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">#examples</text>\n", px + kPanelW / 2,
                       kTop + kPanelH + 38);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", px + kPanelW / 2,
                       kTop - 10, metric);

    std::size_t color = 0;
    for (const auto& [policies, points] : series) {
      std::string path;
      for (const AggregateRow* r : points) {
        const double v = panel == 0 ? r->precision : r->recall;
        path += fmt::format("{}{:.2f},{:.2f}", path.empty() ? "" : " ", x_of(px, r->cycle), y_of(v));
      }
      svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"><title>{}</title></polyline>\n",
                         kColors[color % kColors.size()], path, label(policies));
      ++color;
    }
    svg += "</g>\n";
  }

  std::size_t color = 0;
  double lx = kLeft;
  const double ly = kTop + kPanelH + 68;
  for (const auto& [policies, points] : series) {
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"3\"/>"
        "<text x=\"{4}\" y=\"{5}\">{6}</text>\n",
        lx, ly, lx + 24, kColors[color % kColors.size()], lx + 30, ly + 4, label(policies));
    lx += 200;
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write '{}'", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(fmt::format("failed writing '{}'", path.string()));
}

std::vector<std::filesystem::path> emit_outputs(const SuiteResult& result, const std::filesystem::path& out_dir,
                                                std::size_t plot_cycles) {
  if (result.points.empty()) throw Error("nothing to write: the suite produced no trace");
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw Error(fmt::format("cannot create output directory '{}'", out_dir.string()));
  }
  const std::vector<std::filesystem::path> files = {out_dir / "traces.csv", out_dir / "aggregate.csv",
                                                    out_dir / "memory.csv",
                                                    out_dir / fmt::format("{}_performance.svg", result.dataset)};
  write_text_file(files[0], traces_csv(result.points));
  write_text_file(files[1], aggregate_csv(result.aggregates));
  write_text_file(files[2], memory_csv(result.memory));
  write_text_file(files[3], performance_svg(result.aggregates, result.dataset, plot_cycles));
  return files;
}

}  // namespace squ
