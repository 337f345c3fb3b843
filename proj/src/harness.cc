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

#include "squ/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/core.h>

namespace squ {

std::string label(const PolicyPair& policies) {
  return fmt::format("{}-{}", to_string(policies.teacher), to_string(policies.student));
}

std::vector<PolicyPair> full_policy_grid() {
  return {{TeacherPolicy::kRandom, StudentPolicy::kFrequency},
          {TeacherPolicy::kRandom, StudentPolicy::kLogic},
          {TeacherPolicy::kPropertyBased, StudentPolicy::kFrequency},
          {TeacherPolicy::kPropertyBased, StudentPolicy::kLogic}};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t cut = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, cut == std::string_view::npos ? s.size() - start : cut - start)));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw Error(fmt::format("config key '{}': '{}' is not a non-negative integer", key, value));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {} '{}'", what, path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::vector<PolicyPair> parse_policy_grid(std::string_view text) {
  std::string_view teachers;
  std::string_view students;
  for (std::string_view sep : {std::string_view("\xC3\x97"), std::string_view(":"), std::string_view("x")}) {
    if (auto cut = text.find(sep); cut != std::string_view::npos) {
      teachers = text.substr(0, cut);
      students = text.substr(cut + sep.size());
      break;
    }
  }
  if (teachers.empty() || students.empty()) {
    throw Error(fmt::format("policy grid '{}' must look like random,property x frequency,logic", text));
  }
  std::vector<PolicyPair> grid;
  for (const std::string& t : split(teachers, ',')) {
    for (const std::string& s : split(students, ',')) {
      PolicyPair pair{parse_teacher_policy(t), parse_student_policy(s)};
      if (std::find(grid.begin(), grid.end(), pair) == grid.end()) grid.push_back(pair);
    }
  }
  return grid;
}

DatasetConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  DatasetConfig config;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const std::vector<std::string> fields = words(value);

    if (key == "name") {
      config.name = value;
    } else if (key == "type_predicate") {
      config.type_predicate = value;
    } else if (key == "ontology") {
      if (fields.size() != 2) throw ParseError(line_no, "ontology = <name> <triple file>");
      config.ontologies.emplace_back(fields[0], resolve(fields[1]));
    } else if (key == "pair") {
      if (fields.size() != 3) throw ParseError(line_no, "pair = <left> <right> <reference alignment file>");
      config.pairs.push_back({fields[0], fields[1], resolve(fields[2]), std::nullopt});
    } else if (key == "imported") {
      if (fields.size() != 3) throw ParseError(line_no, "imported = <left> <right> <instance alignment file>");
      auto it = std::find_if(config.pairs.begin(), config.pairs.end(),
                             [&](const PairConfig& p) { return p.left == fields[0] && p.right == fields[1]; });
      if (it == config.pairs.end()) throw ParseError(line_no, "imported alignments for a pair not declared above");
      it->imported = resolve(fields[2]);
    } else if (key == "grounding") {
      if (value == "simple") {
        config.grounding = GroundingKind::kSimple;
      } else if (value == "extended") {
        config.grounding = GroundingKind::kExtended;
      } else {
        throw ParseError(line_no, "grounding must be simple or extended");
      }
    } else if (key == "max_cycles") {
      config.max_cycles = parse_number<std::size_t>(key, value);
    } else if (key == "repetitions") {
      config.repetitions = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "truth_scope") {
      config.truth_scope = parse_truth_scope(value);
    } else if (key == "plot_cycles") {
      config.plot_cycles = parse_number<std::size_t>(key, value);
    } else if (key == "workers") {
      config.workers = parse_number<std::size_t>(key, value);
    } else if (key == "policies") {
      config.policies = parse_policy_grid(value);
    } else {
      throw ParseError(line_no, fmt::format("unknown key '{}'", key));
    }
  }
  if (config.max_cycles == 0) throw Error("max_cycles must be positive");
  if (config.repetitions == 0) throw Error("repetitions must be positive");
  return config;
}

DatasetConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path, "config");
  try {
    return parse_config(text, path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::vector<ClassAlignment> parse_class_alignments(std::string_view text) {
  std::vector<ClassAlignment> out;
  for (const NamedAlignment& a : parse_named_alignments(text)) out.push_back({a.left, a.right});
  return out;
}

DatasetBundle load_bundle(const DatasetConfig& config) {
  DatasetBundle bundle;
  bundle.name = config.name;
  bundle.grounding = config.grounding;
  for (const auto& [name, path] : config.ontologies) {
    if (bundle.views.contains(name)) throw Error(fmt::format("ontology '{}' declared twice", name));
    auto view = std::make_shared<const AgentOntology>(build_view(load_triple_file(path), name, config.type_predicate));
    if (view->object_count() == 0) throw Error(fmt::format("ontology '{}' has no objects", name));
    bundle.views.emplace(name, std::move(view));
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const PairConfig& pc : config.pairs) {
    for (const std::string& n : {pc.left, pc.right}) {
      if (!bundle.views.contains(n)) throw Error(fmt::format("pair names unknown ontology '{}'", n));
    }
    if (pc.left == pc.right) throw Error(fmt::format("pair {} {} aligns an ontology with itself", pc.left, pc.right));
    if (!seen.emplace(pc.left, pc.right).second || seen.contains({pc.right, pc.left})) {
      throw Error(fmt::format("pair {} {} listed twice", pc.left, pc.right));
    }
    OntologyPair pair{pc.left, pc.right, {}, {}};
    try {
      pair.reference = parse_class_alignments(read_file(pc.reference, "reference alignment file"));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), fmt::format("{}: {}", pc.reference.string(), e.what()));
    }
    if (pc.imported) pair.imported = read_named_alignments(*pc.imported);
    bundle.pairs.push_back(std::move(pair));
  }
  return bundle;
}

double CraftResult::mean_common_objects() const {
  if (census.empty()) return 0.0;
  double total = 0.0;
  for (const PairCensus& c : census) total += static_cast<double>(c.common_objects);
  return total / static_cast<double>(census.size());
}

CraftResult craft_experiments(const DatasetBundle& bundle, const CraftOptions& options) {
  CraftResult result;
  for (const OntologyPair& pair : bundle.pairs) {
    const auto& a = bundle.views.at(pair.left);
    const auto& b = bundle.views.at(pair.right);
    GroundingMode mode{bundle.grounding, {}};
    if (mode.kind == GroundingKind::kExtended) mode.imported = pair.imported;
    const std::vector<InstanceAlignment> alignment = ground(*a, *b, mode);

    std::set<ClassAlignment> reference(pair.reference.begin(), pair.reference.end());
    PairCensus census{pair.left, pair.right, alignment.size(), reference.size(), 0};

    for (bool teacher_is_left : {true, false}) {
      const auto& teacher = teacher_is_left ? a : b;
      const auto& student = teacher_is_left ? b : a;
      auto commons = std::make_shared<const CommonObjects>(orient(alignment, teacher_is_left));

      for (const ClassAlignment& ref : reference) {
        const std::string& query = teacher_is_left ? ref.left : ref.right;
        const std::string& target = teacher_is_left ? ref.right : ref.left;
        auto reject = [&](std::string reason) {
          result.rejected.push_back({teacher->name(), student->name(), {query, target}, std::move(reason)});
        };

        const auto query_id = teacher->find_property(query);
        const auto target_id = student->find_property(target);
        if (!query_id) {
          reject(fmt::format("class absent from {}", teacher->name()));
          continue;
        }
        if (!target_id) {
          reject(fmt::format("class absent from {}", student->name()));
          continue;
        }
        std::size_t teacher_owners = 0;
        std::size_t student_owners = 0;
        for (std::size_t k = 0; k < commons->size(); ++k) {
          teacher_owners += teacher->has_property(commons->teacher[k], *query_id) ? 1 : 0;
          student_owners += student->has_property(commons->student[k], *target_id) ? 1 : 0;
        }
        if (teacher_owners == 0 || student_owners == 0) {
          reject("no common instance of the aligned classes");
          continue;
        }
        if (teacher_owners == commons->size()) {
          reject("every common object owns the query class");
          continue;
        }

        ExperimentSpec spec;
        spec.id = fmt::format("{}->{}|{}|{}", teacher->name(), student->name(), query, target);
        spec.teacher_view = teacher;
        spec.student_view = student;
        spec.commons = commons;
        spec.query_property = *query_id;
        spec.target_property = *target_id;
        spec.max_cycles = options.max_cycles;
        spec.truth_scope = options.truth_scope;
        result.specs.push_back(std::move(spec));
        ++census.specs;
      }
    }
    result.census.push_back(census);
  }
  return result;
}

SuiteResult run_suite(const std::vector<ExperimentSpec>& specs, const SuiteOptions& options, std::string dataset) {
  if (specs.empty()) throw Error("no experiments to run");
  if (options.policies.empty()) throw Error("empty policy grid");
  if (options.repetitions == 0) throw Error("repetitions must be positive");

  struct Job {
    std::size_t spec;
    PolicyPair policies;
    std::size_t repetition;
  };
  std::vector<Job> jobs;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    for (const PolicyPair& p : options.policies) {
      for (std::size_t rep = 0; rep < options.repetitions; ++rep) jobs.push_back({s, p, rep});
    }
  }

  std::vector<ExperimentTrace> traces(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      ExperimentSpec spec = specs[jobs[j].spec];
      spec.teacher_policy = jobs[j].policies.teacher;
      spec.student_policy = jobs[j].policies.student;
      spec.seed = options.base_seed + jobs[j].repetition;
      traces[j] = run_episode(spec, jobs[j].repetition);
    }
  };
  std::size_t workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  SuiteResult result;
  result.dataset = std::move(dataset);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const ExperimentSpec& spec = specs[jobs[j].spec];
    const ExperimentTrace& trace = traces[j];
    result.runs.push_back({spec.id, jobs[j].policies, trace.repetition, trace.initial_pool, trace.termination});
    for (const CycleRecord& record : trace.records) {
      result.points.push_back({spec.id, spec.teacher_view->name(), spec.student_view->name(),
                               spec.teacher_view->property_name(spec.query_property),
                               spec.student_view->property_name(spec.target_property), jobs[j].policies,
                               trace.repetition, record});
    }
  }
  result.aggregates = aggregate(result.points);
  result.memory = summarize_memory(result.points, result.runs);
  return result;
}

namespace {

struct Accumulator {
  double precision = 0.0;
  double recall = 0.0;
  double teacher_episodic = 0.0;
  double student_episodic = 0.0;
  double student_working = 0.0;
  std::size_t n = 0;

  void add(const Accumulator& other, double weight) {
    precision += other.precision * weight;
    recall += other.recall * weight;
    teacher_episodic += other.teacher_episodic * weight;
    student_episodic += other.student_episodic * weight;
    student_working += other.student_working * weight;
  }
};

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<TracePoint>& points) {
  // policy -> cycle -> experiment -> sum over repetitions reaching the cycle
  std::map<PolicyPair, std::map<std::size_t, std::map<std::string, Accumulator>>> sums;
  std::size_t max_cycle = 0;
  for (const TracePoint& p : points) {
    Accumulator& acc = sums[p.policies][p.record.cycle][p.experiment_id];
    acc.precision += p.record.precision;
    acc.recall += p.record.recall;
    acc.teacher_episodic += static_cast<double>(p.record.teacher_episodic);
    acc.student_episodic += static_cast<double>(p.record.student_episodic);
    acc.student_working += static_cast<double>(p.record.student_working);
    ++acc.n;
    max_cycle = std::max(max_cycle, p.record.cycle);
  }

  std::vector<AggregateRow> rows;
  for (const auto& [policies, by_cycle] : sums) {
    for (std::size_t cycle = 1; cycle <= max_cycle; ++cycle) {
      AggregateRow row{policies, cycle};
      auto it = by_cycle.find(cycle);
      if (it != by_cycle.end()) {
        Accumulator total;
        for (const auto& [id, acc] : it->second) total.add(acc, 1.0 / static_cast<double>(acc.n));
        row.experiments = it->second.size();
        const double k = static_cast<double>(row.experiments);
        row.precision = total.precision / k;
        row.recall = total.recall / k;
        row.teacher_episodic = total.teacher_episodic / k;
        row.student_episodic = total.student_episodic / k;
        row.student_working = total.student_working / k;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<MemorySummary> summarize_memory(const std::vector<TracePoint>& points,
                                            const std::vector<RunSummary>& runs) {
  struct RunStats {
    const CycleRecord* last = nullptr;
    double working_sum = 0.0;
    std::size_t cycles = 0;
  };
  using RunKey = std::tuple<PolicyPair, std::string, std::size_t>;
  std::map<RunKey, RunStats> stats;
  for (const TracePoint& p : points) {
    RunStats& s = stats[{p.policies, p.experiment_id, p.repetition}];
    if (!s.last || p.record.cycle > s.last->cycle) s.last = &p.record;
    s.working_sum += static_cast<double>(p.record.student_working);
    ++s.cycles;
  }

  struct Values {
    double working = 0, student_episodic = 0, teacher_episodic = 0, pool = 0, sent = 0;
    double teacher_pct_pool = 0, student_pct_pool = 0, teacher_pct_sent = 0, student_pct_sent = 0;
    std::size_t n = 0;
  };
  std::map<PolicyPair, std::map<std::string, Values>> per_experiment;
  for (const RunSummary& run : runs) {
    Values& v = per_experiment[run.policies][run.experiment_id];
    ++v.n;
    v.pool += static_cast<double>(run.initial_pool);
    auto it = stats.find({run.policies, run.experiment_id, run.repetition});
    if (it == stats.end() || it->second.cycles == 0) continue;
    const RunStats& s = it->second;
    const double teacher = static_cast<double>(s.last->teacher_episodic);
    const double student = static_cast<double>(s.last->student_episodic);
    const double sent = static_cast<double>(s.last->examples_sent);
    const double pool = static_cast<double>(run.initial_pool);
    v.working += s.working_sum / static_cast<double>(s.cycles);
    v.student_episodic += student;
    v.teacher_episodic += teacher;
    v.sent += sent;
    v.teacher_pct_pool += 100.0 * teacher / pool;
    v.student_pct_pool += 100.0 * student / pool;
    v.teacher_pct_sent += 100.0 * teacher / sent;
    v.student_pct_sent += 100.0 * student / sent;
  }

  std::vector<MemorySummary> out;
  for (const auto& [policies, experiments] : per_experiment) {
    MemorySummary m{policies, experiments.size()};
    for (const auto& [id, v] : experiments) {
      const double n = static_cast<double>(v.n);
      m.student_working += v.working / n;
      m.student_episodic += v.student_episodic / n;
      m.teacher_episodic += v.teacher_episodic / n;
      m.initial_pool += v.pool / n;
      m.examples_sent += v.sent / n;
      m.teacher_episodic_pct_pool += v.teacher_pct_pool / n;
      m.student_episodic_pct_pool += v.student_pct_pool / n;
      m.teacher_episodic_pct_sent += v.teacher_pct_sent / n;
      m.student_episodic_pct_sent += v.student_pct_sent / n;
    }
    const double k = static_cast<double>(m.experiments);
    for (double* f : {&m.student_working, &m.student_episodic, &m.teacher_episodic, &m.initial_pool, &m.examples_sent,
                      &m.teacher_episodic_pct_pool, &m.student_episodic_pct_pool, &m.teacher_episodic_pct_sent,
                      &m.student_episodic_pct_sent}) {
      *f /= k;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace squ
