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

#ifndef SQU_REPORT_H_
#define SQU_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "squ/harness.h"

namespace squ {

inline constexpr std::size_t kDefaultPlotCycles = 20;

std::string traces_csv(const std::vector<TracePoint>& points);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);
std::string memory_csv(const std::vector<MemorySummary>& rows);

/// Parses a traces.csv produced by traces_csv().
std::vector<TracePoint> parse_traces_csv(std::string_view text);

/// Two panels (precision and recall against #examples), one line per policy
/// pair, cycles 1..max_cycle.
std::string performance_svg(const std::vector<AggregateRow>& rows, std::string_view title,
                            std::size_t max_cycle = kDefaultPlotCycles);

/// Writes traces.csv, aggregate.csv, memory.csv and <dataset>_performance.svg.
/// Throws Error for an empty result or an unwritable directory.
std::vector<std::filesystem::path> emit_outputs(const SuiteResult& result, const std::filesystem::path& out_dir,
                                                std::size_t plot_cycles = kDefaultPlotCycles);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace squ

#endif  // SQU_REPORT_H_
