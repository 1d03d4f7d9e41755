// Copyright 2026 The ASBSR Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ASBSR_TEXT_IO_HPP_
#define ASBSR_TEXT_IO_HPP_

#include <string>
#include <vector>

#include "asbsr/cs_lab.hpp"
#include "asbsr/reconstruction.hpp"
#include "asbsr/types.hpp"

namespace asbsr {

/// Fixed-notation, locale-independent rendering with 9 significant digits
/// and trailing zeros trimmed. All text artifacts go through this, so CSV
/// output is byte-stable across runs.
std::string format_real(double x);

/// CSV with header "row,col,value"; one line per sample, LF newlines.
void write_positions_csv(const SampleSet& samples, const std::string& path);

/// Reads a positions CSV back into a SampleSet for the given grid.
SampleSet read_positions_csv(const std::string& path, int ny, int nx);

/// CSV with header "iteration,residual,rmse,trimmed90"; the error columns
/// stay empty when no truth image was supplied.
void write_report_csv(const ReconstructionReport& report, const std::string& path);

/// CSV with header "sparsity,freq,M,trials,failures,failure_rate,redundancy".
void write_redundancy_csv(const RedundancyTable& table, const std::string& path);

/// CSV with header "index,<name>"; one line per element.
void write_series_csv(const std::vector<double>& values, const std::string& name,
                      const std::string& path);

/// Minimal SVG line chart of one or more series (log10 y-axis when all
/// values are positive).
void write_series_svg(const std::vector<std::vector<double>>& series,
                      const std::vector<std::string>& labels, const std::string& path);

}  // namespace asbsr

#endif  // ASBSR_TEXT_IO_HPP_
