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

#include "asbsr/text_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "asbsr/errors.hpp"

namespace asbsr {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";

  // Precision that yields 9 significant digits in fixed notation.
  const int exp10 = static_cast<int>(std::floor(std::log10(std::fabs(x))));
  const int prec = std::clamp(8 - exp10, 0, 320);
  char buf[400];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);

  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    std::size_t last = s.find_last_not_of('0');
    if (s[last] == '.') --last;
    s.erase(last + 1);
  }
  if (s == "-0") s = "0";
  return s;
}

namespace {

std::ofstream open_text(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF newlines everywhere
  if (!out) throw std::runtime_error("cannot write file: " + path);
  return out;
}

}  // namespace

void write_positions_csv(const SampleSet& samples, const std::string& path) {
  std::ofstream out = open_text(path);
  out << "row,col,value\n";
  for (const Sample& s : samples.samples) {
    out << s.row << "," << s.col << "," << format_real(s.value) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

SampleSet read_positions_csv(const std::string& path, int ny, int nx) {
  detail::require(ny >= 1 && nx >= 1, "grid dimensions must be at least 1x1");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  SampleSet out;
  out.ny = ny;
  out.nx = nx;
  std::string line;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (lineno == 1) {
      if (line != "row,col,value" && line != "row,col") {
        throw ParseError("positions CSV must start with a row,col[,value] header", 0);
      }
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f0, f1, f2;
    if (!std::getline(ls, f0, ',') || !std::getline(ls, f1, ',')) {
      throw ParseError("positions CSV line " + std::to_string(lineno) + " is malformed",
                       line_start);
    }
    std::getline(ls, f2, ',');
    Sample s;
    try {
      s.row = std::stoi(f0);
      s.col = std::stoi(f1);
      s.value = f2.empty() ? 0.0 : std::stod(f2);
    } catch (const std::exception&) {
      throw ParseError("positions CSV line " + std::to_string(lineno) + " is malformed",
                       line_start);
    }
    if (s.row < 0 || s.row >= ny || s.col < 0 || s.col >= nx) {
      throw ParseError("positions CSV line " + std::to_string(lineno) + " is out of range",
                       line_start);
    }
    out.samples.push_back(s);
  }
  detail::require(!out.samples.empty(), "positions CSV contains no samples");
  std::set<std::pair<int, int>> seen;
  for (const Sample& s : out.samples) {
    detail::require(seen.insert({s.row, s.col}).second, "positions CSV contains duplicates");
  }
  return out;
}

void write_report_csv(const ReconstructionReport& report, const std::string& path) {
  std::ofstream out = open_text(path);
  out << "iteration,residual,rmse,trimmed90\n";
  const bool with_truth = !report.rmse_vs_truth.empty();
  for (int i = 0; i < report.iterations_run; ++i) {
    out << (i + 1) << "," << format_real(report.residual[i]) << ",";
    if (with_truth) {
      out << format_real(report.rmse_vs_truth[i]) << ","
          << format_real(report.rmse_trimmed90[i]);
    } else {
      out << ",";
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_redundancy_csv(const RedundancyTable& table, const std::string& path) {
  std::ofstream out = open_text(path);
  out << "sparsity,freq,M,trials,failures,failure_rate,redundancy\n";
  for (const RedundancyRow& r : table.rows) {
    out << format_real(r.sparsity) << "," << format_real(r.frequency_fraction) << "," << r.m
        << "," << r.trials << "," << r.failures << "," << format_real(r.failure_rate) << ","
        << format_real(r.redundancy) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_series_csv(const std::vector<double>& values, const std::string& name,
                      const std::string& path) {
  std::ofstream out = open_text(path);
  out << "index," << name << "\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << i << "," << format_real(values[i]) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_series_svg(const std::vector<std::vector<double>>& series,
                      const std::vector<std::string>& labels, const std::string& path) {
  detail::require(series.size() == labels.size(), "one label per series required");
  const int w = 640, h = 400, margin = 40;

  double lo = 0.0, hi = 1.0;
  bool first = true;
  bool all_positive = true;
  std::size_t max_len = 1;
  for (const auto& s : series) {
    max_len = std::max(max_len, s.size());
    for (double v : s) {
      if (!std::isfinite(v)) continue;
      if (v <= 0.0) all_positive = false;
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  if (first) {
    lo = 0.0;
    hi = 1.0;
  }
  auto tf = [&](double v) { return all_positive ? std::log10(v) : v; };
  double tlo = tf(lo), thi = tf(hi);
  if (thi - tlo < 1e-12) thi = tlo + 1.0;

  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::ofstream out = open_text(path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << (w - 2 * margin)
      << "\" height=\"" << (h - 2 * margin)
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    if (s.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << kColors[si % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isfinite(s[i])) continue;
      const double fx = max_len > 1 ? static_cast<double>(i) / (max_len - 1) : 0.5;
      const double fy = (tf(s[i]) - tlo) / (thi - tlo);
      const double px = margin + fx * (w - 2 * margin);
      const double py = h - margin - fy * (h - 2 * margin);
      out << format_real(px) << "," << format_real(py) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << (margin + 8) << "\" y=\"" << (margin + 16 + 16 * si)
        << "\" font-family=\"monospace\" font-size=\"12\" fill=\"" << kColors[si % 4] << "\">"
        << labels[si] << (all_positive ? " (log10)" : "") << "</text>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace asbsr
