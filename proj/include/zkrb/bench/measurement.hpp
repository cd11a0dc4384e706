// Copyright 2026 The zkrb Authors.
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

#ifndef ZKRB_BENCH_MEASUREMENT_HPP_
#define ZKRB_BENCH_MEASUREMENT_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zkrb/common/error.hpp"

namespace zkrb::bench {

enum class Scenario { kTau, kCompile, kKeygen, kProveBatch, kProveWithdraw, kVerify, kCost };

inline constexpr Scenario kAllScenarios[] = {Scenario::kTau,        Scenario::kCompile,
                                             Scenario::kKeygen,     Scenario::kProveBatch,
                                             Scenario::kProveWithdraw, Scenario::kVerify,
                                             Scenario::kCost};

inline std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kTau: return "tau";
    case Scenario::kCompile: return "compile";
    case Scenario::kKeygen: return "keygen";
    case Scenario::kProveBatch: return "prove_batch";
    case Scenario::kProveWithdraw: return "prove_withdraw";
    case Scenario::kVerify: return "verify";
    case Scenario::kCost: return "cost";
  }
  return "unknown";
}

inline Scenario scenario_from_name(std::string_view name) {
  for (Scenario s : kAllScenarios) {
    if (scenario_name(s) == name) return s;
  }
  throw UsageError("unknown scenario '" + std::string(name) + "'");
}

using AuxValue = std::variant<std::int64_t, std::string>;

inline std::string aux_text(const AuxValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

struct Measurement {
  Scenario scenario = Scenario::kTau;
  std::int64_t parameter = 0;
  int repetition = 0;
  /// Exact elapsed time; reports carry it rounded to whole milliseconds.
  std::chrono::nanoseconds elapsed{};
  std::map<std::string, AuxValue> aux;

  std::int64_t wall_time_ms() const {
    return static_cast<std::int64_t>(std::llround(static_cast<double>(elapsed.count()) / 1e6));
  }
  double elapsed_ms() const { return static_cast<double>(elapsed.count()) / 1e6; }
};

/// Median elapsed milliseconds per parameter for one scenario. Records
/// carrying an aux "status" other than "ok" are ignored.
inline std::map<std::int64_t, double> medians(const std::vector<Measurement>& ms, Scenario s) {
  std::map<std::int64_t, std::vector<double>> by;
  for (const auto& m : ms) {
    if (m.scenario != s) continue;
    if (auto it = m.aux.find("status"); it != m.aux.end() && aux_text(it->second) != "ok") continue;
    by[m.parameter].push_back(m.elapsed_ms());
  }
  std::map<std::int64_t, double> out;
  for (auto& [p, v] : by) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    out[p] = n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
  }
  return out;
}

enum class ReportFormat { kCsv, kJson, kSvg };

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f.flush()) throw IoError("write error on " + path.string());
}

inline void require_nonempty(const std::vector<Measurement>& ms) {
  if (ms.empty()) throw UsageError("no measurements to report");
}

}  // namespace detail

/// One row per aux key plus a "time" row per measurement.
inline std::string report_csv(const std::vector<Measurement>& ms) {
  detail::require_nonempty(ms);
  std::string out = "scenario,parameter,repetition,wall_time_ms,key,value\n";
  for (const auto& m : ms) {
    const std::string prefix = std::string(scenario_name(m.scenario)) + "," +
                               std::to_string(m.parameter) + "," + std::to_string(m.repetition) +
                               "," + std::to_string(m.wall_time_ms()) + ",";
    out += prefix + "time," + std::to_string(m.wall_time_ms()) + "\n";
    for (const auto& [k, v] : m.aux) {
      out += prefix + detail::csv_field(k) + "," + detail::csv_field(aux_text(v)) + "\n";
    }
  }
  return out;
}

inline std::string report_json(const std::vector<Measurement>& ms) {
  detail::require_nonempty(ms);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : ms) {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_name(m.scenario);
    j["parameter"] = m.parameter;
    j["repetition"] = m.repetition;
    j["wall_time_ms"] = m.wall_time_ms();
    nlohmann::ordered_json aux = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.aux) {
      if (const auto* i = std::get_if<std::int64_t>(&v)) aux[k] = *i;
      else aux[k] = std::get<std::string>(v);
    }
    j["aux"] = std::move(aux);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

/// Static line chart of the median time per parameter.
inline std::string report_svg(const std::vector<Measurement>& ms, Scenario s) {
  constexpr double kW = 480, kH = 320, kL = 70, kR = 20, kT = 40, kB = 50;
  auto med = medians(ms, s);
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(1);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">"
    << scenario_name(s) << ": median wall time (ms)</text>\n";
  o << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR << "\" y2=\""
    << kH - kB << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kH - kB
    << "\" stroke=\"black\"/>\n";
  if (!med.empty()) {
    double ymax = 0;
    for (const auto& [p, v] : med) ymax = std::max(ymax, v);
    if (ymax <= 0) ymax = 1;
    const std::size_t n = med.size();
    auto x_at = [&](std::size_t i) {
      return n == 1 ? (kL + kW - kR) / 2 : kL + (kW - kL - kR) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto y_at = [&](double v) { return kH - kB - (kH - kT - kB) * v / ymax; };
    o << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    std::size_t i = 0;
    for (const auto& [p, v] : med) o << (i ? " " : "") << x_at(i++) << "," << y_at(v);
    o << "\"/>\n";
    i = 0;
    for (const auto& [p, v] : med) {
      const double x = x_at(i++);
      o << "<circle cx=\"" << x << "\" cy=\"" << y_at(v) << "\" r=\"3\" fill=\"steelblue\"/>\n";
      o << "<text x=\"" << x << "\" y=\"" << kH - kB + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << p
        << "</text>\n";
      o << "<text x=\"" << x << "\" y=\"" << y_at(v) - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << v
        << "</text>\n";
    }
  }
  o << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 12
    << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">parameter</text>\n";
  o << "</svg>\n";
  return o.str();
}

/// Writes report.csv, report.json or one <scenario>.svg per scenario present
/// into dir. Returns the written paths.
inline std::vector<std::filesystem::path> emit_report(const std::vector<Measurement>& ms,
                                                      ReportFormat format,
                                                      const std::filesystem::path& dir) {
  detail::require_nonempty(ms);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> out;
  switch (format) {
    case ReportFormat::kCsv:
      out.push_back(dir / "report.csv");
      detail::write_text(out.back(), report_csv(ms));
      break;
    case ReportFormat::kJson:
      out.push_back(dir / "report.json");
      detail::write_text(out.back(), report_json(ms));
      break;
    case ReportFormat::kSvg: {
      std::set<Scenario> present;
      for (const auto& m : ms) present.insert(m.scenario);
      for (Scenario s : present) {
        out.push_back(dir / (std::string(scenario_name(s)) + ".svg"));
        detail::write_text(out.back(), report_svg(ms, s));
      }
      break;
    }
  }
  return out;
}

}  // namespace zkrb::bench

#endif  // ZKRB_BENCH_MEASUREMENT_HPP_
