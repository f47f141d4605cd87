#pragma once

// CSV and plot-data emission. Dialect: comma separator, one header row, LF
// line endings, '.' decimal separator. Doubles print as their shortest
// round-trip form, so identical inputs give byte-identical files.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>

#include "atn/errors.hpp"
#include "atn/fleet.hpp"
#include "atn/scenario.hpp"
#include "atn/sim.hpp"

namespace atn {

inline std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

// Fixed-point rendering for human-facing summaries.
inline std::string format_fixed(double value, int decimals) {
  char buffer[64];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::fixed, decimals);
  return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

inline std::string fleet_plan_csv(const FleetPlan& plan) {
  std::string csv =
      "day,voice_sessions,video_sessions,laps_voice,laps_video,"
      "laps_dedicated_total,laps_shared_total\n";
  for (const FleetDay& d : plan.days) {
    csv += std::to_string(d.day) + ',' + std::to_string(d.voice_sessions) + ',' +
           std::to_string(d.video_sessions) + ',' + std::to_string(d.laps_voice) + ',' +
           std::to_string(d.laps_video) + ',' + std::to_string(d.laps_dedicated_total) + ',' +
           std::to_string(d.laps_shared_total) + '\n';
  }
  return csv;
}

inline std::string sim_report_csv(const SimReport& report) {
  std::string csv =
      "day,voice_demand,video_demand,laps_deployed,laps_relaying,"
      "sessions_served_voice,sessions_served_video,sessions_blocked,"
      "coverage_ratio,unserved_troubles\n";
  for (const SimDay& d : report.days) {
    csv += std::to_string(d.day) + ',' + std::to_string(d.voice_demand) + ',' +
           std::to_string(d.video_demand) + ',' + std::to_string(d.laps_deployed) + ',' +
           std::to_string(d.laps_relaying) + ',' + std::to_string(d.served_voice) + ',' +
           std::to_string(d.served_video) + ',' + std::to_string(d.sessions_blocked()) + ',' +
           format_double(d.coverage_ratio) + ',' + std::to_string(d.unserved_troubles) + '\n';
  }
  return csv;
}

// Daily voice traffic and the LAPs required to carry it.
inline std::string fig4_series_csv(const FleetPlan& plan) {
  std::string csv = "day,voice traffic,required LAPs\n";
  for (const FleetDay& d : plan.days)
    csv += std::to_string(d.day) + ',' + std::to_string(d.voice_sessions) + ',' +
           std::to_string(d.laps_voice) + '\n';
  return csv;
}

// Active DMATs and the LAPs required for their video streams.
inline std::string fig5_series_csv(const Scenario& sc, const FleetPlan& plan) {
  std::string csv = "day,active DMATs,required LAPs\n";
  for (const FleetDay& d : plan.days) {
    const int dmats = sc.dmat_schedule.active_per_day[static_cast<std::size_t>(d.day - 1)];
    csv += std::to_string(d.day) + ',' + std::to_string(dmats) + ',' +
           std::to_string(d.laps_video) + '\n';
  }
  return csv;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace atn
