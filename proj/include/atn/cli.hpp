#pragma once

// Command-line front end: validate scenarios, emit fleet plans, run
// simulations and check the headline reproduction figures.
//
// Exit codes: 0 success, 1 validation/check failure, 2 I/O failure.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atn/fleet.hpp"
#include "atn/report.hpp"
#include "atn/scenario.hpp"
#include "atn/sim.hpp"

namespace atn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIo = 2;

inline std::string join_days(const std::vector<int>& days) {
  std::string text;
  for (std::size_t i = 0; i < days.size(); ++i) {
    if (i > 0) text += ", ";
    text += std::to_string(days[i]);
  }
  return text;
}

inline int cmd_validate(const std::string& path, std::ostream& out = std::cout,
                        std::ostream& err = std::cerr) {
  try {
    const Scenario sc = load_scenario(path);
    out << "scenario '" << sc.name << "' is valid\n";
    out << "  horizon: " << sc.horizon_days << " days, disaster area: "
        << format_double(sc.disaster_area_km2) << " km2\n";
    out << "  platform capacity: " << format_double(sc.platform_capacity.achievable_throughput_mbps)
        << " Mb/s, " << sc.platform_capacity.voice_sessions_max << " voice / "
        << sc.platform_capacity.video_sessions_max << " video sessions\n";
    out << "  voice codec " << sc.voice_codec.name << ": "
        << format_double(sc.voice_codec.bit_rate_kbps) << " kb/s -> "
        << format_double(ip_packet_rate(sc.voice_codec))
        << " kb/s per direction at the network layer (MOS "
        << format_double(sc.voice_codec.mos) << ")\n";
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "invalid scenario: " << e.what() << '\n';
    return kExitFailure;
  }
}

inline int cmd_plan(const std::string& path, const std::string& outdir,
                    std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    const Scenario sc = load_scenario(path);
    const FleetPlan plan = build_fleet_plan(sc);
    const FleetSummary summary = summarize_fleet(plan);
    out << "max dedicated LAPs: " << summary.max_dedicated << " (days "
        << join_days(summary.dedicated_days) << ")\n";
    out << "max shared LAPs: " << summary.max_shared << " (days "
        << join_days(summary.shared_days) << ")\n";
    const std::filesystem::path csv = std::filesystem::path(outdir) / "fleet_plan.csv";
    write_file(csv, fleet_plan_csv(plan));
    out << "wrote " << csv.string() << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "invalid scenario: " << e.what() << '\n';
    return kExitFailure;
  }
}

inline int cmd_simulate(const std::string& path, const std::string& mode_name,
                        std::optional<std::uint64_t> seed_override, const std::string& outdir,
                        std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    Scenario sc = load_scenario(path);
    if (seed_override) sc.seed = *seed_override;
    const SimMode mode = mode_name == "geometric" ? SimMode::Geometric : SimMode::Ideal;
    const SimReport report = run(sc, mode);
    const FleetPlan plan = build_fleet_plan(sc);

    out << "mode: " << mode_name << ", seed: " << sc.seed << '\n';
    out << "max LAPs deployed: " << report.summary.max_laps << " (days "
        << join_days(report.summary.max_lap_days) << ")\n";
    out << "peak voice demand: " << report.summary.peak_voice << " (days "
        << join_days(report.summary.peak_voice_days) << ")\n";
    out << "peak video demand: " << report.summary.peak_video << " (days "
        << join_days(report.summary.peak_video_days) << ")\n";

    const std::filesystem::path dir(outdir);
    write_file(dir / "sim_report.csv", sim_report_csv(report));
    write_file(dir / "fig4_series.csv", fig4_series_csv(plan));
    write_file(dir / "fig5_series.csv", fig5_series_csv(sc, plan));
    out << "wrote " << (dir / "sim_report.csv").string() << ", "
        << (dir / "fig4_series.csv").string() << ", " << (dir / "fig5_series.csv").string()
        << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "invalid scenario: " << e.what() << '\n';
    return kExitFailure;
  }
}

// The four headline figures the bundled scenario must reproduce: 7 LAPs at
// the 475-session voice peak, 12 LAPs aggregate in both allocation modes,
// 568.68 km2 of covered area, and a coverage ratio below 0.25%.
inline int cmd_reproduce(const std::string& path, std::ostream& out = std::cout,
                         std::ostream& err = std::cerr) {
  try {
    const Scenario sc = load_scenario(path);
    const FleetPlan plan = build_fleet_plan(sc);
    const FleetSummary summary = summarize_fleet(plan);

    int peak_voice = 0;
    const FleetDay* peak_day = nullptr;
    for (const FleetDay& day : plan.days) {
      if (day.voice_sessions > peak_voice) {
        peak_voice = day.voice_sessions;
        peak_day = &day;
      }
    }

    int passed = 0;
    const auto check = [&](bool ok, const std::string& label) {
      out << (ok ? "[PASS] " : "[FAIL] ") << label << '\n';
      if (ok) ++passed;
    };

    const bool voice_ok = peak_day && peak_day->voice_sessions == 475 && peak_day->laps_voice == 7;
    check(voice_ok, "voice fleet: peak " + std::to_string(peak_voice) + " sessions -> " +
                        std::to_string(peak_day ? peak_day->laps_voice : 0) +
                        " LAPs (expected 475 -> 7)");

    const bool aggregate_ok = summary.max_dedicated == 12 && summary.max_shared == 12;
    check(aggregate_ok, "aggregate fleet: max " + std::to_string(summary.max_dedicated) +
                            " dedicated / " + std::to_string(summary.max_shared) +
                            " shared LAPs (expected 12 / 12)");

    const double covered_km2 = summary.max_shared * sc.lap_footprint_area_km2;
    const bool area_ok = std::abs(covered_km2 - 568.68) <= 1e-9;
    check(area_ok, "covered area: " + format_fixed(covered_km2, 2) + " km2 (expected 568.68)");

    const double ratio =
        coverage_ratio(summary.max_shared, sc.lap_footprint_area_km2, sc.disaster_area_km2);
    const bool ratio_ok = ratio < 0.0025;
    check(ratio_ok, "coverage ratio: " + format_fixed(ratio * 100.0, 4) + "% of " +
                        format_double(sc.disaster_area_km2) + " km2 (expected < 0.25%)");

    out << passed << "/4 checks passed\n";
    return passed == 4 ? kExitOk : kExitFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "invalid scenario: " << e.what() << '\n';
    return kExitFailure;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Aerial telecommunications network planner and simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string outdir = "out";
  std::string mode_name = "ideal";
  std::uint64_t seed_value = 0;

  auto* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("scenario", scenario_path, "scenario file")->required();

  auto* plan = app.add_subcommand("plan", "emit the per-day fleet plan");
  plan->add_option("scenario", scenario_path, "scenario file")->required();
  plan->add_option("--outdir", outdir, "output directory")->envname("ATNSIM_OUTDIR");

  auto* simulate = app.add_subcommand("simulate", "run the daily-step simulation");
  simulate->add_option("scenario", scenario_path, "scenario file")->required();
  simulate->add_option("--mode", mode_name, "ideal | geometric")
      ->check(CLI::IsMember({"ideal", "geometric"}));
  auto* seed_opt = simulate->add_option("--seed", seed_value, "override the scenario seed");
  simulate->add_option("--outdir", outdir, "output directory")->envname("ATNSIM_OUTDIR");

  auto* reproduce = app.add_subcommand("reproduce", "check the headline reproduction figures");
  reproduce->add_option("scenario", scenario_path, "scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFailure;
  }

  if (validate->parsed()) return cmd_validate(scenario_path, out, err);
  if (plan->parsed()) return cmd_plan(scenario_path, outdir, out, err);
  if (simulate->parsed()) {
    std::optional<std::uint64_t> seed;
    if (seed_opt->count() > 0) seed = seed_value;
    return cmd_simulate(scenario_path, mode_name, seed, outdir, out, err);
  }
  if (reproduce->parsed()) return cmd_reproduce(scenario_path, out, err);
  return kExitFailure;
}

}  // namespace atn::cli
