#pragma once

// Deterministic daily-step orchestrator. Every day: derive the demand, size
// and place the fleet, inject the scripted link troubles, run the
// controlled-mobility engine and record served/blocked sessions plus
// coverage. Identical (scenario, mode, seed) inputs give bit-identical
// reports.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "atn/fleet.hpp"
#include "atn/geometry.hpp"
#include "atn/mobility.hpp"
#include "atn/rng.hpp"
#include "atn/scenario.hpp"
#include "atn/topology.hpp"

namespace atn {

// IDEAL reproduces the source estimation: traffic is ideally shared on the
// platforms and geography is ignored. GEOMETRIC is this artifact's
// extension: demand is pinned to synthetic map locations and sessions are
// only served by a covering footprint.
enum class SimMode { Ideal, Geometric };

struct SimDay {
  int day = 0;  // 1-based
  int voice_demand = 0;
  int video_demand = 0;
  int laps_deployed = 0;
  int laps_relaying = 0;
  int served_voice = 0;
  int served_video = 0;
  int blocked_voice = 0;
  int blocked_video = 0;
  double coverage_ratio = 0.0;
  int unserved_troubles = 0;  // troubles still unmet after placement and relief

  int sessions_blocked() const { return blocked_voice + blocked_video; }

  friend bool operator==(const SimDay&, const SimDay&) = default;
};

struct SimSummary {
  int max_laps = 0;
  std::vector<int> max_lap_days;  // ascending
  int peak_voice = 0;
  std::vector<int> peak_voice_days;
  int peak_video = 0;
  std::vector<int> peak_video_days;

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

struct SimReport {
  SimMode mode = SimMode::Ideal;
  std::vector<SimDay> days;
  SimSummary summary;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

inline SimSummary summarize(const SimReport& report) {
  if (report.days.empty()) throw ValidationError("summarize: empty report");
  SimSummary summary;
  for (const SimDay& day : report.days) {
    summary.max_laps = std::max(summary.max_laps, day.laps_deployed);
    summary.peak_voice = std::max(summary.peak_voice, day.voice_demand);
    summary.peak_video = std::max(summary.peak_video, day.video_demand);
  }
  for (const SimDay& day : report.days) {
    if (day.laps_deployed == summary.max_laps) summary.max_lap_days.push_back(day.day);
    if (day.voice_demand == summary.peak_voice) summary.peak_voice_days.push_back(day.day);
    if (day.video_demand == summary.peak_video) summary.peak_video_days.push_back(day.day);
  }
  return summary;
}

namespace detail {

struct DemandSite {
  GeoPoint position;
  int voice = 0;
  int video = 0;
};

// Largest-remainder apportionment of `total` across the weights; ties go to
// the lowest index.
inline std::vector<int> apportion(int total, const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  std::vector<int> out(n, 0);
  if (total <= 0 || n == 0) return out;
  double sum = 0.0;
  for (double w : weights) sum += w;
  std::vector<double> share(n);
  for (std::size_t i = 0; i < n; ++i)
    share[i] = sum > 0.0 ? total * weights[i] / sum : static_cast<double>(total) / n;
  int assigned = 0;
  std::vector<std::pair<double, std::size_t>> fraction;
  fraction.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<int>(std::floor(share[i]));
    assigned += out[i];
    fraction.emplace_back(share[i] - out[i], i);
  }
  std::sort(fraction.begin(), fraction.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  for (int k = 0; k < total - assigned; ++k) ++out[fraction[static_cast<std::size_t>(k) % n].second];
  return out;
}

// Demand sites for one day. Draw order is part of the output contract: per
// site x, y, voice weight, video weight (four draws), sites in index order.
inline std::vector<DemandSite> synth_sites(Lcg64& rng, int count, double side_km,
                                           int voice_total, int video_total) {
  std::vector<DemandSite> sites(static_cast<std::size_t>(count));
  std::vector<double> voice_w(sites.size()), video_w(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    sites[i].position.x_km = rng.next_unit() * side_km;
    sites[i].position.y_km = rng.next_unit() * side_km;
    voice_w[i] = rng.next_unit();
    video_w[i] = rng.next_unit();
  }
  const std::vector<int> voices = apportion(voice_total, voice_w);
  const std::vector<int> videos = apportion(video_total, video_w);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    sites[i].voice = voices[i];
    sites[i].video = videos[i];
  }
  return sites;
}

struct GeometricDay {
  int laps = 0;
  int served_voice = 0;
  int served_video = 0;
};

// Greedy placement: repeatedly center a footprint on the site with the most
// unserved sessions (tie: lowest site index) and admit sessions from covered
// sites in ascending distance, video first. A fresh platform always admits
// at least one session from its own site, so the loop terminates; with a
// max_laps cap the leftover demand stays blocked.
inline GeometricDay place_geometric_day(std::vector<DemandSite> sites,
                                        double footprint_radius_km,
                                        const PlatformCapacity& cap, int max_laps) {
  GeometricDay result;
  struct DeployedLap {
    int voice = 0;
    int video = 0;
  };
  int deployed = 0;
  while (true) {
    int best = -1, best_total = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const int total = sites[i].voice + sites[i].video;
      if (total > best_total) {
        best = static_cast<int>(i);
        best_total = total;
      }
    }
    if (best < 0) break;
    if (max_laps > 0 && deployed >= max_laps) break;

    const GeoPoint center = sites[static_cast<std::size_t>(best)].position;
    std::vector<std::size_t> order(sites.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const double dx = distance(sites[x].position, center);
      const double dy = distance(sites[y].position, center);
      if (dx != dy) return dx < dy;
      return x < y;
    });

    DeployedLap lap;
    for (std::size_t idx : order) {
      if (distance(sites[idx].position, center) > footprint_radius_km) break;
      while (sites[idx].video > 0 && fits_on_platform(lap.voice, lap.video + 1, cap)) {
        ++lap.video;
        --sites[idx].video;
        ++result.served_video;
      }
      while (sites[idx].voice > 0 && fits_on_platform(lap.voice + 1, lap.video, cap)) {
        ++lap.voice;
        --sites[idx].voice;
        ++result.served_voice;
      }
    }
    ++deployed;
  }
  result.laps = deployed;
  return result;
}

struct MobilityDay {
  int relaying = 0;
  int unserved = 0;
};

// One controlled-mobility step: script the day's failures and offered loads,
// detect troubles on the raw loads (so a trouble served by a live chain is
// not mistaken for a resolved one), maintain the pool, then measure what the
// arrived chains actually relieve.
inline MobilityDay run_mobility_day(const Scenario& sc, const AtnGraph& base,
                                    RelayPool& pool, int day) {
  AtnGraph graph = base;
  for (const TroubleScriptEntry& entry : sc.troubles) {
    if (day < entry.first_day || day > entry.last_day) continue;
    AtnLink* link = graph.find_link(entry.a, entry.b);
    if (!link) continue;  // validated at load time
    link->offered_load_mbps = entry.offered_load_mbps;
    if (entry.kind == TroubleKind::Failure) link->down = true;
  }
  const double now_hours = 24.0 * (day - 1);
  const std::vector<LinkTrouble> raw = detect_troubles(graph);
  AssignResult outcome = assign_relays(raw, std::move(pool), graph, now_hours);
  pool = std::move(outcome.pool);
  const AtnGraph placed = apply_placement(graph, outcome.assignments, now_hours);
  const AtnGraph relieved = reroute_over_chains(placed, outcome.assignments, now_hours);
  const std::vector<LinkTrouble> remaining = detect_troubles(relieved);
  return {pool.assigned_count(), static_cast<int>(remaining.size())};
}

}  // namespace detail

inline SimReport run(const Scenario& sc, SimMode mode) {
  SimReport report;
  report.mode = mode;
  const FleetPlan plan = build_fleet_plan(sc);
  const AtnGraph base = build_graph(sc.platforms, sc.range_rules);
  RelayPool pool = sc.relay_pool;
  Lcg64 rng(sc.seed);
  const double region_side_km = std::sqrt(sc.disaster_area_km2);
  const double footprint_radius_km = radius_from_area(sc.lap_footprint_area_km2);

  report.days.reserve(plan.days.size());
  for (const FleetDay& fleet : plan.days) {
    SimDay record;
    record.day = fleet.day;
    record.voice_demand = fleet.voice_sessions;
    record.video_demand = fleet.video_sessions;

    if (mode == SimMode::Ideal) {
      // Ideally shared traffic: the fleet is exactly the shared packing and
      // every session is served by construction.
      record.laps_deployed = fleet.laps_shared_total;
      record.served_voice = fleet.voice_sessions;
      record.served_video = fleet.video_sessions;
    } else {
      const std::vector<detail::DemandSite> sites = detail::synth_sites(
          rng, sc.geometric.sites_per_day, region_side_km, fleet.voice_sessions,
          fleet.video_sessions);
      const detail::GeometricDay placed = detail::place_geometric_day(
          sites, footprint_radius_km, sc.platform_capacity, sc.geometric.max_laps);
      record.laps_deployed = placed.laps;
      record.served_voice = placed.served_voice;
      record.served_video = placed.served_video;
      record.blocked_voice = fleet.voice_sessions - placed.served_voice;
      record.blocked_video = fleet.video_sessions - placed.served_video;
    }

    // Zero-overlap idealization, clamped to a reportable fraction.
    record.coverage_ratio =
        record.laps_deployed == 0
            ? 0.0
            : std::min(1.0, coverage_ratio(record.laps_deployed, sc.lap_footprint_area_km2,
                                           sc.disaster_area_km2));

    const detail::MobilityDay mobility = detail::run_mobility_day(sc, base, pool, record.day);
    record.laps_relaying = mobility.relaying;
    record.unserved_troubles = mobility.unserved;

    report.days.push_back(record);
  }
  report.summary = summarize(report);
  return report;
}

}  // namespace atn
