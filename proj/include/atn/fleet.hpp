#pragma once

// Minimum-LAP fleet sizing per day, under dedicated (one traffic type per
// platform) and shared (mixed-load) allocation.

#include <vector>

#include "atn/capacity.hpp"
#include "atn/demand.hpp"
#include "atn/errors.hpp"
#include "atn/scenario.hpp"

namespace atn {

struct FleetDay {
  int day = 0;  // 1-based
  int voice_sessions = 0;
  int video_sessions = 0;
  int laps_voice = 0;
  int laps_video = 0;
  int laps_dedicated_total = 0;
  int laps_shared_total = 0;

  friend bool operator==(const FleetDay&, const FleetDay&) = default;
};

struct FleetPlan {
  std::vector<FleetDay> days;

  friend bool operator==(const FleetPlan&, const FleetPlan&) = default;
};

struct FleetSummary {
  int max_dedicated = 0;
  std::vector<int> dedicated_days;  // ascending
  int max_shared = 0;
  std::vector<int> shared_days;  // ascending
};

// Platforms needed to carry `sessions` concurrent sessions of one type.
inline int laps_for_type(int sessions, int sessions_max) {
  if (sessions < 0) throw ValidationError("laps_for_type: sessions must be >= 0");
  if (sessions_max < 1) throw ValidationError("laps_for_type: sessions_max must be >= 1");
  return (sessions + sessions_max - 1) / sessions_max;
}

// First-fit-decreasing packing of the mixed load into unit platforms. The
// heavier per-session media goes first; each session lands on the lowest
// numbered platform it fits on, so the result is deterministic. Per-platform
// session counts stay integral and the admission check is fits_on_platform,
// which keeps the packing exact at the unit boundary.
inline int shared_fleet_size(int voice_n, int video_n, const PlatformCapacity& cap) {
  if (voice_n < 0 || video_n < 0)
    throw ValidationError("shared_fleet_size: session counts must be >= 0");
  struct Bin {
    int voice = 0;
    int video = 0;
  };
  std::vector<Bin> bins;
  const auto place = [&bins, &cap](Media media) {
    for (Bin& bin : bins) {
      const int nv = bin.voice + (media == Media::Voice ? 1 : 0);
      const int nw = bin.video + (media == Media::Video ? 1 : 0);
      if (fits_on_platform(nv, nw, cap)) {
        bin.voice = nv;
        bin.video = nw;
        return;
      }
    }
    bins.push_back(media == Media::Voice ? Bin{1, 0} : Bin{0, 1});
  };
  const bool video_first = cap.video_sessions_max <= cap.voice_sessions_max;
  const Media first = video_first ? Media::Video : Media::Voice;
  const Media second = video_first ? Media::Voice : Media::Video;
  const int first_n = video_first ? video_n : voice_n;
  const int second_n = video_first ? voice_n : video_n;
  for (int i = 0; i < first_n; ++i) place(first);
  for (int i = 0; i < second_n; ++i) place(second);
  return static_cast<int>(bins.size());
}

inline FleetDay fleet_day(int day, int voice_sessions, int video_sessions,
                          const PlatformCapacity& cap) {
  FleetDay record;
  record.day = day;
  record.voice_sessions = voice_sessions;
  record.video_sessions = video_sessions;
  record.laps_voice = laps_for_type(voice_sessions, cap.voice_sessions_max);
  record.laps_video = laps_for_type(video_sessions, cap.video_sessions_max);
  record.laps_dedicated_total = record.laps_voice + record.laps_video;
  record.laps_shared_total = shared_fleet_size(voice_sessions, video_sessions, cap);
  return record;
}

inline FleetPlan build_fleet_plan(const Scenario& sc) {
  FleetPlan plan;
  plan.days.reserve(static_cast<std::size_t>(sc.horizon_days));
  for (int day = 1; day <= sc.horizon_days; ++day) {
    const std::size_t i = static_cast<std::size_t>(day - 1);
    const int voice = sc.voice_timeline.sessions_per_day[i];
    const int video = video_sessions(sc.dmat_schedule.active_per_day[i],
                                     sc.dmat_schedule.streams_per_dmat);
    plan.days.push_back(fleet_day(day, voice, video, sc.platform_capacity));
  }
  return plan;
}

inline FleetSummary summarize_fleet(const FleetPlan& plan) {
  if (plan.days.empty()) throw ValidationError("summarize_fleet: empty plan");
  FleetSummary summary;
  for (const FleetDay& day : plan.days) {
    summary.max_dedicated = std::max(summary.max_dedicated, day.laps_dedicated_total);
    summary.max_shared = std::max(summary.max_shared, day.laps_shared_total);
  }
  for (const FleetDay& day : plan.days) {
    if (day.laps_dedicated_total == summary.max_dedicated)
      summary.dedicated_days.push_back(day.day);
    if (day.laps_shared_total == summary.max_shared) summary.shared_days.push_back(day.day);
  }
  return summary;
}

}  // namespace atn
