#pragma once

// Emergency-traffic timelines: busy-hour voice sessions and the DMAT
// activation schedule behind the video demand.

#include <cmath>
#include <vector>

#include "atn/errors.hpp"

namespace atn {

// Busy-hour concurrent voice sessions, one entry per scenario day. The entry
// is the day's conservative demand value; no intra-day curve is modeled.
struct VoiceDemandTimeline {
  std::vector<int> sessions_per_day;

  friend bool operator==(const VoiceDemandTimeline&, const VoiceDemandTimeline&) = default;
};

// Active medical teams per day. Deployed teams stay operational for the rest
// of the horizon, so the series must be monotone non-decreasing. Each team
// keeps two physicians on shift, hence two concurrent video streams.
struct DmatSchedule {
  std::vector<int> active_per_day;
  int streams_per_dmat = 2;

  friend bool operator==(const DmatSchedule&, const DmatSchedule&) = default;
};

inline int video_sessions(int active_dmats, int streams_per_dmat) {
  if (active_dmats < 0 || streams_per_dmat < 0)
    throw ValidationError("video_sessions: counts must be >= 0");
  return active_dmats * streams_per_dmat;
}

// Default activation ramp: 9 teams on day 1, rising linearly (round half up)
// to 45 on day 15, flat afterwards. The linear shape is the
// minimal-assumption choice; scenarios may override the schedule entirely.
inline DmatSchedule default_dmat_ramp(int horizon_days) {
  if (horizon_days < 15)
    throw ValidationError("default_dmat_ramp: horizon must be >= 15 days");
  DmatSchedule schedule;
  schedule.active_per_day.reserve(static_cast<std::size_t>(horizon_days));
  for (int day = 1; day <= horizon_days; ++day) {
    if (day >= 15) {
      schedule.active_per_day.push_back(45);
      continue;
    }
    const double teams = 9.0 + 36.0 * (day - 1) / 14.0;
    schedule.active_per_day.push_back(static_cast<int>(std::floor(teams + 0.5)));
  }
  return schedule;
}

// Synthetic 20-day busy-hour voice series for the bundled hurricane scenario.
// Only the day-15 peak of 475 sessions is a source figure; the other days are
// synthetic values chosen so that days 16 and 18 also need 7 voice LAPs while
// every remaining day needs fewer (see the bundled scenario file).
inline std::vector<int> katrina_voice_sessions() {
  return {90,  130, 170, 210, 250, 290, 320, 350, 380, 400,
          420, 440, 455, 465, 475, 472, 430, 470, 390, 340};
}

}  // namespace atn
