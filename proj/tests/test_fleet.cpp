#include <catch2/catch_amalgamated.hpp>

#include <climits>
#include <cmath>
#include <random>
#include <vector>

#include "atn/fleet.hpp"
#include "atn/scenario.hpp"

using namespace atn;

namespace {

const PlatformCapacity kLapCap{54.0, 78, 18};

// Exact bin-packing oracle, independent of the FFD path: dynamic program
// over (voice, video) still to pack, enumerating every feasible single-bin
// content. Feasibility in exact integer arithmetic:
//   a / voice_max + b / video_max <= 1  <=>  a * video_max + b * voice_max
//                                            <= voice_max * video_max.
int exact_min_bins(int voice_n, int video_n, const PlatformCapacity& cap) {
  const long long vmax = cap.voice_sessions_max;
  const long long wmax = cap.video_sessions_max;
  const long long unit = vmax * wmax;
  std::vector<std::vector<int>> best(static_cast<std::size_t>(voice_n) + 1,
                                     std::vector<int>(static_cast<std::size_t>(video_n) + 1,
                                                      INT_MAX));
  best[0][0] = 0;
  for (int v = 0; v <= voice_n; ++v) {
    for (int w = 0; w <= video_n; ++w) {
      const int here = best[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
      if (here == INT_MAX) continue;
      for (int a = 0; v + a <= voice_n && a * wmax <= unit; ++a) {
        for (int b = 0; w + b <= video_n && a * wmax + b * vmax <= unit; ++b) {
          if (a == 0 && b == 0) continue;
          int& next = best[static_cast<std::size_t>(v + a)][static_cast<std::size_t>(w + b)];
          next = std::min(next, here + 1);
        }
      }
    }
  }
  return best[static_cast<std::size_t>(voice_n)][static_cast<std::size_t>(video_n)];
}

Scenario katrina() {
  return load_scenario(std::string(ATN_SCENARIOS_DIR) + "/katrina-synthetic.json");
}

}  // namespace

TEST_CASE("laps_for_type") {
  CHECK(laps_for_type(475, 78) == 7);
  CHECK(laps_for_type(0, 78) == 0);
  CHECK(laps_for_type(90, 18) == 5);
  CHECK(laps_for_type(78, 78) == 1);
  CHECK(laps_for_type(79, 78) == 2);
  CHECK_THROWS_AS(laps_for_type(10, 0), ValidationError);
  CHECK_THROWS_AS(laps_for_type(-1, 78), ValidationError);
}

TEST_CASE("shared_fleet_size headline values") {
  CHECK(shared_fleet_size(475, 90, kLapCap) == 12);
  CHECK(shared_fleet_size(0, 0, kLapCap) == 0);
  CHECK(shared_fleet_size(39, 9, kLapCap) == 1);  // exactly fills one platform
}

TEST_CASE("shared_fleet_size reduces to laps_for_type on pure loads") {
  for (int v : {0, 1, 77, 78, 79, 155, 156, 400, 475})
    CHECK(shared_fleet_size(v, 0, kLapCap) == laps_for_type(v, kLapCap.voice_sessions_max));
  for (int w : {0, 1, 17, 18, 19, 36, 37, 90})
    CHECK(shared_fleet_size(0, w, kLapCap) == laps_for_type(w, kLapCap.video_sessions_max));
}

TEST_CASE("shared_fleet_size sandwich bound over the desk-scale sweep") {
  for (int v = 0; v <= 200; ++v) {
    for (int w = 0; w <= 40; ++w) {
      const double load = v / 78.0 + w / 18.0;
      const int lower = static_cast<int>(std::ceil(load - 1e-12));
      const int upper = laps_for_type(v, 78) + laps_for_type(w, 18);
      const int shared = shared_fleet_size(v, w, kLapCap);
      REQUIRE(shared >= lower);
      REQUIRE(shared <= upper);
    }
  }
}

TEST_CASE("shared_fleet_size matches the exact oracle at desk scale") {
  // The full 30 x 10 sweep runs in the acceptance suite; spot-check a grid
  // here plus a second capacity mix.
  for (int v = 0; v <= 15; ++v)
    for (int w = 0; w <= 6; ++w)
      REQUIRE(shared_fleet_size(v, w, kLapCap) == exact_min_bins(v, w, kLapCap));

  const PlatformCapacity odd{10.0, 7, 3};
  for (int v = 0; v <= 12; ++v)
    for (int w = 0; w <= 6; ++w)
      REQUIRE(shared_fleet_size(v, w, odd) == exact_min_bins(v, w, odd));

  // Session maxima are independent calibrations: a platform may take fewer
  // voice than video sessions, flipping which media packs first.
  const PlatformCapacity inverted{10.0, 3, 7};
  for (int v = 0; v <= 9; ++v)
    for (int w = 0; w <= 10; ++w)
      REQUIRE(shared_fleet_size(v, w, inverted) == exact_min_bins(v, w, inverted));
}

TEST_CASE("fleet sizing is monotone in demand") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> voice(0, 300);
  std::uniform_int_distribution<int> video(0, 60);
  for (int i = 0; i < 300; ++i) {
    const int v = voice(rng), w = video(rng);
    const FleetDay base = fleet_day(1, v, w, kLapCap);
    const FleetDay more_voice = fleet_day(1, v + 1, w, kLapCap);
    const FleetDay more_video = fleet_day(1, v, w + 1, kLapCap);
    CHECK(more_voice.laps_voice >= base.laps_voice);
    CHECK(more_voice.laps_dedicated_total >= base.laps_dedicated_total);
    CHECK(more_voice.laps_shared_total >= base.laps_shared_total);
    CHECK(more_video.laps_video >= base.laps_video);
    CHECK(more_video.laps_dedicated_total >= base.laps_dedicated_total);
    CHECK(more_video.laps_shared_total >= base.laps_shared_total);
    CHECK(base.laps_shared_total <= base.laps_dedicated_total);
    CHECK(base.laps_dedicated_total == base.laps_voice + base.laps_video);
  }
}

TEST_CASE("build_fleet_plan on the bundled scenario") {
  const Scenario sc = katrina();
  const FleetPlan plan = build_fleet_plan(sc);
  REQUIRE(plan.days.size() == 20);

  const FleetDay& day15 = plan.days[14];
  CHECK(day15.voice_sessions == 475);
  CHECK(day15.video_sessions == 90);
  CHECK(day15.laps_voice == 7);
  CHECK(day15.laps_video == 5);
  CHECK(day15.laps_dedicated_total == 12);
  CHECK(day15.laps_shared_total == 12);

  const FleetSummary summary = summarize_fleet(plan);
  CHECK(summary.max_dedicated == 12);
  CHECK(summary.dedicated_days == std::vector<int>{15, 16, 18});
  CHECK(summary.max_shared == 12);
  CHECK(summary.shared_days == std::vector<int>{15, 16, 18});
}

TEST_CASE("build_fleet_plan on all-zero demand") {
  Scenario sc = katrina();
  sc.voice_timeline.sessions_per_day.assign(20, 0);
  sc.dmat_schedule.active_per_day.assign(20, 0);
  sc = validate_scenario(std::move(sc));
  const FleetPlan plan = build_fleet_plan(sc);
  for (const FleetDay& day : plan.days) {
    CHECK(day.voice_sessions == 0);
    CHECK(day.video_sessions == 0);
    CHECK(day.laps_dedicated_total == 0);
    CHECK(day.laps_shared_total == 0);
  }
  CHECK(summarize_fleet(plan).max_shared == 0);
}
