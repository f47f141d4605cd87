#pragma once

// Scenario ingestion: JSON documents (// comments allowed) with sections for
// demand, capacity, topology and relays. Every field except "name" has a
// documented default taken from the bundled hurricane scenario; see the
// README for the full schema. Validation reports the offending field path.

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "atn/capacity.hpp"
#include "atn/demand.hpp"
#include "atn/errors.hpp"
#include "atn/geometry.hpp"
#include "atn/mobility.hpp"
#include "atn/topology.hpp"

namespace atn {

// One scripted link trouble, active on days [first_day, last_day]. A failure
// takes the link down with the given load still offered to it; a congestion
// entry just sets the offered load.
struct TroubleScriptEntry {
  int first_day = 1;
  int last_day = 1;
  std::string a, b;  // endpoint ids, normalized a < b on validation
  TroubleKind kind = TroubleKind::Congestion;
  double offered_load_mbps = 0.0;

  friend bool operator==(const TroubleScriptEntry&, const TroubleScriptEntry&) = default;
};

// Knobs for GEOMETRIC-mode demand synthesis.
struct GeometricConfig {
  int sites_per_day = 8;
  int max_laps = 0;  // 0 = deploy as many as the demand requires

  friend bool operator==(const GeometricConfig&, const GeometricConfig&) = default;
};

struct Scenario {
  std::string name;
  int horizon_days = 20;
  double disaster_area_km2 = 233000.0;
  std::uint64_t seed = 1;
  PlatformCapacity platform_capacity{54.0, 78, 18};
  CodecSpec voice_codec;
  CodecSpec video_codec;
  double lap_altitude_m = 440.0;
  double lap_footprint_area_km2 = 47.39;
  VoiceDemandTimeline voice_timeline;
  DmatSchedule dmat_schedule;
  std::vector<Platform> platforms;
  RangeRules range_rules;
  RelayPool relay_pool;
  std::vector<TroubleScriptEntry> troubles;
  GeometricConfig geometric;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline CodecSpec default_voice_codec() {
  return CodecSpec{"AMR", Media::Voice, 12.2, 20.0, 40.0, 3.8};
}

inline CodecSpec default_video_codec() {
  return CodecSpec{"H.264", Media::Video, 384.0, 0.0, 0.0, 0.0};
}

inline RangeRules default_range_rules() {
  // The source material names no IPL or backhaul figures; these defaults are
  // artifact conventions and every scenario may override them.
  RangeRules rules;
  rules.backhaul = {1000.0, 155.0};
  rules.ipl_inter = {100.0, 54.0};
  rules.ipl_intra = {20.0, 54.0};
  return rules;
}

// Default topology: one abstract satellite/ground gateway plus one
// quasi-stationary HAP over the scenario origin.
inline std::vector<Platform> default_platforms() {
  Platform gateway;
  gateway.id = "gw-1";
  gateway.level = Level::Ground;
  gateway.backhaul_throughput_mbps = 155.0;

  Platform hap;
  hap.id = "hap-1";
  hap.level = Level::Hap;
  hap.altitude_m = 20000.0;
  hap.backhaul_throughput_mbps = 155.0;
  hap.mobility = MobilityKind::QuasiStationary;

  return {gateway, hap};
}

namespace detail {

using json = nlohmann::json;

inline ValidationError field_error(const std::string& path, const std::string& what) {
  return ValidationError(path + ": " + what);
}

inline const json* maybe(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  return it == doc.end() || it->is_null() ? nullptr : &*it;
}

inline double require_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw field_error(path, "expected a number");
  return v.get<double>();
}

inline int require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw field_error(path, "expected an integer");
  return v.get<int>();
}

inline std::string require_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw field_error(path, "expected a string");
  return v.get<std::string>();
}

inline std::vector<int> require_int_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw field_error(path, "expected an array of integers");
  std::vector<int> values;
  values.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    values.push_back(require_int(v[i], path + "[" + std::to_string(i) + "]"));
  return values;
}

inline Level parse_level(const std::string& text, const std::string& path) {
  if (text == "hap" || text == "HAP") return Level::Hap;
  if (text == "lap" || text == "LAP") return Level::Lap;
  if (text == "ground" || text == "GROUND") return Level::Ground;
  throw field_error(path, "unknown level '" + text + "' (hap | lap | ground)");
}

inline MobilityKind parse_mobility(const std::string& text, const std::string& path) {
  if (text == "quasi_stationary") return MobilityKind::QuasiStationary;
  if (text == "mission_pattern") return MobilityKind::MissionPattern;
  if (text == "relay_pool") return MobilityKind::RelayPool;
  throw field_error(path, "unknown mobility '" + text +
                              "' (quasi_stationary | mission_pattern | relay_pool)");
}

inline RangeRule parse_range_rule(const json& v, const std::string& path, RangeRule fallback) {
  RangeRule rule = fallback;
  if (const json* r = maybe(v, "max_range_km")) rule.max_range_km = require_number(*r, path + ".max_range_km");
  if (const json* c = maybe(v, "capacity_mbps")) rule.capacity_mbps = require_number(*c, path + ".capacity_mbps");
  return rule;
}

inline CodecSpec parse_codec(const json& v, const std::string& path, CodecSpec fallback) {
  CodecSpec codec = fallback;
  if (const json* f = maybe(v, "name")) codec.name = require_string(*f, path + ".name");
  if (const json* f = maybe(v, "bit_rate_kbps")) codec.bit_rate_kbps = require_number(*f, path + ".bit_rate_kbps");
  if (const json* f = maybe(v, "sample_period_ms")) codec.sample_period_ms = require_number(*f, path + ".sample_period_ms");
  if (const json* f = maybe(v, "header_overhead_bytes")) codec.header_overhead_bytes = require_number(*f, path + ".header_overhead_bytes");
  if (const json* f = maybe(v, "mos")) codec.mos = require_number(*f, path + ".mos");
  return codec;
}

}  // namespace detail

// Parse a scenario document. Missing sections fall back to the defaults;
// invariants are checked by validate_scenario afterwards.
inline Scenario parse_scenario(const nlohmann::json& doc) {
  using detail::maybe;
  using detail::require_int;
  using detail::require_int_array;
  using detail::require_number;
  using detail::require_string;

  if (!doc.is_object()) throw ValidationError("scenario: expected a JSON object");

  Scenario sc;
  sc.voice_codec = default_voice_codec();
  sc.video_codec = default_video_codec();
  sc.range_rules = default_range_rules();

  if (const auto* v = maybe(doc, "name")) sc.name = require_string(*v, "name");
  else throw detail::field_error("name", "missing mandatory field");
  if (const auto* v = maybe(doc, "horizon_days")) sc.horizon_days = require_int(*v, "horizon_days");
  if (const auto* v = maybe(doc, "disaster_area_km2")) sc.disaster_area_km2 = require_number(*v, "disaster_area_km2");
  if (const auto* v = maybe(doc, "seed")) {
    if (!v->is_number_unsigned() && !v->is_number_integer())
      throw detail::field_error("seed", "expected an integer");
    sc.seed = v->get<std::uint64_t>();
  }

  if (const auto* v = maybe(doc, "platform_capacity")) {
    if (const auto* f = maybe(*v, "achievable_throughput_mbps"))
      sc.platform_capacity.achievable_throughput_mbps = require_number(*f, "platform_capacity.achievable_throughput_mbps");
    if (const auto* f = maybe(*v, "voice_sessions_max"))
      sc.platform_capacity.voice_sessions_max = require_int(*f, "platform_capacity.voice_sessions_max");
    if (const auto* f = maybe(*v, "video_sessions_max"))
      sc.platform_capacity.video_sessions_max = require_int(*f, "platform_capacity.video_sessions_max");
  }

  if (const auto* v = maybe(doc, "codecs")) {
    if (const auto* c = maybe(*v, "voice")) sc.voice_codec = detail::parse_codec(*c, "codecs.voice", sc.voice_codec);
    if (const auto* c = maybe(*v, "video")) sc.video_codec = detail::parse_codec(*c, "codecs.video", sc.video_codec);
  }
  sc.voice_codec.media = Media::Voice;
  sc.video_codec.media = Media::Video;

  if (const auto* v = maybe(doc, "lap")) {
    if (const auto* f = maybe(*v, "altitude_m")) sc.lap_altitude_m = require_number(*f, "lap.altitude_m");
    if (const auto* f = maybe(*v, "footprint_area_km2"))
      sc.lap_footprint_area_km2 = require_number(*f, "lap.footprint_area_km2");
  }

  if (const auto* v = maybe(doc, "demand")) {
    if (const auto* f = maybe(*v, "voice_sessions_per_day"))
      sc.voice_timeline.sessions_per_day = require_int_array(*f, "demand.voice_sessions_per_day");
    if (const auto* d = maybe(*v, "dmat")) {
      if (const auto* f = maybe(*d, "active_per_day"))
        sc.dmat_schedule.active_per_day = require_int_array(*f, "demand.dmat.active_per_day");
      if (const auto* f = maybe(*d, "streams_per_dmat"))
        sc.dmat_schedule.streams_per_dmat = require_int(*f, "demand.dmat.streams_per_dmat");
    }
  }

  if (const auto* v = maybe(doc, "topology")) {
    if (const auto* list = maybe(*v, "platforms")) {
      if (!list->is_array()) throw detail::field_error("topology.platforms", "expected an array");
      for (std::size_t i = 0; i < list->size(); ++i) {
        const std::string path = "topology.platforms[" + std::to_string(i) + "]";
        const auto& entry = (*list)[i];
        Platform p;
        if (const auto* f = maybe(entry, "id")) p.id = require_string(*f, path + ".id");
        else throw detail::field_error(path + ".id", "missing mandatory field");
        if (const auto* f = maybe(entry, "level"))
          p.level = detail::parse_level(require_string(*f, path + ".level"), path + ".level");
        else throw detail::field_error(path + ".level", "missing mandatory field");
        if (const auto* f = maybe(entry, "x_km")) p.position.x_km = require_number(*f, path + ".x_km");
        if (const auto* f = maybe(entry, "y_km")) p.position.y_km = require_number(*f, path + ".y_km");
        if (const auto* f = maybe(entry, "altitude_m")) p.altitude_m = require_number(*f, path + ".altitude_m");
        else if (p.level == Level::Lap) p.altitude_m = sc.lap_altitude_m;
        else if (p.level == Level::Hap) p.altitude_m = 20000.0;
        if (const auto* f = maybe(entry, "mobility"))
          p.mobility = detail::parse_mobility(require_string(*f, path + ".mobility"), path + ".mobility");
        if (const auto* f = maybe(entry, "backhaul_throughput_mbps"))
          p.backhaul_throughput_mbps = require_number(*f, path + ".backhaul_throughput_mbps");
        if (const auto* f = maybe(entry, "footprint_area_km2")) {
          const double area = require_number(*f, path + ".footprint_area_km2");
          if (!(area > 0.0)) throw detail::field_error(path + ".footprint_area_km2", "must be > 0");
          p.footprint = make_footprint(p.position, radius_from_area(area));
        }
        sc.platforms.push_back(std::move(p));
      }
    }
    if (const auto* rules = maybe(*v, "range_rules")) {
      if (const auto* r = maybe(*rules, "backhaul"))
        sc.range_rules.backhaul = detail::parse_range_rule(*r, "topology.range_rules.backhaul", sc.range_rules.backhaul);
      if (const auto* r = maybe(*rules, "ipl_intra"))
        sc.range_rules.ipl_intra = detail::parse_range_rule(*r, "topology.range_rules.ipl_intra", sc.range_rules.ipl_intra);
      if (const auto* r = maybe(*rules, "ipl_inter"))
        sc.range_rules.ipl_inter = detail::parse_range_rule(*r, "topology.range_rules.ipl_inter", sc.range_rules.ipl_inter);
    }
  }

  if (const auto* v = maybe(doc, "relays")) {
    int count = 0;
    if (const auto* f = maybe(*v, "count")) count = require_int(*f, "relays.count");
    double speed = 40.0, range = 5.0, capacity = 54.0, altitude = sc.lap_altitude_m;
    if (const auto* f = maybe(*v, "speed_kmh")) speed = require_number(*f, "relays.speed_kmh");
    if (const auto* f = maybe(*v, "ipl_range_km")) range = require_number(*f, "relays.ipl_range_km");
    if (const auto* f = maybe(*v, "link_capacity_mbps")) capacity = require_number(*f, "relays.link_capacity_mbps");
    if (const auto* f = maybe(*v, "altitude_m")) altitude = require_number(*f, "relays.altitude_m");
    std::vector<GeoPoint> homes;
    if (const auto* f = maybe(*v, "home")) {
      const auto parse_point = [](const nlohmann::json& pt, const std::string& path) {
        GeoPoint g;
        if (const auto* x = detail::maybe(pt, "x_km")) g.x_km = require_number(*x, path + ".x_km");
        if (const auto* y = detail::maybe(pt, "y_km")) g.y_km = require_number(*y, path + ".y_km");
        return g;
      };
      if (f->is_array()) {
        for (std::size_t i = 0; i < f->size(); ++i)
          homes.push_back(parse_point((*f)[i], "relays.home[" + std::to_string(i) + "]"));
      } else {
        homes.push_back(parse_point(*f, "relays.home"));
      }
    }
    if (count > 0 && homes.empty()) homes.push_back(GeoPoint{});
    if (count > 0 && homes.size() != 1 && static_cast<int>(homes.size()) != count)
      throw detail::field_error("relays.home", "expected one point or exactly 'count' points");
    sc.relay_pool.ipl_range_km = range;
    sc.relay_pool.link_capacity_mbps = capacity;
    for (int i = 0; i < count; ++i) {
      Relay relay;
      relay.id = "relay-" + std::to_string(i + 1);
      relay.position = homes.size() == 1 ? homes.front() : homes[static_cast<std::size_t>(i)];
      relay.speed_kmh = speed;
      relay.altitude_m = altitude;
      sc.relay_pool.relays.push_back(std::move(relay));
    }
  }

  if (const auto* v = maybe(doc, "troubles")) {
    if (!v->is_array()) throw detail::field_error("troubles", "expected an array");
    for (std::size_t i = 0; i < v->size(); ++i) {
      const std::string path = "troubles[" + std::to_string(i) + "]";
      const auto& entry = (*v)[i];
      TroubleScriptEntry t;
      if (const auto* f = maybe(entry, "first_day")) t.first_day = require_int(*f, path + ".first_day");
      t.last_day = t.first_day;
      if (const auto* f = maybe(entry, "last_day")) t.last_day = require_int(*f, path + ".last_day");
      if (const auto* f = maybe(entry, "a")) t.a = require_string(*f, path + ".a");
      else throw detail::field_error(path + ".a", "missing mandatory field");
      if (const auto* f = maybe(entry, "b")) t.b = require_string(*f, path + ".b");
      else throw detail::field_error(path + ".b", "missing mandatory field");
      if (const auto* f = maybe(entry, "kind")) {
        const std::string kind = require_string(*f, path + ".kind");
        if (kind == "congestion") t.kind = TroubleKind::Congestion;
        else if (kind == "failure") t.kind = TroubleKind::Failure;
        else throw detail::field_error(path + ".kind", "unknown kind '" + kind + "' (congestion | failure)");
      }
      if (const auto* f = maybe(entry, "offered_load_mbps"))
        t.offered_load_mbps = require_number(*f, path + ".offered_load_mbps");
      sc.troubles.push_back(std::move(t));
    }
  }

  if (const auto* v = maybe(doc, "geometric")) {
    if (const auto* f = maybe(*v, "sites_per_day")) sc.geometric.sites_per_day = require_int(*f, "geometric.sites_per_day");
    if (const auto* f = maybe(*v, "max_laps")) sc.geometric.max_laps = require_int(*f, "geometric.max_laps");
  }

  return sc;
}

// Check every invariant and inject the remaining defaults. Idempotent:
// validating an already valid scenario returns an identical value.
inline Scenario validate_scenario(Scenario sc) {
  using detail::field_error;

  if (sc.name.empty()) throw field_error("name", "missing mandatory field");
  if (sc.horizon_days < 1) throw field_error("horizon_days", "must be >= 1");
  if (!(sc.disaster_area_km2 > 0.0)) throw field_error("disaster_area_km2", "must be > 0");

  if (!(sc.platform_capacity.achievable_throughput_mbps > 0.0))
    throw field_error("platform_capacity.achievable_throughput_mbps", "must be > 0");
  if (sc.platform_capacity.voice_sessions_max < 1)
    throw field_error("platform_capacity.voice_sessions_max", "must be >= 1");
  if (sc.platform_capacity.video_sessions_max < 1)
    throw field_error("platform_capacity.video_sessions_max", "must be >= 1");

  if (!(sc.voice_codec.bit_rate_kbps > 0.0)) throw field_error("codecs.voice.bit_rate_kbps", "must be > 0");
  if (!(sc.voice_codec.sample_period_ms > 0.0)) throw field_error("codecs.voice.sample_period_ms", "must be > 0");
  if (sc.voice_codec.header_overhead_bytes < 0.0)
    throw field_error("codecs.voice.header_overhead_bytes", "must be >= 0");
  if (!(sc.video_codec.bit_rate_kbps > 0.0)) throw field_error("codecs.video.bit_rate_kbps", "must be > 0");

  if (!(sc.lap_altitude_m > 0.0)) throw field_error("lap.altitude_m", "must be > 0");
  if (!(sc.lap_footprint_area_km2 > 0.0)) throw field_error("lap.footprint_area_km2", "must be > 0");

  if (sc.voice_timeline.sessions_per_day.empty()) {
    if (sc.horizon_days != 20)
      throw field_error("demand.voice_sessions_per_day",
                        "required when horizon_days != 20 (the bundled default series is 20 days)");
    sc.voice_timeline.sessions_per_day = katrina_voice_sessions();
  }
  if (static_cast<int>(sc.voice_timeline.sessions_per_day.size()) != sc.horizon_days)
    throw field_error("demand.voice_sessions_per_day",
                      "length " + std::to_string(sc.voice_timeline.sessions_per_day.size()) +
                          " does not match horizon_days " + std::to_string(sc.horizon_days));
  for (std::size_t i = 0; i < sc.voice_timeline.sessions_per_day.size(); ++i)
    if (sc.voice_timeline.sessions_per_day[i] < 0)
      throw field_error("demand.voice_sessions_per_day[" + std::to_string(i) + "]", "must be >= 0");

  if (sc.dmat_schedule.active_per_day.empty())
    sc.dmat_schedule.active_per_day = default_dmat_ramp(sc.horizon_days).active_per_day;
  if (static_cast<int>(sc.dmat_schedule.active_per_day.size()) != sc.horizon_days)
    throw field_error("demand.dmat.active_per_day",
                      "length " + std::to_string(sc.dmat_schedule.active_per_day.size()) +
                          " does not match horizon_days " + std::to_string(sc.horizon_days));
  if (sc.dmat_schedule.streams_per_dmat < 0)
    throw field_error("demand.dmat.streams_per_dmat", "must be >= 0");
  for (std::size_t i = 0; i < sc.dmat_schedule.active_per_day.size(); ++i) {
    const std::string path = "demand.dmat.active_per_day[" + std::to_string(i) + "]";
    if (sc.dmat_schedule.active_per_day[i] < 0) throw field_error(path, "must be >= 0");
    if (i > 0 && sc.dmat_schedule.active_per_day[i] < sc.dmat_schedule.active_per_day[i - 1])
      throw field_error(path, "active DMAT count must be monotone non-decreasing "
                              "(deployed teams stay operational)");
  }

  if (sc.platforms.empty()) sc.platforms = default_platforms();
  double min_hap_altitude = std::numeric_limits<double>::infinity();
  double max_lap_altitude = 0.0;
  bool has_hap = false, has_lap = false;
  for (std::size_t i = 0; i < sc.platforms.size(); ++i) {
    Platform& p = sc.platforms[i];
    const std::string path = "topology.platforms[" + std::to_string(i) + "]";
    if (p.id.empty()) throw field_error(path + ".id", "must not be empty");
    for (std::size_t j = 0; j < i; ++j)
      if (sc.platforms[j].id == p.id) throw field_error(path + ".id", "duplicate id '" + p.id + "'");
    if (p.level != Level::Ground && !(p.altitude_m > 0.0))
      throw field_error(path + ".altitude_m", "aerial platforms need altitude > 0");
    if (p.level == Level::Hap) {
      has_hap = true;
      min_hap_altitude = std::min(min_hap_altitude, p.altitude_m);
    }
    if (p.level == Level::Lap) {
      has_lap = true;
      max_lap_altitude = std::max(max_lap_altitude, p.altitude_m);
      if (!p.capacity) p.capacity = sc.platform_capacity;
      if (!p.footprint)
        p.footprint = make_footprint(p.position, radius_from_area(sc.lap_footprint_area_km2));
    }
  }
  if (has_hap && has_lap && !(min_hap_altitude > max_lap_altitude))
    throw field_error("topology.platforms", "HAP altitude must exceed every LAP altitude");

  if (!(sc.range_rules.backhaul.max_range_km > 0.0))
    throw field_error("topology.range_rules.backhaul.max_range_km", "must be > 0");
  if (!(sc.range_rules.ipl_intra.max_range_km > 0.0))
    throw field_error("topology.range_rules.ipl_intra.max_range_km", "must be > 0");
  if (!(sc.range_rules.ipl_inter.max_range_km > 0.0))
    throw field_error("topology.range_rules.ipl_inter.max_range_km", "must be > 0");

  if (!sc.relay_pool.relays.empty()) {
    if (!(sc.relay_pool.ipl_range_km > 0.0)) throw field_error("relays.ipl_range_km", "must be > 0");
    if (!(sc.relay_pool.link_capacity_mbps > 0.0))
      throw field_error("relays.link_capacity_mbps", "must be > 0");
    for (const Relay& relay : sc.relay_pool.relays)
      if (!(relay.speed_kmh > 0.0)) throw field_error("relays.speed_kmh", "must be > 0");
  }

  // The scripted troubles must reference links that exist in the built
  // topology; building the graph also checks the cluster-partition
  // precondition (every mission LAP within inter-level range of a HAP).
  AtnGraph graph;
  try {
    graph = build_graph(sc.platforms, sc.range_rules);
  } catch (const PartitionError& e) {
    throw ValidationError(std::string("topology.platforms: ") + e.what());
  }
  for (std::size_t i = 0; i < sc.troubles.size(); ++i) {
    TroubleScriptEntry& t = sc.troubles[i];
    const std::string path = "troubles[" + std::to_string(i) + "]";
    if (t.a > t.b) std::swap(t.a, t.b);
    if (t.first_day < 1 || t.first_day > sc.horizon_days)
      throw field_error(path + ".first_day", "must be within the horizon");
    if (t.last_day < t.first_day || t.last_day > sc.horizon_days)
      throw field_error(path + ".last_day", "must be within [first_day, horizon]");
    if (t.a == t.b) throw field_error(path, "endpoints must differ");
    if (t.offered_load_mbps < 0.0) throw field_error(path + ".offered_load_mbps", "must be >= 0");
    if (!graph.find_platform(t.a)) throw field_error(path + ".a", "unknown platform '" + t.a + "'");
    if (!graph.find_platform(t.b)) throw field_error(path + ".b", "unknown platform '" + t.b + "'");
    if (!graph.find_link(t.a, t.b))
      throw field_error(path, "no link between '" + t.a + "' and '" + t.b +
                                  "' in the built topology");
  }

  if (sc.geometric.sites_per_day < 1) throw field_error("geometric.sites_per_day", "must be >= 1");
  if (sc.geometric.max_laps < 0) throw field_error("geometric.max_laps", "must be >= 0");

  return sc;
}

inline Scenario parse_and_validate(const nlohmann::json& doc) {
  return validate_scenario(parse_scenario(doc));
}

// Load, parse (comments allowed) and validate a scenario file.
inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buffer.str(), nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("scenario parse error in '" + path + "': " + e.what());
  }
  return parse_and_validate(doc);
}

}  // namespace atn
