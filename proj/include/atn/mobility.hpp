#pragma once

// Controlled-mobility engine: detect troubled links, plan straight-line
// relay chains from a pool of dirigible LAPs, project placements into graph
// snapshots and re-task relays when troubles move. All tie-breaks are fixed
// (lowest pool index), so identical inputs give identical assignments.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atn/errors.hpp"
#include "atn/geometry.hpp"
#include "atn/topology.hpp"

namespace atn {

enum class TroubleKind { Congestion, Failure };

struct LinkTrouble {
  std::string a, b;  // endpoint ids, a < b
  TroubleKind kind = TroubleKind::Congestion;
  double unmet_demand_mbps = 0.0;

  friend bool operator==(const LinkTrouble&, const LinkTrouble&) = default;
};

// Identity of a trouble for re-tasking purposes: same link, same kind.
inline bool same_trouble(const LinkTrouble& x, const LinkTrouble& y) {
  return x.a == y.a && x.b == y.b && x.kind == y.kind;
}

// One pooled dirigible LAP. Travel is straight-line at constant speed;
// altitude changes are instantaneous.
struct Relay {
  std::string id;
  GeoPoint position;  // current position: home, in transit, or last target
  double speed_kmh = 0.0;
  double altitude_m = 440.0;
  bool assigned = false;

  friend bool operator==(const Relay&, const Relay&) = default;
};

// One relay holding one chain slot.
struct ChainSlot {
  std::string relay_id;
  GeoPoint origin;  // departure point
  GeoPoint target;  // position on the troubled segment
  double depart_hours = 0.0;
  double arrival_hours = 0.0;

  friend bool operator==(const ChainSlot&, const ChainSlot&) = default;
};

struct RelayAssignment {
  LinkTrouble trouble;
  std::vector<ChainSlot> slots;  // ordered along the segment a -> b
  double ipl_range_km = 0.0;
  double link_capacity_mbps = 0.0;
  double relay_altitude_m = 440.0;

  double chain_arrival_hours() const {
    double t = 0.0;
    for (const ChainSlot& slot : slots) t = std::max(t, slot.arrival_hours);
    return t;
  }
  bool arrived(double now_hours) const { return now_hours >= chain_arrival_hours(); }

  friend bool operator==(const RelayAssignment&, const RelayAssignment&) = default;
};

// Pool state. Owned by a single simulation sequence; every operation takes a
// pool and returns the updated one.
struct RelayPool {
  std::vector<Relay> relays;
  double ipl_range_km = 0.0;
  double link_capacity_mbps = 0.0;
  std::vector<RelayAssignment> active;

  int idle_count() const {
    int n = 0;
    for (const Relay& r : relays)
      if (!r.assigned) ++n;
    return n;
  }
  int assigned_count() const { return static_cast<int>(relays.size()) - idle_count(); }

  friend bool operator==(const RelayPool&, const RelayPool&) = default;
};

// Congested and failed links, most starved first. A down link is a trouble
// only while demand is still offered to it; a congested link's unmet demand
// is the excess over capacity.
inline std::vector<LinkTrouble> detect_troubles(const AtnGraph& graph) {
  std::vector<LinkTrouble> troubles;
  for (const AtnLink& link : graph.links) {
    if (link.down) {
      if (link.offered_load_mbps > 0.0)
        troubles.push_back({link.a, link.b, TroubleKind::Failure, link.offered_load_mbps});
    } else if (link.offered_load_mbps > link.capacity_mbps) {
      troubles.push_back({link.a, link.b, TroubleKind::Congestion,
                          link.offered_load_mbps - link.capacity_mbps});
    }
  }
  std::sort(troubles.begin(), troubles.end(), [](const LinkTrouble& x, const LinkTrouble& y) {
    if (x.unmet_demand_mbps != y.unmet_demand_mbps)
      return x.unmet_demand_mbps > y.unmet_demand_mbps;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return troubles;
}

// Evenly spaced positions strictly between a and b so that no hop exceeds
// ipl_range: ceil(d / range) - 1 of them, the fewest that can close the gap.
// The ceiling is taken with a small slack so an exact integer ratio (say
// 8 km over 4 km hops) does not round up on float noise.
inline std::vector<GeoPoint> plan_relay_chain(const GeoPoint& a, const GeoPoint& b,
                                              double ipl_range_km) {
  if (!(ipl_range_km > 0.0))
    throw ValidationError("plan_relay_chain: ipl_range must be > 0");
  const double d = distance(a, b);
  const int hops = std::max(1, static_cast<int>(std::ceil(d / ipl_range_km - 1e-9)));
  std::vector<GeoPoint> positions;
  positions.reserve(static_cast<std::size_t>(hops - 1));
  for (int i = 1; i < hops; ++i) {
    const double t = static_cast<double>(i) / hops;
    positions.push_back({a.x_km + (b.x_km - a.x_km) * t, a.y_km + (b.y_km - a.y_km) * t});
  }
  return positions;
}

struct AssignResult {
  RelayPool pool;
  std::vector<RelayAssignment> assignments;  // all chains active after the call
  std::vector<LinkTrouble> unserved;
};

namespace detail {

inline GeoPoint slot_position(const ChainSlot& slot, double now_hours) {
  if (now_hours >= slot.arrival_hours) return slot.target;
  if (now_hours <= slot.depart_hours) return slot.origin;
  const double span = slot.arrival_hours - slot.depart_hours;
  const double t = span > 0.0 ? (now_hours - slot.depart_hours) / span : 1.0;
  return {slot.origin.x_km + (slot.target.x_km - slot.origin.x_km) * t,
          slot.origin.y_km + (slot.target.y_km - slot.origin.y_km) * t};
}

}  // namespace detail

// Greedy assignment in trouble-priority order (troubles arrive sorted from
// detect_troubles). Relays whose trouble vanished are released first and
// become eligible again; persisting troubles keep their chains. Each slot of
// a new chain takes the idle relay with the shortest travel distance (tie:
// lowest pool index). A troubled link shorter than the relay range still
// gets one relay at the midpoint: a zero-relay chain repairs nothing. A
// trouble that cannot get a full chain is reported unserved and consumes no
// relays.
inline AssignResult assign_relays(const std::vector<LinkTrouble>& troubles, RelayPool pool,
                                  const AtnGraph& graph, double now_hours) {
  const auto find_relay = [&pool](const std::string& id) -> Relay& {
    for (Relay& r : pool.relays)
      if (r.id == id) return r;
    throw LookupError("assign_relays: unknown relay id '" + id + "'");
  };

  // Release chains whose trouble is gone; the relay keeps whatever position
  // it had reached when released.
  std::vector<RelayAssignment> kept;
  for (RelayAssignment& assignment : pool.active) {
    const bool still_troubled = std::any_of(
        troubles.begin(), troubles.end(),
        [&](const LinkTrouble& t) { return same_trouble(t, assignment.trouble); });
    if (still_troubled) {
      kept.push_back(std::move(assignment));
      continue;
    }
    for (const ChainSlot& slot : assignment.slots) {
      Relay& relay = find_relay(slot.relay_id);
      relay.assigned = false;
      relay.position = detail::slot_position(slot, now_hours);
    }
  }
  pool.active = std::move(kept);

  AssignResult result;
  for (const LinkTrouble& trouble : troubles) {
    RelayAssignment* existing = nullptr;
    for (RelayAssignment& assignment : pool.active)
      if (same_trouble(assignment.trouble, trouble)) existing = &assignment;
    if (existing) {
      existing->trouble = trouble;  // refresh the unmet-demand figure
      continue;
    }

    const GeoPoint pa = graph.platform(trouble.a).position;
    const GeoPoint pb = graph.platform(trouble.b).position;
    std::vector<GeoPoint> targets = plan_relay_chain(pa, pb, pool.ipl_range_km);
    if (targets.empty())
      targets.push_back({(pa.x_km + pb.x_km) / 2.0, (pa.y_km + pb.y_km) / 2.0});

    if (pool.idle_count() < static_cast<int>(targets.size())) {
      result.unserved.push_back(trouble);
      continue;
    }

    RelayAssignment assignment;
    assignment.trouble = trouble;
    assignment.ipl_range_km = pool.ipl_range_km;
    assignment.link_capacity_mbps = pool.link_capacity_mbps;
    for (const GeoPoint& target : targets) {
      Relay* best = nullptr;
      double best_d = 0.0;
      for (Relay& relay : pool.relays) {
        if (relay.assigned) continue;
        const double d = distance(relay.position, target);
        if (!best || d < best_d) {  // strict <: ties keep the lowest index
          best = &relay;
          best_d = d;
        }
      }
      if (!(best->speed_kmh > 0.0) && best_d > 0.0)
        throw ValidationError("assign_relays: relay '" + best->id + "' has no speed");
      best->assigned = true;
      assignment.relay_altitude_m = best->altitude_m;
      assignment.slots.push_back({best->id, best->position, target, now_hours,
                                  now_hours + (best_d > 0.0 ? best_d / best->speed_kmh : 0.0)});
    }
    pool.active.push_back(std::move(assignment));
  }

  result.assignments = pool.active;
  result.pool = std::move(pool);
  return result;
}

// Project relay positions into a new graph snapshot. Arrived relays sit at
// their targets and materialize the chain links (consecutive chain nodes,
// relay-link capacity); relays in transit appear at interpolated positions
// with no links yet, so an incomplete chain carries no end-to-end route.
// Clusters are re-partitioned with the relays included.
inline AtnGraph apply_placement(const AtnGraph& base,
                                const std::vector<RelayAssignment>& assignments,
                                double now_hours) {
  AtnGraph graph = base;
  for (const RelayAssignment& assignment : assignments) {
    // Chain node sequence a, r1 .. rn, b; a node is "settled" once it sits at
    // its final position. Links join consecutive settled nodes only.
    std::vector<std::pair<std::string, bool>> chain{{assignment.trouble.a, true}};
    for (const ChainSlot& slot : assignment.slots) {
      Platform relay;
      relay.id = slot.relay_id;
      relay.level = Level::Lap;
      relay.position = detail::slot_position(slot, now_hours);
      relay.altitude_m = assignment.relay_altitude_m;
      relay.mobility = MobilityKind::RelayPool;
      graph.platforms.push_back(std::move(relay));
      chain.emplace_back(slot.relay_id, now_hours >= slot.arrival_hours);
    }
    chain.emplace_back(assignment.trouble.b, true);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!chain[i].second || !chain[i + 1].second) continue;
      if (graph.find_link(chain[i].first, chain[i + 1].first)) continue;
      const auto kind = link_kind_for(graph.platform(chain[i].first).level,
                                      graph.platform(chain[i + 1].first).level);
      AtnLink link;
      std::tie(link.a, link.b) = std::minmax(chain[i].first, chain[i + 1].first);
      link.kind = kind.value_or(LinkKind::Backhaul);
      link.capacity_mbps = assignment.link_capacity_mbps;
      link.max_range_km = assignment.ipl_range_km;
      graph.links.push_back(std::move(link));
    }
  }
  std::sort(graph.links.begin(), graph.links.end(),
            [](const AtnLink& x, const AtnLink& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });
  graph.clusters = cluster_partition(graph.platforms, graph.links);
  return graph;
}

// Move the unmet share of each fully arrived chain's trouble onto the chain
// links. A chain carries at most its own link capacity; any residual stays
// on the troubled link and keeps it listed by detect_troubles.
inline AtnGraph reroute_over_chains(AtnGraph graph,
                                    const std::vector<RelayAssignment>& assignments,
                                    double now_hours) {
  for (const RelayAssignment& assignment : assignments) {
    if (!assignment.arrived(now_hours)) continue;
    AtnLink* troubled = graph.find_link(assignment.trouble.a, assignment.trouble.b);
    if (!troubled) continue;
    const double excess = troubled->down
                              ? troubled->offered_load_mbps
                              : std::max(0.0, troubled->offered_load_mbps - troubled->capacity_mbps);
    const double relief = std::min(excess, assignment.link_capacity_mbps);
    if (relief <= 0.0) continue;
    troubled->offered_load_mbps -= relief;

    std::vector<std::string> chain{assignment.trouble.a};
    for (const ChainSlot& slot : assignment.slots) chain.push_back(slot.relay_id);
    chain.push_back(assignment.trouble.b);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (AtnLink* hop = graph.find_link(chain[i], chain[i + 1]))
        hop->offered_load_mbps += relief;
  }
  return graph;
}

}  // namespace atn
