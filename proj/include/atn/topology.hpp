#pragma once

// The multi-level ATN graph: HAP / LAP / ground platforms, typed links built
// from per-kind range rules, nearest-HAP cluster partitioning and
// hierarchical min-hop routing.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "atn/capacity.hpp"
#include "atn/errors.hpp"
#include "atn/geometry.hpp"

namespace atn {

enum class Level { Hap, Lap, Ground };

enum class MobilityKind { QuasiStationary, MissionPattern, RelayPool };

struct Platform {
  std::string id;
  Level level = Level::Lap;
  GeoPoint position;
  double altitude_m = 0.0;                   // 0 for ground nodes
  std::optional<Footprint> footprint;        // aerial nodes only
  std::optional<PlatformCapacity> capacity;  // LAPs carrying user sessions
  double backhaul_throughput_mbps = 0.0;     // HAP / ground gateway
  MobilityKind mobility = MobilityKind::QuasiStationary;

  friend bool operator==(const Platform&, const Platform&) = default;
};

enum class LinkKind { Backhaul, IplIntra, IplInter };

struct AtnLink {
  std::string a, b;  // endpoint ids, a < b
  LinkKind kind = LinkKind::IplIntra;
  double capacity_mbps = 0.0;
  double max_range_km = 0.0;
  double offered_load_mbps = 0.0;
  bool down = false;

  friend bool operator==(const AtnLink&, const AtnLink&) = default;
};

struct RangeRule {
  double max_range_km = 0.0;
  double capacity_mbps = 0.0;

  friend bool operator==(const RangeRule&, const RangeRule&) = default;
};

struct RangeRules {
  RangeRule backhaul;
  RangeRule ipl_intra;
  RangeRule ipl_inter;

  const RangeRule& for_kind(LinkKind kind) const {
    switch (kind) {
      case LinkKind::Backhaul: return backhaul;
      case LinkKind::IplIntra: return ipl_intra;
      default: return ipl_inter;
    }
  }

  friend bool operator==(const RangeRules&, const RangeRules&) = default;
};

struct Cluster {
  std::string head;               // HAP id
  std::set<std::string> members;  // LAP ids

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct AtnGraph {
  std::vector<Platform> platforms;
  std::vector<AtnLink> links;
  std::vector<Cluster> clusters;

  const Platform* find_platform(const std::string& id) const {
    for (const Platform& p : platforms)
      if (p.id == id) return &p;
    return nullptr;
  }

  const Platform& platform(const std::string& id) const {
    const Platform* p = find_platform(id);
    if (!p) throw LookupError("unknown platform id '" + id + "'");
    return *p;
  }

  AtnLink* find_link(const std::string& x, const std::string& y) {
    const auto [lo, hi] = std::minmax(x, y);
    for (AtnLink& link : links)
      if (link.a == lo && link.b == hi) return &link;
    return nullptr;
  }

  const AtnLink* find_link(const std::string& x, const std::string& y) const {
    return const_cast<AtnGraph*>(this)->find_link(x, y);
  }

  friend bool operator==(const AtnGraph&, const AtnGraph&) = default;
};

// Link kind implied by the endpoint levels; nullopt where no link is defined
// (ground-ground and ground-LAP pairs). Backhaul links tie the ground
// segment, including the abstract satellite gateway, to the HAP backbone.
inline std::optional<LinkKind> link_kind_for(Level x, Level y) {
  if (x == Level::Ground || y == Level::Ground) {
    const Level other = x == Level::Ground ? y : x;
    if (other == Level::Hap) return LinkKind::Backhaul;
    return std::nullopt;
  }
  return x == y ? LinkKind::IplIntra : LinkKind::IplInter;
}

// All and only the kind-compatible pairs within the kind's range. Output is
// sorted by endpoint ids, so the result does not depend on platform order.
inline std::vector<AtnLink> build_links(const std::vector<Platform>& platforms,
                                        const RangeRules& rules) {
  std::vector<AtnLink> links;
  for (std::size_t i = 0; i < platforms.size(); ++i) {
    for (std::size_t j = i + 1; j < platforms.size(); ++j) {
      const auto kind = link_kind_for(platforms[i].level, platforms[j].level);
      if (!kind) continue;
      const RangeRule& rule = rules.for_kind(*kind);
      if (distance(platforms[i].position, platforms[j].position) > rule.max_range_km)
        continue;
      AtnLink link;
      std::tie(link.a, link.b) = std::minmax(platforms[i].id, platforms[j].id);
      link.kind = *kind;
      link.capacity_mbps = rule.capacity_mbps;
      link.max_range_km = rule.max_range_km;
      links.push_back(std::move(link));
    }
  }
  std::sort(links.begin(), links.end(), [](const AtnLink& x, const AtnLink& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return links;
}

// Nearest-in-range-HAP partition; ties break to the lowest HAP id. "In
// range" means an inter-level link exists. A mission LAP with no HAP in
// range is unreachable and aborts the partition; relay-pool LAPs are mobile
// and attach to the nearest HAP outright.
inline std::vector<Cluster> cluster_partition(const std::vector<Platform>& platforms,
                                              const std::vector<AtnLink>& links) {
  std::vector<const Platform*> haps;
  for (const Platform& p : platforms)
    if (p.level == Level::Hap) haps.push_back(&p);
  std::sort(haps.begin(), haps.end(),
            [](const Platform* x, const Platform* y) { return x->id < y->id; });

  std::set<std::pair<std::string, std::string>> inter_pairs;
  for (const AtnLink& link : links)
    if (link.kind == LinkKind::IplInter) inter_pairs.insert({link.a, link.b});
  const auto linked = [&](const std::string& x, const std::string& y) {
    const auto [lo, hi] = std::minmax(x, y);
    return inter_pairs.count({lo, hi}) > 0;
  };

  std::map<std::string, Cluster> by_head;
  for (const Platform* hap : haps) by_head[hap->id] = Cluster{hap->id, {}};

  for (const Platform& p : platforms) {
    if (p.level != Level::Lap) continue;
    if (haps.empty())
      throw PartitionError("cluster_partition: no HAP available for LAP '" + p.id + "'");
    const Platform* best = nullptr;
    double best_d = 0.0;
    for (const Platform* hap : haps) {
      if (!linked(p.id, hap->id)) continue;
      const double d = distance(p.position, hap->position);
      if (!best || d < best_d) {  // haps sorted by id, so ties keep the lowest id
        best = hap;
        best_d = d;
      }
    }
    if (!best) {
      if (p.mobility != MobilityKind::RelayPool)
        throw PartitionError("cluster_partition: LAP '" + p.id +
                             "' is not within inter-level range of any HAP");
      for (const Platform* hap : haps) {
        const double d = distance(p.position, hap->position);
        if (!best || d < best_d) {
          best = hap;
          best_d = d;
        }
      }
    }
    by_head[best->id].members.insert(p.id);
  }

  std::vector<Cluster> clusters;
  clusters.reserve(by_head.size());
  for (auto& [head, cluster] : by_head) clusters.push_back(std::move(cluster));
  return clusters;
}

inline std::vector<Cluster> cluster_partition(const AtnGraph& graph) {
  return cluster_partition(graph.platforms, graph.links);
}

// Links + partition in one pass.
inline AtnGraph build_graph(std::vector<Platform> platforms, const RangeRules& rules) {
  AtnGraph graph;
  graph.platforms = std::move(platforms);
  graph.links = build_links(graph.platforms, rules);
  graph.clusters = cluster_partition(graph.platforms, graph.links);
  return graph;
}

namespace detail {

// Min-hop BFS restricted to a node set, neighbors scanned in ascending id
// order so equal-length paths resolve to the lexicographically lowest one.
// Down links never carry a route.
inline std::optional<std::vector<std::string>> bfs_path(
    const AtnGraph& graph, const std::set<std::string>& nodes,
    const std::string& src, const std::string& dst) {
  if (!nodes.count(src) || !nodes.count(dst)) return std::nullopt;
  if (src == dst) return std::vector<std::string>{src};

  std::map<std::string, std::vector<std::string>> adjacency;
  for (const AtnLink& link : graph.links) {
    if (link.down) continue;
    if (!nodes.count(link.a) || !nodes.count(link.b)) continue;
    adjacency[link.a].push_back(link.b);
    adjacency[link.b].push_back(link.a);
  }
  for (auto& [id, neighbors] : adjacency) std::sort(neighbors.begin(), neighbors.end());

  std::map<std::string, std::string> parent;
  std::deque<std::string> queue{src};
  parent[src] = src;
  while (!queue.empty()) {
    const std::string node = queue.front();
    queue.pop_front();
    if (node == dst) break;
    for (const std::string& next : adjacency[node]) {
      if (parent.count(next)) continue;
      parent[next] = node;
      queue.push_back(next);
    }
  }
  if (!parent.count(dst)) return std::nullopt;

  std::vector<std::string> path{dst};
  while (path.back() != src) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Hierarchical min-hop route. Same-cluster traffic stays on links internal
// to the cluster (members plus head); everything else climbs to the cluster
// heads and crosses the HAP/backhaul backbone. LAP-level shortcuts across
// cluster boundaries are deliberately not taken. Returns nullopt when the
// hierarchy offers no path.
inline std::optional<std::vector<std::string>> route(const AtnGraph& graph,
                                                     const std::string& src,
                                                     const std::string& dst) {
  const Platform& from = graph.platform(src);
  const Platform& to = graph.platform(dst);
  if (src == dst) return std::vector<std::string>{src};

  const auto cluster_of = [&](const std::string& id) -> const Cluster* {
    for (const Cluster& c : graph.clusters)
      if (c.members.count(id)) return &c;
    return nullptr;
  };
  const auto cluster_nodes = [](const Cluster& c) {
    std::set<std::string> nodes(c.members.begin(), c.members.end());
    nodes.insert(c.head);
    return nodes;
  };

  const Cluster* src_cluster = from.level == Level::Lap ? cluster_of(src) : nullptr;
  const Cluster* dst_cluster = to.level == Level::Lap ? cluster_of(dst) : nullptr;

  if (src_cluster && dst_cluster && src_cluster->head == dst_cluster->head)
    return detail::bfs_path(graph, cluster_nodes(*src_cluster), src, dst);
  if (src_cluster && to.level == Level::Hap && src_cluster->head == dst)
    return detail::bfs_path(graph, cluster_nodes(*src_cluster), src, dst);
  if (dst_cluster && from.level == Level::Hap && dst_cluster->head == src)
    return detail::bfs_path(graph, cluster_nodes(*dst_cluster), src, dst);

  // Cross-cluster: ascend to the head, cross the backbone, descend.
  std::set<std::string> backbone;
  for (const Platform& p : graph.platforms)
    if (p.level != Level::Lap) backbone.insert(p.id);

  std::vector<std::string> path;
  std::string backbone_src = src;
  if (src_cluster) {
    auto up = detail::bfs_path(graph, cluster_nodes(*src_cluster), src, src_cluster->head);
    if (!up) return std::nullopt;
    path = *up;
    backbone_src = src_cluster->head;
  } else if (from.level == Level::Lap) {
    return std::nullopt;  // LAP outside every cluster
  } else {
    path.push_back(src);
  }

  const std::string backbone_dst = dst_cluster ? dst_cluster->head : dst;
  if (to.level == Level::Lap && !dst_cluster) return std::nullopt;

  auto across = detail::bfs_path(graph, backbone, backbone_src, backbone_dst);
  if (!across) return std::nullopt;
  path.insert(path.end(), across->begin() + 1, across->end());

  if (dst_cluster) {
    auto down = detail::bfs_path(graph, cluster_nodes(*dst_cluster), dst_cluster->head, dst);
    if (!down) return std::nullopt;
    path.insert(path.end(), down->begin() + 1, down->end());
  }
  return path;
}

}  // namespace atn
