#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "atn/topology.hpp"

using namespace atn;

namespace {

Platform make_platform(const std::string& id, Level level, double x, double y,
                       double altitude_m = 0.0) {
  Platform p;
  p.id = id;
  p.level = level;
  p.position = {x, y};
  if (level == Level::Hap) p.altitude_m = altitude_m > 0.0 ? altitude_m : 20000.0;
  if (level == Level::Lap) p.altitude_m = altitude_m > 0.0 ? altitude_m : 440.0;
  return p;
}

RangeRules rules(double intra, double inter, double backhaul = 1000.0) {
  RangeRules r;
  r.ipl_intra = {intra, 54.0};
  r.ipl_inter = {inter, 54.0};
  r.backhaul = {backhaul, 155.0};
  return r;
}

int count_kind(const std::vector<AtnLink>& links, LinkKind kind) {
  return static_cast<int>(std::count_if(links.begin(), links.end(),
                                        [&](const AtnLink& l) { return l.kind == kind; }));
}

// Unconstrained min-hop oracle over every up link, ignoring the hierarchy.
std::optional<int> bfs_hops(const AtnGraph& g, const std::string& src, const std::string& dst) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const AtnLink& l : g.links) {
    if (l.down) continue;
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  std::map<std::string, int> dist{{src, 0}};
  std::vector<std::string> queue{src};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::string node = queue[i];
    if (node == dst) return dist[node];
    for (const std::string& next : adj[node]) {
      if (dist.count(next)) continue;
      dist[next] = dist[node] + 1;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("build_links range and kind rules") {
  SECTION("two LAPs within intra range") {
    const auto links = build_links({make_platform("lap-1", Level::Lap, 0, 0),
                                    make_platform("lap-2", Level::Lap, 3, 0)},
                                   rules(5.0, 100.0));
    REQUIRE(links.size() == 1);
    CHECK(links[0].kind == LinkKind::IplIntra);
    CHECK(links[0].a == "lap-1");
    CHECK(links[0].b == "lap-2");
    CHECK(links[0].capacity_mbps == 54.0);
  }
  SECTION("two LAPs out of range") {
    const auto links = build_links({make_platform("lap-1", Level::Lap, 0, 0),
                                    make_platform("lap-2", Level::Lap, 6, 0)},
                                   rules(5.0, 100.0));
    CHECK(links.empty());
  }
  SECTION("one HAP covering three spread-out LAPs") {
    const auto links = build_links({make_platform("hap-1", Level::Hap, 0, 0),
                                    make_platform("lap-1", Level::Lap, 0, 10),
                                    make_platform("lap-2", Level::Lap, 10, 0),
                                    make_platform("lap-3", Level::Lap, -10, 0)},
                                   rules(5.0, 100.0));
    CHECK(count_kind(links, LinkKind::IplInter) == 3);
    CHECK(count_kind(links, LinkKind::IplIntra) == 0);
  }
  SECTION("backhaul joins ground and HAP only") {
    const auto links = build_links({make_platform("gw-1", Level::Ground, 0, 0),
                                    make_platform("hap-1", Level::Hap, 1, 0),
                                    make_platform("lap-1", Level::Lap, 0, 1)},
                                   rules(5.0, 100.0, 50.0));
    CHECK(count_kind(links, LinkKind::Backhaul) == 1);
    REQUIRE(links.size() == 2);  // backhaul + inter; no ground-LAP link
  }
}

TEST_CASE("build_links is independent of platform order") {
  std::mt19937 rng(4711);
  std::uniform_real_distribution<double> coord(0.0, 60.0);
  std::vector<Platform> platforms{make_platform("gw-1", Level::Ground, 30, 30),
                                  make_platform("hap-1", Level::Hap, 30, 30)};
  for (int i = 0; i < 8; ++i)
    platforms.push_back(
        make_platform("lap-" + std::to_string(i), Level::Lap, coord(rng), coord(rng)));
  const auto sorted_links = build_links(platforms, rules(15.0, 80.0));
  std::shuffle(platforms.begin(), platforms.end(), rng);
  CHECK(build_links(platforms, rules(15.0, 80.0)) == sorted_links);
}

TEST_CASE("cluster_partition") {
  SECTION("two HAPs, four LAPs, nearest wins") {
    std::vector<Platform> platforms{
        make_platform("hap-1", Level::Hap, 0, 0), make_platform("hap-2", Level::Hap, 100, 0),
        make_platform("lap-1", Level::Lap, -10, 0), make_platform("lap-2", Level::Lap, 10, 0),
        make_platform("lap-3", Level::Lap, 90, 0), make_platform("lap-4", Level::Lap, 110, 0)};
    const auto links = build_links(platforms, rules(5.0, 60.0));
    const auto clusters = cluster_partition(platforms, links);
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].head == "hap-1");
    CHECK(clusters[0].members == std::set<std::string>{"lap-1", "lap-2"});
    CHECK(clusters[1].head == "hap-2");
    CHECK(clusters[1].members == std::set<std::string>{"lap-3", "lap-4"});

    // Oracle: plain nearest-neighbor assignment.
    for (const Platform& p : platforms) {
      if (p.level != Level::Lap) continue;
      const bool near_first = distance(p.position, platforms[0].position) <
                              distance(p.position, platforms[1].position);
      const std::string expected = near_first ? "hap-1" : "hap-2";
      for (const Cluster& c : clusters)
        if (c.members.count(p.id)) CHECK(c.head == expected);
    }
  }
  SECTION("single HAP gets every LAP") {
    std::vector<Platform> platforms{make_platform("hap-1", Level::Hap, 0, 0)};
    for (int i = 0; i < 5; ++i)
      platforms.push_back(make_platform("lap-" + std::to_string(i), Level::Lap, i, 1));
    const auto links = build_links(platforms, rules(20.0, 50.0));
    const auto clusters = cluster_partition(platforms, links);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].members.size() == 5);
  }
  SECTION("equidistant LAP goes to the lowest HAP id") {
    std::vector<Platform> platforms{make_platform("hap-1", Level::Hap, 0, 0),
                                    make_platform("hap-2", Level::Hap, 100, 0),
                                    make_platform("lap-1", Level::Lap, 50, 0)};
    const auto links = build_links(platforms, rules(5.0, 60.0));
    const auto clusters = cluster_partition(platforms, links);
    CHECK(clusters[0].head == "hap-1");
    CHECK(clusters[0].members.count("lap-1") == 1);
    CHECK(clusters[1].members.empty());
  }
  SECTION("unreachable mission LAP aborts with its id") {
    std::vector<Platform> platforms{make_platform("hap-1", Level::Hap, 0, 0),
                                    make_platform("lap-far", Level::Lap, 500, 0)};
    const auto links = build_links(platforms, rules(5.0, 60.0));
    CHECK_THROWS_WITH(cluster_partition(platforms, links),
                      Catch::Matchers::ContainsSubstring("lap-far"));
  }
  SECTION("partition is total and disjoint") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> coord(0.0, 120.0);
    for (int round = 0; round < 20; ++round) {
      std::vector<Platform> platforms{make_platform("hap-1", Level::Hap, 30, 60),
                                      make_platform("hap-2", Level::Hap, 90, 60)};
      int laps = 0;
      for (int i = 0; i < 10; ++i) {
        const double x = coord(rng), y = coord(rng);
        // keep every LAP within inter range (120 km diagonal fits)
        platforms.push_back(make_platform("lap-" + std::to_string(i), Level::Lap, x, y));
        ++laps;
      }
      const auto links = build_links(platforms, rules(10.0, 200.0));
      const auto clusters = cluster_partition(platforms, links);
      std::set<std::string> seen;
      std::size_t total = 0;
      for (const Cluster& c : clusters) {
        total += c.members.size();
        for (const std::string& id : c.members) CHECK(seen.insert(id).second);
      }
      CHECK(total == static_cast<std::size_t>(laps));
    }
  }
}

TEST_CASE("hierarchical routing") {
  // Two clusters bridged at HAP level and, in one variant, by a direct
  // LAP-LAP link that the strict hierarchy must ignore.
  const auto graph_with = [&](double intra_range) {
    return build_graph({make_platform("gw-1", Level::Ground, 50, 0),
                        make_platform("hap-1", Level::Hap, 0, 0),
                        make_platform("hap-2", Level::Hap, 100, 0),
                        make_platform("lap-1", Level::Lap, 0, 10),
                        make_platform("lap-2", Level::Lap, 100, 10)},
                       rules(intra_range, 60.0, 80.0));
  };

  SECTION("trivial and single-cluster routes") {
    const AtnGraph g = graph_with(120.0);
    CHECK(route(g, "lap-1", "lap-1") == std::vector<std::string>{"lap-1"});
    CHECK_THROWS_AS(route(g, "lap-1", "nope"), LookupError);
  }

  SECTION("direct intra-cluster link") {
    const AtnGraph g = build_graph({make_platform("hap-1", Level::Hap, 0, 0),
                                    make_platform("lap-1", Level::Lap, 0, 5),
                                    make_platform("lap-2", Level::Lap, 4, 5)},
                                   rules(10.0, 50.0));
    CHECK(route(g, "lap-1", "lap-2") == std::vector<std::string>{"lap-1", "lap-2"});
  }

  SECTION("cross-cluster route climbs to the heads") {
    const AtnGraph g = graph_with(120.0);  // HAP-HAP link exists, LAP bridge too
    REQUIRE(g.find_link("lap-1", "lap-2") != nullptr);  // bridge present...
    const auto path = route(g, "lap-1", "lap-2");
    REQUIRE(path.has_value());
    // ...but the strict hierarchy never takes it.
    CHECK(*path == std::vector<std::string>{"lap-1", "hap-1", "hap-2", "lap-2"});
  }

  SECTION("cross-cluster route without a HAP-HAP link crosses the backhaul") {
    const AtnGraph g = graph_with(20.0);  // no HAP-HAP, no LAP-LAP link
    const auto path = route(g, "lap-1", "lap-2");
    REQUIRE(path.has_value());
    CHECK(*path == std::vector<std::string>{"lap-1", "hap-1", "gw-1", "hap-2", "lap-2"});
  }

  SECTION("no path when the backbone is disconnected") {
    const AtnGraph g = build_graph({make_platform("hap-1", Level::Hap, 0, 0),
                                    make_platform("hap-2", Level::Hap, 300, 0),
                                    make_platform("lap-1", Level::Lap, 0, 10),
                                    make_platform("lap-2", Level::Lap, 300, 10)},
                                   rules(20.0, 60.0));
    CHECK_FALSE(route(g, "lap-1", "lap-2").has_value());
  }

  SECTION("down links carry no route") {
    AtnGraph g = build_graph({make_platform("hap-1", Level::Hap, 2, 0),
                              make_platform("lap-1", Level::Lap, 0, 5),
                              make_platform("lap-2", Level::Lap, 4, 5)},
                             rules(10.0, 50.0));
    g.find_link("lap-1", "lap-2")->down = true;
    const auto path = route(g, "lap-1", "lap-2");
    REQUIRE(path.has_value());
    CHECK(*path == std::vector<std::string>{"lap-1", "hap-1", "lap-2"});
  }
}

TEST_CASE("route properties against the unconstrained BFS oracle") {
  std::mt19937 rng(60301);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  int routed = 0;
  for (int round = 0; round < 40; ++round) {
    std::vector<Platform> platforms{make_platform("gw-1", Level::Ground, 50, 50),
                                    make_platform("hap-1", Level::Hap, 25, 50),
                                    make_platform("hap-2", Level::Hap, 75, 50)};
    for (int i = 0; i < 6; ++i)
      platforms.push_back(
          make_platform("lap-" + std::to_string(i), Level::Lap, coord(rng), coord(rng)));
    const AtnGraph g = build_graph(platforms, rules(30.0, 120.0, 60.0));
    for (const Platform& src : g.platforms) {
      for (const Platform& dst : g.platforms) {
        const auto path = route(g, src.id, dst.id);
        if (!path) continue;
        ++routed;
        // Simple path: no repeated node.
        std::set<std::string> unique(path->begin(), path->end());
        CHECK(unique.size() == path->size());
        // Consecutive hops are real, up links.
        for (std::size_t i = 0; i + 1 < path->size(); ++i) {
          const AtnLink* link = g.find_link((*path)[i], (*path)[i + 1]);
          REQUIRE(link != nullptr);
          CHECK_FALSE(link->down);
        }
        // The hierarchy never beats the unconstrained min-hop length.
        const auto oracle = bfs_hops(g, src.id, dst.id);
        REQUIRE(oracle.has_value());
        CHECK(static_cast<int>(path->size()) - 1 >= *oracle);
      }
    }
  }
  CHECK(routed > 100);  // the property actually exercised routes
}
