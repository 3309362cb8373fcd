#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <filesystem>
#include <map>
#include <set>

#include "acw/topology.hpp"

using namespace acw;

namespace {

// Brute-force minimax-over-paths oracle on a hand-built graph.
int minimax_to_base(const FilteredGraph& g, uint32_t target) {
  struct Edge {
    uint32_t a, b;
    int level;
  };
  std::vector<Edge> edges;
  for (int level = 0; level < static_cast<int>(g.edges_by_level.size()); ++level) {
    for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
      edges.push_back({a, b, level});
    }
  }
  if (target == g.base) return g.filt[g.base];
  // try every threshold in increasing order; DFS within the subgraph
  for (int t = g.filt[target]; t <= g.lmax; ++t) {
    std::vector<uint32_t> stack{g.base};
    std::set<uint32_t> seen{g.base};
    while (!stack.empty()) {
      uint32_t u = stack.back();
      stack.pop_back();
      if (u == target) return t;
      for (const Edge& e : edges) {
        if (e.level > t) continue;
        uint32_t other = e.a == u ? e.b : (e.b == u ? e.a : UINT32_MAX);
        if (other != UINT32_MAX && seen.insert(other).second) {
          stack.push_back(other);
        }
      }
    }
  }
  return kConnInfinity;
}

FilteredGraph toy_graph(const std::vector<int>& filts,
                        const std::vector<std::tuple<int, int>>& edges) {
  FilteredGraph g;
  g.base = 0;
  g.lmax = *std::max_element(filts.begin(), filts.end());
  g.vertices.resize(filts.size());
  for (int f : filts) g.filt.push_back(static_cast<uint8_t>(f));
  g.edges_by_level.resize(static_cast<size_t>(g.lmax) + 1);
  for (auto [a, b] : edges) {
    int level = std::max(filts[static_cast<size_t>(a)], filts[static_cast<size_t>(b)]);
    g.edges_by_level[static_cast<size_t>(level)].emplace_back(
        std::min(a, b), std::max(a, b));
  }
  return g;
}

}  // namespace

TEST_CASE("connectivity values on a toy path graph") {
  // a(2) - b(5) - c(3), base a: reaching c needs level 5
  FilteredGraph g = toy_graph({2, 5, 3}, {{0, 1}, {1, 2}});
  auto conn = connectivity_values(g);
  CHECK(conn[0] == 2);
  CHECK(conn[1] == 5);
  CHECK(conn[2] == 5);
  CHECK(minimax_to_base(g, 2) == 5);

  // isolated component: c has isolation 2 (bar and literal grouping agree)
  auto comps = isolated_components(g, conn);
  auto literal = isolated_components_literal(g, conn);
  REQUIRE(literal.size() == comps.size());
  CHECK(literal[0].conn == comps[0].conn);
  CHECK(literal[0].isolation == comps[0].isolation);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].conn == 5);
  CHECK(comps[0].birth == 3);
  CHECK(comps[0].members == 1);
  CHECK(comps[0].isolation == 2);
}

TEST_CASE("connectivity oracle on random toy graphs") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    std::vector<int> filts{2};
    for (int i = 1; i < n; ++i) filts.push_back(2 + static_cast<int>(rng() % 7));
    std::vector<std::tuple<int, int>> edges;
    // random connected-ish graph: chain plus extras
    for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng() % i), i);
    for (int k = 0; k < n / 2; ++k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    FilteredGraph g = toy_graph(filts, edges);
    auto conn = connectivity_values(g);
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(conn[v] == minimax_to_base(g, v));
      CHECK(conn[v] >= g.filt[v]);
    }
  }
}

TEST_CASE("no isolated vertices means no components") {
  FilteredGraph g = toy_graph({2, 3, 4}, {{0, 1}, {1, 2}});
  auto conn = connectivity_values(g);
  CHECK(isolated_components(g, conn).empty());
  CHECK(isolated_components_literal(g, conn).empty());
}

TEST_CASE("sibling clusters merging early yield two bars but one literal component") {
  // base a(2) -- b(7) -- c(3); clusters around c(3) and d(4) join through
  // u(5) at level 5, then reach the base together at level 7
  FilteredGraph g =
      toy_graph({2, 7, 3, 4, 5}, {{0, 1}, {1, 2}, {2, 4}, {3, 4}});
  auto conn = connectivity_values(g);
  CHECK(conn[2] == 7);
  CHECK(conn[3] == 7);
  CHECK(conn[4] == 7);
  auto bars = isolated_components(g, conn);
  REQUIRE(bars.size() == 2);
  // both bars belong to conn-7 vertices; the sibling bar closes at level 5
  CHECK(bars[0].conn == 7);
  CHECK(bars[0].death == 7);  // the survivor dies into the base
  CHECK(bars[0].birth == 3);
  CHECK(bars[0].isolation == 4);
  CHECK(bars[1].conn == 7);
  CHECK(bars[1].death == 5);  // d's cluster dies into c's at level 5
  CHECK(bars[1].birth == 4);
  CHECK(bars[1].isolation == 1);
  auto literal = isolated_components_literal(g, conn);
  REQUIRE(literal.size() == 1);
  CHECK(literal[0].conn == 7);
  CHECK(literal[0].members == 3);
  CHECK(literal[0].isolation == 4);
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (MoveSet set : {MoveSet::kClassical, MoveSet::kPrime}) {
    for (int lmax : {3, 5, 7}) {
      FilteredGraph s = enumerate_identity_component_serial(lmax, set);
      FilteredGraph p = enumerate_identity_component(lmax, set, 2);
      REQUIRE(s.vertices.size() == p.vertices.size());
      REQUIRE(s.edge_count() == p.edge_count());
      // same states with the same filtrations (ids may differ)
      auto key_filts = [](const FilteredGraph& g) {
        std::vector<std::pair<PackedState, uint8_t>> kv;
        for (uint32_t v = 0; v < g.vertices.size(); ++v) {
          kv.emplace_back(g.vertices[v], g.filt[v]);
        }
        std::sort(kv.begin(), kv.end(), [](const auto& a, const auto& b) {
          return a.first.v < b.first.v;
        });
        return kv;
      };
      CHECK(key_filts(s) == key_filts(p));
      // same edges as canonical state pairs
      auto edge_keys = [](const FilteredGraph& g) {
        std::vector<std::pair<std::array<uint64_t, 4>, std::array<uint64_t, 4>>> out;
        for (const auto& bucket : g.edges_by_level) {
          for (auto [a, b] : bucket) {
            auto ka = g.vertices[a].v, kb = g.vertices[b].v;
            if (kb < ka) std::swap(ka, kb);
            out.emplace_back(ka, kb);
          }
        }
        std::sort(out.begin(), out.end());
        return out;
      };
      CHECK(edge_keys(s) == edge_keys(p));
    }
  }
}

TEST_CASE("small table rows match the published values") {
  // prime rows 3..8
  auto prime = persistence_table(8, MoveSet::kPrime, 2);
  const uint64_t pv[] = {36, 100, 388, 884, 3892, 9172};
  const uint64_t pe[] = {40, 152, 712, 1528, 6984, 16728};
  for (size_t i = 0; i < 6; ++i) {
    CHECK(prime[i].l == static_cast<int>(i) + 3);
    CHECK(prime[i].v == pv[i]);
    CHECK(prime[i].e == pe[i]);
    CHECK(prime[i].ic1 == 3);
    CHECK(prime[i].ic2 == 0);
    CHECK(prime[i].ic3 == 0);
  }
  // classical rows: v and ic columns
  auto classical = persistence_table(8, MoveSet::kClassical, 2);
  for (size_t i = 0; i < 6; ++i) {
    CHECK(classical[i].v == pv[i]);
    CHECK(classical[i].ic1 == 0);
    CHECK(classical[i].ic2 == 0);
    CHECK(classical[i].ic3 == 0);
    // classical edge set = prime edges plus one inversion edge per vertex
    CHECK(classical[i].e == pe[i] + pv[i]);
  }
}

TEST_CASE("union-find conn equals iterated first appearance") {
  for (MoveSet set : {MoveSet::kClassical, MoveSet::kPrime}) {
    int lmax = 6;
    FilteredGraph g = enumerate_identity_component(lmax, set, 2);
    auto conn = connectivity_values(g);
    std::map<std::array<uint64_t, 4>, int> first_seen;
    for (int l = 2; l <= lmax; ++l) {
      FilteredGraph gl = enumerate_identity_component_serial(l, set);
      for (const PackedState& key : gl.vertices) {
        first_seen.emplace(key.v, l);
      }
    }
    REQUIRE(first_seen.size() == g.vertices.size());
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(first_seen.at(g.vertices[v].v) == conn[v]);
    }
  }
}

TEST_CASE("monotone cumulative counts and edge levels") {
  FilteredGraph g = enumerate_identity_component(7, MoveSet::kPrime, 2);
  for (int level = 0; level < static_cast<int>(g.edges_by_level.size()); ++level) {
    for (auto [a, b] : g.edges_by_level[static_cast<size_t>(level)]) {
      CHECK(level == std::max<int>(g.filt[a], g.filt[b]));
      CHECK(a != b);
    }
  }
  auto rows = persistence_table(g);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].v >= rows[i - 1].v);
    CHECK(rows[i].e >= rows[i - 1].e);
    CHECK(rows[i].ic1 >= rows[i - 1].ic1);
    CHECK(rows[i].ic2 >= rows[i - 1].ic2);
    CHECK(rows[i].ic3 >= rows[i - 1].ic3);
  }
}

TEST_CASE("graph dump round-trips the table") {
  FilteredGraph g = enumerate_identity_component(6, MoveSet::kPrime, 2);
  std::string dir = (std::filesystem::temp_directory_path() / "acw_dump_test").string();
  dump_graph(g, dir);
  FilteredGraph loaded = load_graph(dir);
  CHECK(loaded.vertices.size() == g.vertices.size());
  CHECK(loaded.edge_count() == g.edge_count());
  auto a = persistence_table(g);
  auto b = persistence_table(loaded);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].v == b[i].v);
    CHECK(a[i].e == b[i].e);
    CHECK(a[i].ic1 == b[i].ic1);
  }
  std::filesystem::remove_all(dir);
}
