#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acw/search.hpp"
#include "acw/series.hpp"
#include "helpers.hpp"

using namespace acw;
using acw::test::random_presentation;

static Presentation P(const char* s) { return parse_presentation(s); }

TEST_CASE("trivial start") {
  SearchConfig cfg;
  cfg.max_relator_len = 7;
  for (SearchAlgo algo : {SearchAlgo::kBfs, SearchAlgo::kGreedy}) {
    SearchResult r = search_trivialize(P("x,y"), algo, cfg);
    CHECK(r.solved);
    CHECK(r.path.empty());
  }
}

TEST_CASE("replay basics") {
  Presentation p = gen_AK(3);
  ReplayResult r = replay(p, {});
  CHECK(r.terminal == p);
  CHECK(r.max_length_seen == 13);

  // path then inverse-reversed path is the identity
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Presentation q = random_presentation(rng, 8);
    std::vector<MoveId> path;
    for (int k = 0; k < 12; ++k) {
      path.push_back(MoveId{MoveSet::kPrime, 1 + static_cast<int>(rng() % 12)});
    }
    std::vector<MoveId> inv;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      inv.push_back(inverse_move(*it));
    }
    std::vector<MoveId> both = path;
    both.insert(both.end(), inv.begin(), inv.end());
    CHECK(replay(q, both).terminal == q);
  }
}

TEST_CASE("easy instances solve and replay to a trivial state") {
  auto ds = gen_MS_dataset(1, 4);
  SearchConfig cfg;
  cfg.max_nodes = 200000;
  for (SearchAlgo algo : {SearchAlgo::kBfs, SearchAlgo::kGreedy}) {
    for (auto& [idx, p] : ds) {
      cfg.max_relator_len = max_relator_bound(idx.n, idx.w);
      SearchResult r = search_trivialize(p, algo, cfg);
      if (algo == SearchAlgo::kGreedy) REQUIRE(r.solved);
      CHECK(r.nodes_visited <= cfg.max_nodes);
      if (!r.solved) continue;
      ReplayResult rep = replay(p, r.path, cfg.max_relator_len);
      CHECK(is_trivial_state(rep.terminal));
      CHECK(rep.max_length_seen <= 2 * cfg.max_relator_len);
    }
  }
}

TEST_CASE("greedy solves AK(2), BFS path is never longer when both solve") {
  SearchConfig cfg;
  cfg.max_relator_len = max_relator_bound(gen_AK(2));
  SearchResult g = greedy_trivialize(gen_AK(2), cfg);
  CHECK(g.solved);
  CHECK(is_trivial_state(replay(gen_AK(2), g.path, cfg.max_relator_len).terminal));

  auto ds = gen_MS_dataset(1, 3);
  for (auto& [idx, p] : ds) {
    SearchConfig c2;
    c2.max_relator_len = max_relator_bound(idx.n, idx.w);
    SearchResult bfs = bfs_trivialize(p, c2);
    SearchResult greedy = greedy_trivialize(p, c2);
    if (bfs.solved && greedy.solved) {
      CHECK(bfs.path.size() <= greedy.path.size());
    }
  }
}

TEST_CASE("unsolvable within budget reports unsolved") {
  SearchConfig cfg;
  cfg.max_nodes = 2000;
  cfg.max_relator_len = 20;
  SearchResult r = greedy_trivialize(gen_AK(3), cfg);
  CHECK(!r.solved);
  CHECK(r.nodes_visited <= 2000);
  CHECK(r.path.empty());
}

TEST_CASE("batch solve summary") {
  auto ds = gen_MS_dataset(1, 4);
  std::vector<BatchInput> inputs;
  for (auto& [idx, p] : ds) inputs.push_back(BatchInput{p, idx.n, idx.w});
  BatchOptions opt;
  opt.algo = SearchAlgo::kGreedy;
  opt.max_nodes = 200000;
  BatchSummary summary;
  auto items = batch_solve(inputs, opt, &summary);
  CHECK(summary.total == inputs.size());
  CHECK(summary.solved == inputs.size());  // all n=1 instances solve
  CHECK(summary.by_n.size() == 1);
  CHECK(summary.by_n[0].first == 1);
  for (auto& item : items) {
    CHECK(item.bound == 12);
    CHECK(item.result.solved);
    CHECK(item.path_length_increase >= 0);
  }
}

TEST_CASE("bound cap guards the packed representation") {
  SearchConfig cfg;
  cfg.max_relator_len = 100;
  CHECK_THROWS_AS(greedy_trivialize(gen_AK(3), cfg), std::invalid_argument);
}
