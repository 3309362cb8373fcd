#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "acw/neighborhoods.hpp"
#include "acw/series.hpp"
#include "helpers.hpp"

using namespace acw;
using acw::test::random_presentation;

static Presentation P(const char* s) { return parse_presentation(s); }

namespace {

// Independent oracle: every move string of length <= k, applied directly.
std::set<std::pair<Word, Word>> brute_neighborhood(const Presentation& p, int k) {
  std::set<std::pair<Word, Word>> out;
  std::vector<Presentation> layer{as_presentation(canonicalize(p))};
  auto add = [&](const Presentation& q) {
    CanonicalForm c = canonicalize(q);
    return out.insert({c.first, c.second}).second;
  };
  add(p);
  for (int depth = 0; depth < k; ++depth) {
    std::vector<Presentation> next;
    for (const Presentation& u : layer) {
      for (int m = 1; m <= kNumMoves; ++m) {
        Presentation v = apply_move(u, MoveId{MoveSet::kPrime, m});
        next.push_back(v);
        add(v);
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("depth zero and branching bound") {
  CHECK(k_neighborhood_size(gen_AK(3), 0) == 1);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    Presentation p = random_presentation(rng, 10);
    CHECK(k_neighborhood_size(p, 1) <= 13);
  }
}

TEST_CASE("matches the brute-force oracle at small depth") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    Presentation p = random_presentation(rng, 6);
    auto brute = brute_neighborhood(p, 2);
    auto bfs = k_neighborhood(p, 2);
    CHECK(bfs.size() == brute.size());
    for (const CanonicalForm& c : bfs) {
      CHECK(brute.count({c.first, c.second}) == 1);
    }
  }
}

TEST_CASE("monotone growth and swap invariance") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    Presentation p = random_presentation(rng, 7);
    uint64_t prev = 0;
    for (int k = 0; k <= 3; ++k) {
      uint64_t s = k_neighborhood_size(p, k);
      CHECK(s >= prev);
      prev = s;
    }
    CHECK(k_neighborhood_size(Presentation{p.r2, p.r1}, 2) ==
          k_neighborhood_size(p, 2));
  }
}

TEST_CASE("membership symmetry") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 10; ++i) {
    Presentation p = random_presentation(rng, 6);
    auto nb = k_neighborhood(p, 2);
    // spot-check a few members
    for (size_t j = 0; j < nb.size(); j += std::max<size_t>(1, nb.size() / 5)) {
      Presentation q = as_presentation(nb[j]);
      auto back = k_neighborhood(q, 2);
      CanonicalForm pc = canonicalize(p);
      CHECK(std::find(back.begin(), back.end(), pc) != back.end());
    }
  }
}

TEST_CASE("stats of a degenerate dataset") {
  auto st = neighborhood_stats({42, 42, 42});
  CHECK(st.min == 42);
  CHECK(st.max == 42);
  CHECK(st.mean == 42.0);
  CHECK(st.median == 42);
  CHECK(st.distinct == 1);
  auto h = st.histogram(6);
  CHECK(h[0] == 3);
}

TEST_CASE("band report") {
  std::vector<uint64_t> sizes = {100, 200, 300, 400};
  std::vector<bool> labels = {true, false, true, false};
  auto rep = band_report(sizes, labels, {{150, 250}, {350, 450}});
  CHECK(rep.solved_total == 2);
  CHECK(rep.unsolved_total == 2);
  CHECK(rep.bands[0].unsolved_inside == 1);
  CHECK(rep.bands[1].unsolved_inside == 1);
  CHECK(rep.solved_outside_fraction == 1.0);
  CHECK(rep.unsolved_inside_fraction == 1.0);
  CHECK_THROWS(band_report(sizes, {true}));
}

TEST_CASE("parallel sweep equals serial") {
  auto ds = gen_MS_dataset(1, 3);
  std::vector<Presentation> seeds;
  for (auto& [idx, p] : ds) seeds.push_back(p);
  auto a = neighborhood_sizes(seeds, 3, MoveSet::kPrime, 1);
  auto b = neighborhood_sizes(seeds, 3, MoveSet::kPrime, 2);
  CHECK(a == b);
}
