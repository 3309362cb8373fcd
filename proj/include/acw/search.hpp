#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

enum class SearchAlgo : uint8_t { kBfs = 0, kGreedy = 1 };

// What the node budget counts: states marked visited (enqueued) or states
// expanded (dequeued). Expansion counting lets the frontier grow past the
// budget by one branching factor.
enum class BudgetMode : uint8_t { kMarked = 0, kExpanded = 1 };

struct SearchConfig {
  uint64_t max_nodes = 1'000'000;
  int max_relator_len = kUnboundedRelatorLen;
  MoveSet move_set = MoveSet::kPrime;
  BudgetMode budget = BudgetMode::kMarked;
};

struct SearchResult {
  bool solved = false;
  std::vector<MoveId> path;   // empty when unsolved or start already trivial
  uint64_t nodes_visited = 0; // states marked visited (enqueued)
  int max_length_seen = 0;    // over visited states
};

// Algorithm variants share everything but the frontier discipline: BFS
// dequeues FIFO, greedy dequeues the smallest (presentation length, path
// length) with FIFO tie-breaking beyond that. States are marked visited on
// enqueue, keyed by canonical form; the goal test runs on generation.
SearchResult bfs_trivialize(const Presentation& p, const SearchConfig& cfg);
SearchResult greedy_trivialize(const Presentation& p, const SearchConfig& cfg);
SearchResult search_trivialize(const Presentation& p, SearchAlgo algo,
                               const SearchConfig& cfg);

struct ReplayResult {
  Presentation terminal;
  int max_length_seen = 0;
};

// Applies moves left to right with masking at max_relator_len.
ReplayResult replay(const Presentation& p, const std::vector<MoveId>& path,
                    int max_relator_len = kUnboundedRelatorLen);

struct BatchItem {
  SearchResult result;
  int bound = 0;             // per-presentation relator cap used
  int path_length_increase = 0;  // max length along path minus start length
};

struct BatchSummary {
  uint64_t solved = 0;
  uint64_t total = 0;
  // solved/total histograms keyed by n (index 0 unused when n unknown) and by
  // presentation length.
  std::vector<std::pair<int, std::pair<uint64_t, uint64_t>>> by_n;
  std::vector<std::pair<int, std::pair<uint64_t, uint64_t>>> by_length;
  int max_path_length_increase = 0;  // over solved instances
};

struct BatchOptions {
  SearchAlgo algo = SearchAlgo::kGreedy;
  uint64_t max_nodes = 1'000'000;
  MoveSet move_set = MoveSet::kPrime;
  BudgetMode budget = BudgetMode::kMarked;
  // Relator cap per instance; <= 0 selects the auto bound (the (n, w) formula
  // when an index is supplied, else 2*max(|r1|,|r2|)+2).
  int max_relator_len = 0;
  int threads = 0;  // 0 = all cores
};

// Runs one search per presentation, parallel across presentations.
// `ns` optionally carries the series index n (and w) per presentation for the
// auto bound and the by-n summary; pass an empty vector otherwise.
struct BatchInput {
  Presentation presentation;
  int n = 0;  // 0 = unknown
  Word w;     // empty = unknown
};

std::vector<BatchItem> batch_solve(const std::vector<BatchInput>& inputs,
                                   const BatchOptions& opt,
                                   BatchSummary* summary = nullptr,
                                   std::function<void(size_t)> progress = {});

}  // namespace acw
