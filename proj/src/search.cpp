#include "acw/search.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <queue>

#include "acw/kernel.hpp"

namespace acw {
namespace {

struct NodeMeta {
  PackedState ordered;  // replayable orientation of this state
  uint32_t parent = UINT32_MAX;
  uint8_t move = 0;
  uint16_t length = 0;
  uint32_t depth = 0;
};

std::vector<MoveId> reconstruct(const std::vector<NodeMeta>& nodes, uint32_t id,
                                MoveSet set, MoveId last) {
  std::vector<MoveId> path;
  for (uint32_t cur = id; nodes[cur].parent != UINT32_MAX;
       cur = nodes[cur].parent) {
    path.push_back(MoveId{set, nodes[cur].move});
  }
  std::reverse(path.begin(), path.end());
  path.push_back(last);
  return path;
}

// Greedy priority key: (presentation length, path length, insertion order)
// packed into one 64-bit value so the heap comparisons stay cheap.
uint64_t greedy_key(int len, uint32_t depth, uint32_t seq) {
  return (static_cast<uint64_t>(len) << 52) |
         (static_cast<uint64_t>(depth & 0x3fffffu) << 30) |
         static_cast<uint64_t>(seq & 0x3fffffffu);
}

SearchResult search_impl(const Presentation& start, SearchAlgo algo,
                         const SearchConfig& cfg) {
  if (cfg.max_relator_len > kMaxPackableLen) {
    // visited keys are 128-bit word codes
    throw std::invalid_argument("search requires a relator bound <= 63");
  }
  if (max_relator_length(start) > cfg.max_relator_len) {
    throw std::invalid_argument("start presentation exceeds the relator bound");
  }
  SearchResult res;
  if (is_trivial_state(start)) {
    res.solved = true;
    res.nodes_visited = 1;
    res.max_length_seen = length(start);
    return res;
  }

  FixedPres s0 = fixed_from_presentation(start);
  VisitedMap visited(1 << 12);
  if (cfg.max_nodes >= (1u << 18)) visited.reserve(cfg.max_nodes + 16);
  std::vector<NodeMeta> nodes;
  nodes.reserve(std::min<uint64_t>(cfg.max_nodes + 16, 1u << 22));

  std::queue<uint32_t> fifo;
  std::priority_queue<std::pair<uint64_t, uint32_t>,
                      std::vector<std::pair<uint64_t, uint32_t>>,
                      std::greater<>>
      heap;
  uint32_t seq = 0;

  auto push = [&](uint32_t id) {
    if (algo == SearchAlgo::kBfs) {
      fifo.push(id);
    } else {
      heap.emplace(greedy_key(nodes[id].length, nodes[id].depth, seq++), id);
    }
  };
  auto pop = [&]() -> uint32_t {
    if (algo == SearchAlgo::kBfs) {
      uint32_t id = fifo.front();
      fifo.pop();
      return id;
    }
    uint32_t id = heap.top().second;
    heap.pop();
    return id;
  };
  auto empty = [&]() {
    return algo == SearchAlgo::kBfs ? fifo.empty() : heap.empty();
  };

  visited.insert_or_get(pack_canonical(s0));
  nodes.push_back(NodeMeta{pack_ordered(s0), UINT32_MAX, 0,
                           static_cast<uint16_t>(fixed_length(s0)), 0});
  res.max_length_seen = fixed_length(s0);
  push(0);

  FixedWord scratch;
  while (!empty() && visited.size() < cfg.max_nodes) {
    uint32_t uid = pop();
    FixedPres u = unpack_state(nodes[uid].ordered);
    uint32_t udepth = nodes[uid].depth;
    for (int i = 1; i <= kNumMoves; ++i) {
      MoveId m{cfg.move_set, i};
      FixedPres v = u;
      if (!apply_masked_fixed(v, m, cfg.max_relator_len, scratch)) continue;
      if (fixed_trivial_state(v)) {
        res.solved = true;
        res.path = reconstruct(nodes, uid, cfg.move_set, m);
        res.nodes_visited = visited.size();
        return res;
      }
      PackedState key = pack_canonical(v);
      if (visited.find(key) != UINT32_MAX) continue;
      if (visited.size() >= cfg.max_nodes) continue;
      visited.insert_or_get(key);
      int vlen = fixed_length(v);
      res.max_length_seen = std::max(res.max_length_seen, vlen);
      nodes.push_back(NodeMeta{pack_ordered(v), uid, static_cast<uint8_t>(i),
                               static_cast<uint8_t>(vlen), udepth + 1});
      push(static_cast<uint32_t>(nodes.size() - 1));
    }
  }
  res.nodes_visited = visited.size();
  return res;
}

}  // namespace

SearchResult bfs_trivialize(const Presentation& p, const SearchConfig& cfg) {
  return search_impl(p, SearchAlgo::kBfs, cfg);
}

SearchResult greedy_trivialize(const Presentation& p, const SearchConfig& cfg) {
  return search_impl(p, SearchAlgo::kGreedy, cfg);
}

SearchResult search_trivialize(const Presentation& p, SearchAlgo algo,
                               const SearchConfig& cfg) {
  return search_impl(p, algo, cfg);
}

ReplayResult replay(const Presentation& p, const std::vector<MoveId>& path,
                    int max_relator_len) {
  FixedPres s = fixed_from_presentation(p);
  FixedWord scratch;
  ReplayResult r;
  r.max_length_seen = fixed_length(s);
  for (MoveId m : path) {
    apply_masked_fixed(s, m, max_relator_len, scratch);
    r.max_length_seen = std::max(r.max_length_seen, fixed_length(s));
  }
  r.terminal = presentation_from_fixed(s);
  return r;
}

std::vector<BatchItem> batch_solve(const std::vector<BatchInput>& inputs,
                                   const BatchOptions& opt,
                                   BatchSummary* summary,
                                   std::function<void(size_t)> progress) {
  std::vector<BatchItem> items(inputs.size());
  int threads = opt.threads > 0 ? opt.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (size_t i = 0; i < inputs.size(); ++i) {
    const BatchInput& in = inputs[i];
    SearchConfig cfg;
    cfg.max_nodes = opt.max_nodes;
    cfg.move_set = opt.move_set;
    cfg.budget = opt.budget;
    if (opt.max_relator_len > 0) {
      cfg.max_relator_len = opt.max_relator_len;
    } else if (in.n > 0 && !in.w.empty()) {
      cfg.max_relator_len = max_relator_bound(in.n, in.w);
    } else {
      cfg.max_relator_len = max_relator_bound(in.presentation);
    }
    BatchItem& item = items[i];
    item.bound = cfg.max_relator_len;
    item.result = search_impl(in.presentation, opt.algo, cfg);
    if (item.result.solved) {
      ReplayResult rep =
          replay(in.presentation, item.result.path, cfg.max_relator_len);
      item.path_length_increase =
          rep.max_length_seen - length(in.presentation);
    }
    if (progress) {
#pragma omp critical
      progress(i);
    }
  }

  if (summary) {
    *summary = BatchSummary{};
    summary->total = inputs.size();
    std::map<int, std::pair<uint64_t, uint64_t>> by_n, by_len;
    for (size_t i = 0; i < inputs.size(); ++i) {
      bool solved = items[i].result.solved;
      summary->solved += solved;
      if (inputs[i].n > 0) {
        auto& e = by_n[inputs[i].n];
        e.second++;
        e.first += solved;
      }
      auto& e = by_len[length(inputs[i].presentation)];
      e.second++;
      e.first += solved;
      if (solved) {
        summary->max_path_length_increase = std::max(
            summary->max_path_length_increase, items[i].path_length_increase);
      }
    }
    summary->by_n.assign(by_n.begin(), by_n.end());
    summary->by_length.assign(by_len.begin(), by_len.end());
  }
  return items;
}

}  // namespace acw
