#include "acw/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "acw/kernel.hpp"

namespace acw {

AnatomyProfile anatomy(const std::vector<std::vector<int>>& paths) {
  AnatomyProfile prof;
  for (const auto& path : paths) {
    for (int m : path) {
      if (m < 1 || m > kNumMoves) throw std::out_of_range("move index");
      prof.counts[static_cast<size_t>(m)]++;
      prof.total++;
    }
  }
  return prof;
}

std::vector<Supermove> mine_supermoves(const std::vector<std::vector<int>>& paths,
                                       int max_len, int top_k,
                                       uint64_t min_path_support) {
  if (max_len < 2) throw std::invalid_argument("max_len must be >= 2");
  std::map<std::vector<int>, std::pair<uint64_t, std::set<size_t>>> grams;
  for (size_t p = 0; p < paths.size(); ++p) {
    const auto& path = paths[p];
    for (size_t i = 0; i < path.size(); ++i) {
      for (int len = 2; len <= max_len && i + static_cast<size_t>(len) <= path.size(); ++len) {
        std::vector<int> g(path.begin() + static_cast<long>(i),
                           path.begin() + static_cast<long>(i) + len);
        auto& e = grams[std::move(g)];
        e.first++;
        e.second.insert(p);
      }
    }
  }
  std::vector<Supermove> out;
  for (auto& [g, e] : grams) {
    if (e.second.size() < min_path_support) continue;
    out.push_back(Supermove{g, e.first, e.second.size()});
  }
  std::sort(out.begin(), out.end(), [](const Supermove& a, const Supermove& b) {
    if (a.path_support != b.path_support) return a.path_support > b.path_support;
    if (a.occurrences != b.occurrences) return a.occurrences > b.occurrences;
    if (a.moves.size() != b.moves.size()) return a.moves.size() < b.moves.size();
    return a.moves < b.moves;
  });
  if (top_k >= 0 && out.size() > static_cast<size_t>(top_k)) {
    out.resize(static_cast<size_t>(top_k));
  }
  return out;
}

ActionSpace ActionSpace::base() {
  ActionSpace s;
  for (int i = 1; i <= kNumMoves; ++i) s.actions.push_back({i});
  return s;
}

ActionSpace adapt_action_space(const ActionSpace& current,
                               const std::vector<SettingRecord>& history,
                               const AdaptConfig& cfg) {
  if (static_cast<int>(history.size()) < cfg.window) return current;

  const SettingRecord& latest = history.back();
  // hard instances: solved at the latest setting and at no earlier one
  std::set<int> earlier;
  for (size_t i = 0; i + 1 < history.size(); ++i) {
    for (const auto& [id, path] : history[i].paths) earlier.insert(id);
  }
  std::vector<std::pair<size_t, int>> hard;  // (path length, id)
  for (const auto& [id, path] : latest.paths) {
    if (!earlier.count(id)) hard.emplace_back(path.size(), id);
  }
  std::sort(hard.rbegin(), hard.rend());
  if (static_cast<int>(hard.size()) > cfg.hard_instance_count) {
    hard.resize(static_cast<size_t>(cfg.hard_instance_count));
  }
  std::vector<std::vector<int>> hard_paths;
  for (auto& [len, id] : hard) hard_paths.push_back(latest.paths.at(id));

  // usage of existing macros over the window's solutions
  std::map<std::vector<int>, uint64_t> usage;
  for (size_t a = kNumMoves; a < current.actions.size(); ++a) {
    usage[current.actions[a]] = 0;
  }
  size_t first = history.size() - static_cast<size_t>(cfg.window);
  for (size_t i = first; i < history.size(); ++i) {
    for (const auto& [id, path] : history[i].paths) {
      for (auto& [macro, count] : usage) {
        if (macro.size() > path.size()) continue;
        for (size_t j = 0; j + macro.size() <= path.size(); ++j) {
          if (std::equal(macro.begin(), macro.end(), path.begin() + static_cast<long>(j))) {
            count++;
          }
        }
      }
    }
  }

  ActionSpace next;
  for (size_t a = 0; a < current.actions.size(); ++a) {
    if (a < kNumMoves) {
      next.actions.push_back(current.actions[a]);  // plain moves stay
    } else if (usage[current.actions[a]] > cfg.removal_floor) {
      next.actions.push_back(current.actions[a]);
    }
  }
  std::set<std::vector<int>> present(next.actions.begin(), next.actions.end());
  for (const Supermove& sm :
       mine_supermoves(hard_paths, cfg.max_len, cfg.top_k, cfg.min_path_support)) {
    if (present.insert(sm.moves).second) next.actions.push_back(sm.moves);
  }
  return next;
}

std::vector<uint8_t> tokenize(const std::vector<Presentation>& ps) {
  std::vector<uint8_t> out;
  for (const Presentation& p : ps) {
    for (char c : p.r1) out.push_back(static_cast<uint8_t>(c));
    out.push_back(kTokSep);
    for (char c : p.r2) out.push_back(static_cast<uint8_t>(c));
    out.push_back(kTokEnd);
  }
  return out;
}

std::vector<Presentation> detokenize(const std::vector<uint8_t>& tokens) {
  std::vector<Presentation> out;
  Word r1, r2;
  bool in_second = false;
  for (uint8_t t : tokens) {
    switch (t) {
      case kTokSep:
        if (in_second) throw std::invalid_argument("duplicate separator");
        in_second = true;
        break;
      case kTokEnd:
        if (!in_second) throw std::invalid_argument("end before separator");
        out.push_back(Presentation{r1, r2});
        r1.clear();
        r2.clear();
        in_second = false;
        break;
      default:
        if (t > 3) throw std::invalid_argument("bad token");
        (in_second ? r2 : r1).push_back(static_cast<char>(t));
    }
  }
  if (in_second || !r1.empty()) throw std::invalid_argument("truncated stream");
  return out;
}

void gen_lm_dataset(const std::vector<Presentation>& seeds,
                    const LmDatasetConfig& cfg,
                    const std::function<void(const LmRecord&)>& sink,
                    int threads) {
  if (cfg.phases < 1 || cfg.chains < 1) {
    throw std::invalid_argument("phases and chains must be positive");
  }
  for (const Presentation& p : seeds) {
    if (max_relator_length(p) > cfg.max_relator_len) {
      throw std::invalid_argument("seed relator exceeds max_relator_len");
    }
  }
  if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for collapse(2) schedule(dynamic, 1) num_threads(threads)
  for (size_t s = 0; s < seeds.size(); ++s) {
    for (int chain = 0; chain < cfg.chains; ++chain) {
      // one deterministic stream per (run seed, presentation, chain)
      std::mt19937_64 rng(mix64(cfg.seed ^ mix64(s * 1315423911u + 0x9e37u) ^
                                mix64(static_cast<uint64_t>(chain) + 0xabcdu)));
      const Presentation& p0 = seeds[s];
      int l = max_relator_length(p0);
      double l_inc = static_cast<double>(cfg.max_relator_len - l) /
                     static_cast<double>(cfg.phases);
      FixedPres state = fixed_from_presentation(p0);
      FixedWord scratch;
      for (int phase = 0; phase < cfg.phases; ++phase) {
        int lo = static_cast<int>(l + phase * l_inc);
        int hi = static_cast<int>(l + (phase + 1) * l_inc);
        int cap = std::uniform_int_distribution<int>(lo, hi)(rng);
        std::uniform_int_distribution<int> pick(1, kNumMoves);
        for (int k = 0; k < cfg.moves_per_phase; ++k) {
          apply_masked_fixed(state, MoveId{MoveSet::kPrime, pick(rng)}, cap,
                             scratch);
        }
        LmRecord rec;
        rec.presentation = presentation_from_fixed(state);
        rec.seed_index = static_cast<int>(s);
        rec.chain = chain;
        rec.phase = phase;
        rec.relator_cap = cap;
        sink(rec);
      }
    }
  }
}

}  // namespace acw
