#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

// Move-frequency profile over a set of paths (indices 1..12).
struct AnatomyProfile {
  std::array<uint64_t, kNumMoves + 1> counts{};  // index 0 unused
  uint64_t total = 0;

  double frequency(int move) const {
    return total == 0 ? 0.0
                      : static_cast<double>(counts[static_cast<size_t>(move)]) /
                            static_cast<double>(total);
  }
};

AnatomyProfile anatomy(const std::vector<std::vector<int>>& paths);

struct Supermove {
  std::vector<int> moves;     // length >= 2
  uint64_t occurrences = 0;   // total appearances
  uint64_t path_support = 0;  // distinct source paths
};

// Contiguous n-grams (2..max_len) over the paths, ranked by
// (path support, occurrences) descending, ties by shorter then lexicographic.
std::vector<Supermove> mine_supermoves(const std::vector<std::vector<int>>& paths,
                                       int max_len, int top_k,
                                       uint64_t min_path_support = 3);

struct ActionSpace {
  // Base moves 1..12 plus appended macro actions.
  std::vector<std::vector<int>> actions;
  static ActionSpace base();
};

struct AdaptConfig {
  int window = 2;              // compare W(N_{i-n+1}) with W(N_i)
  int max_len = 6;             // longest mined supermove
  int top_k = 5;               // additions per adaptation
  uint64_t min_path_support = 3;
  uint64_t removal_floor = 0;  // macros used <= floor in the window get removed
  int hard_instance_count = 5; // longest paths kept as the hard set
};

struct SettingRecord {
  uint64_t resource = 0;  // e.g. environment interactions
  // solved paths at this setting, keyed by instance id
  std::map<int, std::vector<int>> paths;
};

// One adaptation step: hard instances are those first solved at the latest
// setting, restricted to the longest paths; their top-ranked subsequences are
// appended as macro actions and stale macros (usage at or below the floor in
// the latest window) are dropped. Plain moves are never removed. With fewer
// than `window` settings the space is returned unchanged.
ActionSpace adapt_action_space(const ActionSpace& current,
                               const std::vector<SettingRecord>& history,
                               const AdaptConfig& cfg);

// Six-token stream: letters, a relator separator and an end-of-presentation
// mark.
enum Token : uint8_t {
  kTokX = 0,
  kTokY = 1,
  kTokXinv = 2,
  kTokYinv = 3,
  kTokSep = 4,
  kTokEnd = 5,
};
inline constexpr int kVocabSize = 6;

std::vector<uint8_t> tokenize(const std::vector<Presentation>& ps);
// Throws std::invalid_argument on malformed streams.
std::vector<Presentation> detokenize(const std::vector<uint8_t>& tokens);

struct LmDatasetConfig {
  int phases = 128;        // n
  int chains = 12;         // m presentations per phase
  int moves_per_phase = 1000;
  int max_relator_len = 128;
  uint64_t seed = 0;
};

struct LmRecord {
  Presentation presentation;
  int seed_index = 0;
  int chain = 0;
  int phase = 0;
  int relator_cap = 0;  // l_i drawn for this phase
};

// Random-walk corpus: per seed presentation, `chains` independent chains of
// `phases` phases; phase i draws an integer relator cap uniformly from
// [l + i*l_inc, l + (i+1)*l_inc] (l = longest seed relator,
// l_inc = (max_relator_len - l)/phases) and applies `moves_per_phase` random
// prime moves with no-op masking at that cap, chaining from the previous
// phase. Every phase result is emitted. Deterministic per (seed, seed_index,
// chain). The sink is called from worker threads in arbitrary order.
void gen_lm_dataset(const std::vector<Presentation>& seeds,
                    const LmDatasetConfig& cfg,
                    const std::function<void(const LmRecord&)>& sink,
                    int threads = 0);

}  // namespace acw
