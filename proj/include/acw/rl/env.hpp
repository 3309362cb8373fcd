#pragma once

#include <random>
#include <vector>

#include "acw/kernel.hpp"
#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw::rl {

// An action is a sequence of elementary moves; plain moves have length 1.
// Longer entries are macro actions mined from successful paths.
using Action = std::vector<MoveId>;

std::vector<Action> prime_action_set();

struct EnvConfig {
  int horizon = 200;
  int max_relator_len = 36;
  std::vector<Action> actions = prime_action_set();
};

struct StepResult {
  double reward = 0.0;
  bool done = false;
  bool solved = false;
};

// One trivialization episode: fixed-capacity state, masked prime moves,
// reward -min(10, length) per step and 1000 on reaching a trivial state.
class Env {
 public:
  explicit Env(const EnvConfig& cfg) : cfg_(&cfg) {}

  void reset(const Presentation& start, int seed_index);
  StepResult step(int action);

  // Signed letter codes of both padded relators, scaled by 1/2: 2*L inputs.
  void encode(double* out) const;
  // mask[a] = action keeps every relator within the cap. Macro actions are
  // always legal (their constituents apply with no-op masking).
  void action_mask(bool* out) const;

  int t() const { return t_; }
  int seed_index() const { return seed_index_; }
  const std::vector<int>& episode_actions() const { return episode_actions_; }
  Presentation presentation() const { return presentation_from_fixed(state_); }
  int length() const { return fixed_length(state_); }

  static int encoding_width(const EnvConfig& cfg) {
    return 2 * cfg.max_relator_len;
  }

 private:
  const EnvConfig* cfg_;
  FixedPres state_{};
  int t_ = 0;
  int seed_index_ = -1;
  std::vector<int> episode_actions_;
};

// Initial-state source: one full pass over the dataset in order, then solved
// entries with probability 1/4 and unsolved with 3/4. An empty pool falls
// back to the other.
class Scheduler {
 public:
  Scheduler(size_t dataset_size, uint64_t seed)
      : solved_(dataset_size, false), rng_(seed) {}

  int next();
  void mark_solved(int index);
  bool is_solved(int index) const { return solved_[static_cast<size_t>(index)]; }
  size_t solved_count() const { return solved_count_; }
  size_t size() const { return solved_.size(); }
  bool first_pass_done() const { return first_pass_pos_ >= solved_.size(); }

 private:
  std::vector<bool> solved_;
  size_t solved_count_ = 0;
  size_t first_pass_pos_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace acw::rl
