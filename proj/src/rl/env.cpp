#include "acw/rl/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace acw::rl {

std::vector<Action> prime_action_set() {
  std::vector<Action> actions;
  for (int i = 1; i <= kNumMoves; ++i) {
    actions.push_back(Action{MoveId{MoveSet::kPrime, i}});
  }
  return actions;
}

void Env::reset(const Presentation& start, int seed_index) {
  if (max_relator_length(start) > cfg_->max_relator_len) {
    throw std::invalid_argument("start presentation exceeds the relator cap");
  }
  state_ = fixed_from_presentation(start);
  t_ = 0;
  seed_index_ = seed_index;
  episode_actions_.clear();
}

StepResult Env::step(int action) {
  const Action& moves = cfg_->actions.at(static_cast<size_t>(action));
  FixedWord scratch;
  for (MoveId m : moves) {
    apply_masked_fixed(state_, m, cfg_->max_relator_len, scratch);
  }
  episode_actions_.push_back(action);
  ++t_;
  StepResult r;
  r.solved = fixed_trivial_state(state_);
  int len = fixed_length(state_);
  r.reward = (len <= 2 && r.solved) ? 1000.0
                                    : -static_cast<double>(std::min(10, len));
  r.done = r.solved || t_ >= cfg_->horizon;
  return r;
}

void Env::encode(double* out) const {
  int width = cfg_->max_relator_len;
  static constexpr double kCode[4] = {0.5, 1.0, -0.5, -1.0};  // x y X Y scaled
  for (int rel = 0; rel < 2; ++rel) {
    double* dst = out + static_cast<size_t>(rel) * width;
    const FixedWord& w = state_.r[rel];
    for (int i = 0; i < w.len; ++i) dst[i] = kCode[w.a[i]];
    std::fill(dst + w.len, dst + width, 0.0);
  }
}

void Env::action_mask(bool* out) const {
  bool any = false;
  FixedWord scratch;
  for (size_t a = 0; a < cfg_->actions.size(); ++a) {
    const Action& moves = cfg_->actions[a];
    if (moves.size() == 1) {
      FixedPres tmp = state_;
      out[a] = apply_masked_fixed(tmp, moves[0], cfg_->max_relator_len, scratch);
    } else {
      out[a] = true;  // macro actions apply with per-move no-op masking
    }
    any |= out[a];
  }
  if (!any) {
    throw std::logic_error("no legal action; relator cap too tight");
  }
}

int Scheduler::next() {
  if (first_pass_pos_ < solved_.size()) {
    return static_cast<int>(first_pass_pos_++);
  }
  bool want_solved = false;
  if (solved_count_ > 0 && solved_count_ < solved_.size()) {
    want_solved =
        std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < 0.25;
  } else {
    want_solved = solved_count_ == solved_.size();
  }
  // uniform within the chosen pool
  size_t pool = want_solved ? solved_count_ : solved_.size() - solved_count_;
  size_t k = std::uniform_int_distribution<size_t>(0, pool - 1)(rng_);
  for (size_t i = 0; i < solved_.size(); ++i) {
    if (solved_[i] == want_solved && k-- == 0) return static_cast<int>(i);
  }
  return static_cast<int>(solved_.size() - 1);  // unreachable
}

void Scheduler::mark_solved(int index) {
  auto i = static_cast<size_t>(index);
  if (!solved_[i]) {
    solved_[i] = true;
    ++solved_count_;
  }
}

}  // namespace acw::rl
