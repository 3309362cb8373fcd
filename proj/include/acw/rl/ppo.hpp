#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acw/rl/env.hpp"
#include "acw/rl/nets.hpp"

namespace acw::rl {

struct PpoConfig {
  int rollout_len = 200;
  int actors = 28;
  double lr_max = 1e-4;  // linear decay to 0 over the run
  int epochs = 1;
  int minibatches = 4;
  double gamma = 0.999;
  double gae_lambda = 0.95;
  double clip = 0.2;
  double value_coef = 0.5;    // c1
  double entropy_coef = 0.01; // c2
  double adam_eps = 1e-5;
  double target_kl = 0.01;
  int hidden = 512;
};

// delta_t = r_t + gamma*V(s_{t+1})*(1-done_t) - V(s_t);
// A_t = delta_t + gamma*lambda*(1-done_t)*A_{t+1}; returns = A + V.
// `bootstrap` stands in for V(s_T) after the last step when it did not end
// an episode.
void gae(const std::vector<double>& rewards, const std::vector<double>& values,
         const std::vector<uint8_t>& dones, double bootstrap, double gamma,
         double lambda, std::vector<double>& advantages,
         std::vector<double>& returns);

struct Rollout {
  int actors = 0;
  int steps = 0;
  int obs_dim = 0;
  int num_actions = 0;
  // flattened [actor][step] arrays
  std::vector<double> obs;      // x obs_dim
  std::vector<uint8_t> masks;   // x num_actions
  std::vector<int32_t> actions;
  std::vector<double> rewards;
  std::vector<double> values;
  std::vector<double> logps;
  std::vector<uint8_t> dones;
  std::vector<double> bootstrap;  // per actor
  std::vector<double> advantages;
  std::vector<double> returns;

  size_t sample_count() const { return static_cast<size_t>(actors) * steps; }
  void compute_gae(double gamma, double lambda);
};

struct UpdateStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double approx_kl = 0.0;  // mean(old_logp - new_logp) of the last minibatch
  double clip_frac = 0.0;
  int minibatches_done = 0;
  bool early_stopped = false;
};

// Masked-softmax helpers shared with tests.
void masked_log_softmax(const double* logits, const bool* mask, int n,
                        double* logp);
inline constexpr double kMaskedLogit = -1e9;

struct MinibatchResult {
  double loss_total = 0.0;  // policy + c1*value - c2*entropy, the optimized scalar
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double entropy = 0.0;
  double approx_kl = 0.0;
  double clip_frac = 0.0;
};

// Loss (and, when requested, parameter gradients) of one minibatch given by
// sample indices into the rollout. Does not step the optimizer.
MinibatchResult ppo_minibatch(Mlp& actor, Mlp& critic, const Rollout& rollout,
                              const std::vector<size_t>& indices,
                              const std::vector<double>& norm_adv,
                              const PpoConfig& cfg, bool with_grads);

// One optimization phase: `epochs` passes of `minibatches` shuffled
// minibatches; advantages are normalized per update batch; a minibatch whose
// approximate KL exceeds target_kl stops the phase after its own step.
UpdateStats ppo_update(Mlp& actor, Mlp& critic, Adam& actor_opt,
                       Adam& critic_opt, Rollout& rollout,
                       const PpoConfig& cfg, double lr, std::mt19937_64& rng);

struct TrainOptions {
  uint64_t total_rollouts = 200000;  // actor-segments of rollout_len steps
  uint64_t seed = 1;
  std::string out_dir;               // empty = no files
  bool stop_when_all_solved = false;
  std::function<void(int, const UpdateStats&, size_t)> on_phase;  // phase, stats, solved
};

struct TrainResult {
  std::vector<bool> solved;                 // per dataset index
  std::map<int, std::vector<int>> best_paths;  // dataset index -> shortest action list
  size_t solved_count = 0;
  uint64_t env_steps = 0;
  int phases = 0;
};

TrainResult train(const std::vector<Presentation>& dataset,
                  const EnvConfig& env_cfg, const PpoConfig& ppo_cfg,
                  const TrainOptions& opt);

// Flat parameter checkpoint: versioned text header then raw little-endian
// doubles for actor and critic.
void save_checkpoint(const std::string& path, const Mlp& actor,
                     const Mlp& critic, const EnvConfig& env_cfg);
void load_checkpoint(const std::string& path, Mlp& actor, Mlp& critic);

}  // namespace acw::rl
