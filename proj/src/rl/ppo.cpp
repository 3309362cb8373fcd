#include "acw/rl/ppo.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace acw::rl {

void gae(const std::vector<double>& rewards, const std::vector<double>& values,
         const std::vector<uint8_t>& dones, double bootstrap, double gamma,
         double lambda, std::vector<double>& advantages,
         std::vector<double>& returns) {
  size_t n = rewards.size();
  advantages.assign(n, 0.0);
  returns.assign(n, 0.0);
  double acc = 0.0;
  for (size_t i = n; i-- > 0;) {
    double next_value = i + 1 < n ? values[i + 1] : bootstrap;
    double not_done = dones[i] ? 0.0 : 1.0;
    double delta = rewards[i] + gamma * next_value * not_done - values[i];
    acc = delta + gamma * lambda * not_done * acc;
    advantages[i] = acc;
    returns[i] = acc + values[i];
  }
}

void Rollout::compute_gae(double gamma, double lambda) {
  advantages.assign(sample_count(), 0.0);
  returns.assign(sample_count(), 0.0);
  std::vector<double> r(steps), v(steps), adv, ret;
  std::vector<uint8_t> d(steps);
  for (int a = 0; a < actors; ++a) {
    size_t off = static_cast<size_t>(a) * steps;
    std::copy_n(rewards.begin() + off, steps, r.begin());
    std::copy_n(values.begin() + off, steps, v.begin());
    std::copy_n(dones.begin() + off, steps, d.begin());
    gae(r, v, d, bootstrap[static_cast<size_t>(a)], gamma, lambda, adv, ret);
    std::copy_n(adv.begin(), steps, advantages.begin() + off);
    std::copy_n(ret.begin(), steps, returns.begin() + off);
  }
}

void masked_log_softmax(const double* logits, const bool* mask, int n,
                        double* logp) {
  double maxv = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double z = mask[i] ? logits[i] : kMaskedLogit;
    if (z > maxv) maxv = z;
    logp[i] = z;
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += std::exp(logp[i] - maxv);
  double lse = maxv + std::log(sum);
  for (int i = 0; i < n; ++i) logp[i] -= lse;
}

MinibatchResult ppo_minibatch(Mlp& actor, Mlp& critic, const Rollout& rollout,
                              const std::vector<size_t>& indices,
                              const std::vector<double>& norm_adv,
                              const PpoConfig& cfg, bool with_grads) {
  int bs = static_cast<int>(indices.size());
  int obs_dim = rollout.obs_dim;
  int na = rollout.num_actions;

  std::vector<double> x(static_cast<size_t>(bs) * obs_dim);
  for (int s = 0; s < bs; ++s) {
    std::copy_n(rollout.obs.begin() +
                    static_cast<long>(indices[static_cast<size_t>(s)]) * obs_dim,
                obs_dim, x.begin() + static_cast<size_t>(s) * obs_dim);
  }
  Mlp::Cache actor_cache, critic_cache;
  std::vector<double> logits(static_cast<size_t>(bs) * na);
  std::vector<double> vout(static_cast<size_t>(bs));
  actor.forward(x.data(), bs, logits.data(), &actor_cache);
  critic.forward(x.data(), bs, vout.data(), &critic_cache);

  std::vector<double> dlogits(static_cast<size_t>(bs) * na, 0.0);
  std::vector<double> dv(static_cast<size_t>(bs), 0.0);
  std::vector<double> logp(static_cast<size_t>(na));
  MinibatchResult res;
  long clip_count = 0;
  for (int s = 0; s < bs; ++s) {
    size_t idx = indices[static_cast<size_t>(s)];
    bool mask[64];
    for (int a = 0; a < na; ++a) {
      mask[a] = rollout.masks[idx * static_cast<size_t>(na) + a] != 0;
    }
    masked_log_softmax(&logits[static_cast<size_t>(s) * na], mask, na,
                       logp.data());
    int act = rollout.actions[idx];
    double new_logp = logp[static_cast<size_t>(act)];
    double old_logp = rollout.logps[idx];
    double ratio = std::exp(new_logp - old_logp);
    double adv = norm_adv[idx];
    res.approx_kl += old_logp - new_logp;

    double unclipped = ratio * adv;
    double clipped = std::clamp(ratio, 1.0 - cfg.clip, 1.0 + cfg.clip) * adv;
    bool use_unclipped = unclipped <= clipped;
    res.policy_loss += -std::min(unclipped, clipped);
    if (std::abs(ratio - 1.0) > cfg.clip) clip_count++;

    // d(-min)/d(new_logp): only the unclipped branch carries gradient
    double d_newlogp = use_unclipped ? -ratio * adv : 0.0;
    d_newlogp /= static_cast<double>(bs);

    double entropy = 0.0;
    for (int a = 0; a < na; ++a) {
      if (!mask[a]) continue;
      double p = std::exp(logp[a]);
      if (p > 0) entropy -= p * logp[a];
    }
    res.entropy += entropy;

    double* dl = &dlogits[static_cast<size_t>(s) * na];
    for (int a = 0; a < na; ++a) {
      double p = std::exp(logp[a]);
      dl[a] = d_newlogp * ((a == act ? 1.0 : 0.0) - p);
      if (mask[a]) {
        // d(-c2*entropy)/dz = c2 * p * (logp + entropy)
        dl[a] += cfg.entropy_coef * p * (logp[a] + entropy) /
                 static_cast<double>(bs);
      }
    }

    // clipped value loss, mirroring the reference implementation
    double v = vout[static_cast<size_t>(s)];
    double old_v = rollout.values[idx];
    double ret = rollout.returns[idx];
    double v_clip = old_v + std::clamp(v - old_v, -cfg.clip, cfg.clip);
    double lu = (v - ret) * (v - ret);
    double lc = (v_clip - ret) * (v_clip - ret);
    res.value_loss += 0.5 * std::max(lu, lc);
    double dvs;
    if (lu >= lc) {
      dvs = v - ret;
    } else {
      dvs = std::abs(v - old_v) < cfg.clip ? v_clip - ret : 0.0;
    }
    dv[static_cast<size_t>(s)] = cfg.value_coef * dvs / static_cast<double>(bs);
  }
  res.policy_loss /= bs;
  res.value_loss /= bs;
  res.entropy /= bs;
  res.approx_kl /= bs;
  res.clip_frac = static_cast<double>(clip_count) / bs;
  res.loss_total = res.policy_loss + cfg.value_coef * res.value_loss -
                   cfg.entropy_coef * res.entropy;
  if (!std::isfinite(res.loss_total)) {
    throw std::runtime_error("non-finite optimization loss");
  }
  if (with_grads) {
    actor.zero_grads();
    critic.zero_grads();
    actor.backward(x.data(), actor_cache, dlogits.data());
    critic.backward(x.data(), critic_cache, dv.data());
  }
  return res;
}

UpdateStats ppo_update(Mlp& actor, Mlp& critic, Adam& actor_opt,
                       Adam& critic_opt, Rollout& rollout, const PpoConfig& cfg,
                       double lr, std::mt19937_64& rng) {
  size_t n = rollout.sample_count();

  // advantage normalization over the whole update batch
  double mean = std::accumulate(rollout.advantages.begin(),
                                rollout.advantages.end(), 0.0) /
                static_cast<double>(n);
  double var = 0.0;
  for (double a : rollout.advantages) var += (a - mean) * (a - mean);
  double stdev = std::sqrt(var / static_cast<double>(n)) + 1e-8;
  std::vector<double> norm_adv(n);
  for (size_t i = 0; i < n; ++i) {
    norm_adv[i] = (rollout.advantages[i] - mean) / stdev;
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  UpdateStats stats;
  size_t mb_size = n / static_cast<size_t>(cfg.minibatches);
  if (mb_size == 0) throw std::invalid_argument("rollout smaller than minibatch count");

  double pg_acc = 0, v_acc = 0, ent_acc = 0, clip_acc = 0;
  for (int epoch = 0; epoch < cfg.epochs && !stats.early_stopped; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int mb = 0; mb < cfg.minibatches; ++mb) {
      size_t lo = static_cast<size_t>(mb) * mb_size;
      size_t hi = mb == cfg.minibatches - 1 ? n : lo + mb_size;
      std::vector<size_t> indices(order.begin() + static_cast<long>(lo),
                                  order.begin() + static_cast<long>(hi));
      MinibatchResult res =
          ppo_minibatch(actor, critic, rollout, indices, norm_adv, cfg, true);
      actor_opt.step(actor.params(), actor.grads(), lr);
      critic_opt.step(critic.params(), critic.grads(), lr);

      stats.minibatches_done++;
      pg_acc += res.policy_loss;
      v_acc += res.value_loss;
      ent_acc += res.entropy;
      clip_acc += res.clip_frac;
      stats.approx_kl = res.approx_kl;
      if (res.approx_kl > cfg.target_kl) {
        stats.early_stopped = true;
        break;
      }
    }
  }
  if (stats.minibatches_done > 0) {
    stats.policy_loss = pg_acc / stats.minibatches_done;
    stats.value_loss = v_acc / stats.minibatches_done;
    stats.entropy = ent_acc / stats.minibatches_done;
    stats.clip_frac = clip_acc / stats.minibatches_done;
  }
  return stats;
}

TrainResult train(const std::vector<Presentation>& dataset,
                  const EnvConfig& env_cfg, const PpoConfig& ppo_cfg,
                  const TrainOptions& opt) {
  if (dataset.empty()) throw std::invalid_argument("empty dataset");
  if (env_cfg.actions.size() > 64) {
    throw std::invalid_argument("at most 64 actions supported");
  }
  int na = static_cast<int>(env_cfg.actions.size());
  int obs_dim = Env::encoding_width(env_cfg);
  Mlp actor(obs_dim, ppo_cfg.hidden, na, 0.01, opt.seed * 7919 + 1);
  Mlp critic(obs_dim, ppo_cfg.hidden, 1, 1.0, opt.seed * 7919 + 2);
  Adam actor_opt(actor.param_count(), ppo_cfg.adam_eps);
  Adam critic_opt(critic.param_count(), ppo_cfg.adam_eps);
  std::mt19937_64 rng(opt.seed);
  Scheduler scheduler(dataset.size(), opt.seed ^ 0x9e3779b97f4a7c15ULL);

  int actors = ppo_cfg.actors;
  int steps = ppo_cfg.rollout_len;
  uint64_t phases =
      (opt.total_rollouts + static_cast<uint64_t>(actors) - 1) /
      static_cast<uint64_t>(actors);
  if (phases == 0) phases = 1;

  std::vector<Env> envs(static_cast<size_t>(actors), Env(env_cfg));
  for (auto& env : envs) {
    int idx = scheduler.next();
    env.reset(dataset[static_cast<size_t>(idx)], idx);
  }

  TrainResult result;
  result.solved.assign(dataset.size(), false);

  Rollout roll;
  roll.actors = actors;
  roll.steps = steps;
  roll.obs_dim = obs_dim;
  roll.num_actions = na;
  size_t n = roll.sample_count();
  roll.obs.assign(n * static_cast<size_t>(obs_dim), 0.0);
  roll.masks.assign(n * static_cast<size_t>(na), 0);
  roll.actions.assign(n, 0);
  roll.rewards.assign(n, 0.0);
  roll.values.assign(n, 0.0);
  roll.logps.assign(n, 0.0);
  roll.dones.assign(n, 0);
  roll.bootstrap.assign(static_cast<size_t>(actors), 0.0);

  std::vector<double> step_obs(static_cast<size_t>(actors) * obs_dim);
  std::vector<double> step_logits(static_cast<size_t>(actors) * na);
  std::vector<double> step_values(static_cast<size_t>(actors));
  std::vector<double> logp(static_cast<size_t>(na));

  auto record_solution = [&](const Env& env) {
    int idx = env.seed_index();
    scheduler.mark_solved(idx);
    if (!result.solved[static_cast<size_t>(idx)]) {
      result.solved[static_cast<size_t>(idx)] = true;
      result.solved_count++;
    }
    auto it = result.best_paths.find(idx);
    if (it == result.best_paths.end() ||
        env.episode_actions().size() < it->second.size()) {
      result.best_paths[idx] = env.episode_actions();
    }
  };

  auto abort_dump = [&]() {
    if (!opt.out_dir.empty()) {
      std::filesystem::create_directories(opt.out_dir);
      save_checkpoint(opt.out_dir + "/checkpoint.abort.bin", actor, critic,
                      env_cfg);
    }
  };

  for (uint64_t phase = 0; phase < phases; ++phase) {
    for (int t = 0; t < steps; ++t) {
      for (int a = 0; a < actors; ++a) {
        envs[static_cast<size_t>(a)].encode(
            &step_obs[static_cast<size_t>(a) * obs_dim]);
      }
      actor.forward(step_obs.data(), actors, step_logits.data(), nullptr);
      critic.forward(step_obs.data(), actors, step_values.data(), nullptr);
      for (int a = 0; a < actors; ++a) {
        Env& env = envs[static_cast<size_t>(a)];
        size_t idx = (static_cast<size_t>(a) * steps) + static_cast<size_t>(t);
        bool mask[64];
        env.action_mask(mask);
        std::copy_n(&step_obs[static_cast<size_t>(a) * obs_dim], obs_dim,
                    roll.obs.begin() + idx * static_cast<size_t>(obs_dim));
        for (int k = 0; k < na; ++k) {
          roll.masks[idx * static_cast<size_t>(na) + k] = mask[k] ? 1 : 0;
        }
        masked_log_softmax(&step_logits[static_cast<size_t>(a) * na], mask, na,
                           logp.data());
        double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        int action = na - 1;
        double cum = 0.0;
        for (int k = 0; k < na; ++k) {
          cum += std::exp(logp[static_cast<size_t>(k)]);
          if (u <= cum) {
            action = k;
            break;
          }
        }
        StepResult sr = env.step(action);
        roll.actions[idx] = action;
        roll.logps[idx] = logp[static_cast<size_t>(action)];
        roll.values[idx] = step_values[static_cast<size_t>(a)];
        roll.rewards[idx] = sr.reward;
        roll.dones[idx] = sr.done ? 1 : 0;
        if (sr.solved) record_solution(env);
        if (sr.done) {
          int next = scheduler.next();
          env.reset(dataset[static_cast<size_t>(next)], next);
        }
      }
    }
    // bootstrap values for unfinished episodes
    for (int a = 0; a < actors; ++a) {
      envs[static_cast<size_t>(a)].encode(
          &step_obs[static_cast<size_t>(a) * obs_dim]);
    }
    critic.forward(step_obs.data(), actors, step_values.data(), nullptr);
    for (int a = 0; a < actors; ++a) {
      roll.bootstrap[static_cast<size_t>(a)] =
          step_values[static_cast<size_t>(a)];
    }

    roll.compute_gae(ppo_cfg.gamma, ppo_cfg.gae_lambda);
    double lr = ppo_cfg.lr_max *
                (1.0 - static_cast<double>(phase) / static_cast<double>(phases));
    UpdateStats stats;
    try {
      stats = ppo_update(actor, critic, actor_opt, critic_opt, roll, ppo_cfg,
                         lr, rng);
    } catch (const std::exception&) {
      abort_dump();
      throw;
    }
    result.env_steps += static_cast<uint64_t>(actors) * steps;
    result.phases++;
    if (opt.on_phase) {
      opt.on_phase(static_cast<int>(phase), stats, result.solved_count);
    }
    if (opt.stop_when_all_solved && result.solved_count == dataset.size()) break;
  }

  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    save_checkpoint(opt.out_dir + "/checkpoint.bin", actor, critic, env_cfg);
    std::ofstream reg(opt.out_dir + "/solved_registry.tsv");
    reg << "index\tsolved\tbest_path_len\n";
    for (size_t i = 0; i < result.solved.size(); ++i) {
      auto it = result.best_paths.find(static_cast<int>(i));
      reg << i << '\t' << (result.solved[i] ? 1 : 0) << '\t'
          << (it == result.best_paths.end() ? 0 : it->second.size()) << '\n';
    }
    for (const auto& [idx, path] : result.best_paths) {
      std::ofstream pf(opt.out_dir + "/path_" + std::to_string(idx) + ".txt");
      pf << "set: prime\n";
      for (size_t i = 0; i < path.size(); ++i) {
        const Action& act = env_cfg.actions.at(static_cast<size_t>(path[i]));
        for (size_t j = 0; j < act.size(); ++j) {
          if (i + j > 0) pf << ' ';
          pf << act[j].index;
        }
      }
      pf << '\n';
    }
  }
  return result;
}

void save_checkpoint(const std::string& path, const Mlp& actor,
                     const Mlp& critic, const EnvConfig& env_cfg) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "acw-ppo-checkpoint v1\n";
  f << "obs_dim " << actor.input_dim() << " actions " << actor.output_dim()
    << " max_relator_len " << env_cfg.max_relator_len << " horizon "
    << env_cfg.horizon << "\n";
  f << "actor " << actor.param_count() << " critic " << critic.param_count()
    << "\n";
  f.write(reinterpret_cast<const char*>(actor.params().data()),
          static_cast<std::streamsize>(actor.param_count() * sizeof(double)));
  f.write(reinterpret_cast<const char*>(critic.params().data()),
          static_cast<std::streamsize>(critic.param_count() * sizeof(double)));
}

void load_checkpoint(const std::string& path, Mlp& actor, Mlp& critic) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(f, line);
  if (line != "acw-ppo-checkpoint v1") {
    throw std::runtime_error("bad checkpoint header: " + line);
  }
  std::getline(f, line);  // geometry, validated via sizes below
  std::string tag;
  size_t na = 0, nc = 0;
  f >> tag >> na >> tag >> nc;
  f.ignore();
  if (na != actor.param_count() || nc != critic.param_count()) {
    throw std::runtime_error("checkpoint geometry mismatch");
  }
  f.read(reinterpret_cast<char*>(actor.params().data()),
         static_cast<std::streamsize>(na * sizeof(double)));
  f.read(reinterpret_cast<char*>(critic.params().data()),
         static_cast<std::streamsize>(nc * sizeof(double)));
  if (!f) throw std::runtime_error("truncated checkpoint");
}

}  // namespace acw::rl
