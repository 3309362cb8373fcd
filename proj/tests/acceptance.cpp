// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line each. Criterion numbers can be passed as arguments to
// run a subset, e.g. `acw_acceptance 1 2 10`.
#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "acw/analysis.hpp"
#include "acw/certificate.hpp"
#include "acw/moves.hpp"
#include "acw/neighborhoods.hpp"
#include "acw/rl/ppo.hpp"
#include "acw/search.hpp"
#include "acw/series.hpp"
#include "acw/topology.hpp"

using namespace acw;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  const char* title;
  bool (*run)(std::string& detail);
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

#define DETAIL(...)                                    \
  do {                                                 \
    char buf_[512];                                    \
    snprintf(buf_, sizeof(buf_), __VA_ARGS__);         \
    if (!detail.empty()) detail += "; ";               \
    detail += buf_;                                    \
  } while (0)

// ---- 1. series counts -------------------------------------------------
bool c1_series(std::string& detail) {
  auto t0 = Clock::now();
  auto ds = gen_MS_dataset(7, 7);
  double dt = seconds_since(t0);
  bool ok = true;
  std::map<int, int> per_n;
  for (auto& [idx, p] : ds) per_n[idx.n]++;
  if (ds.size() != 1190) {
    ok = false;
    DETAIL("total %zu != 1190", ds.size());
  }
  for (int n = 1; n <= 7; ++n) {
    if (per_n[n] != 170) {
      ok = false;
      DETAIL("n=%d count %d != 170", n, per_n[n]);
    }
  }
  if (dt >= 10.0) {
    ok = false;
    DETAIL("runtime %.2fs >= 10s", dt);
  }
  if (ok) DETAIL("1190 presentations, 170 per n, %.3fs", dt);
  return ok;
}

// ---- 2. stable certificate --------------------------------------------
bool c2_certificate(std::string& detail) {
  Certificate cert = ak3_certificate();
  auto t0 = Clock::now();
  VerifyReport rep = verify(cert);
  double dt = seconds_since(t0);
  bool ok = true;
  if (cert.moves.size() != 53) {
    ok = false;
    DETAIL("move count %zu != 53", cert.moves.size());
  }
  if (!rep.ok) {
    ok = false;
    DETAIL("replay failed, first divergent step %zu", *rep.first_divergence);
  }
  if (!(canonicalize(rep.terminal) == canonicalize(gen_AK(3)))) {
    ok = false;
    DETAIL("terminal %s is not AK(3)", format(rep.terminal).c_str());
  }
  if (rep.max_length_seen > 25) {
    ok = false;
    DETAIL("max intermediate length %d > 25", rep.max_length_seen);
  }
  if (dt >= 0.010) {
    ok = false;
    DETAIL("runtime %.4fs >= 10ms", dt);
  }
  if (ok) {
    DETAIL("53 moves, max length %d, terminal %s, %.2fms", rep.max_length_seen,
           format(rep.terminal).c_str(), dt * 1e3);
  }
  return ok;
}

// ---- 3. persistence tables ---------------------------------------------
struct Row {
  uint64_t v, e, ic1, ic2, ic3;
};
// rows l = 3..13 of the published classical and prime tables
const Row kClassical[] = {
    {36, 72, 0, 0, 0},           {100, 248, 0, 0, 0},
    {388, 1072, 0, 0, 0},        {884, 2376, 0, 0, 0},
    {3892, 10775, 0, 0, 0},      {9172, 25675, 0, 0, 0},
    {37428, 106513, 0, 0, 0},    {84996, 239733, 0, 0, 0},
    {350356, 1002439, 4, 0, 0},  {791140, 2251375, 16, 0, 0},
    {3238052, 9321629, 72, 4, 0}};
const Row kPrime[] = {
    {36, 40, 3, 0, 0},           {100, 152, 3, 0, 0},
    {388, 712, 3, 0, 0},         {884, 1528, 3, 0, 0},
    {3892, 6984, 3, 0, 0},       {9172, 16728, 3, 0, 0},
    {37428, 69752, 3, 0, 0},     {84996, 155752, 3, 0, 0},
    {350356, 655928, 19, 0, 0},  {791140, 1467080, 67, 0, 0},
    {3238052, 6107112, 243, 16, 0}};

bool c3_tables(std::string& detail) {
  bool ok = true;
  auto t0 = Clock::now();
  for (MoveSet set : {MoveSet::kClassical, MoveSet::kPrime}) {
    const Row* expect = set == MoveSet::kClassical ? kClassical : kPrime;
    auto rows = persistence_table(13, set, 0);
    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& e = expect[i];
      const TableRow& r = rows[i];
      if (r.v != e.v || r.e != e.e || r.ic1 != e.ic1 || r.ic2 != e.ic2 ||
          r.ic3 != e.ic3) {
        ok = false;
        DETAIL("%s l=%d got (%llu,%llu,%llu,%llu,%llu) expected "
               "(%llu,%llu,%llu,%llu,%llu)",
               move_set_name(set), r.l, (unsigned long long)r.v,
               (unsigned long long)r.e, (unsigned long long)r.ic1,
               (unsigned long long)r.ic2, (unsigned long long)r.ic3,
               (unsigned long long)e.v, (unsigned long long)e.e,
               (unsigned long long)e.ic1, (unsigned long long)e.ic2,
               (unsigned long long)e.ic3);
      }
    }
  }
  if (ok) DETAIL("both tables match through l=13, %.1fs", seconds_since(t0));
  return ok;
}

// ---- 4 & 5. search baselines -------------------------------------------
struct BatchOutcome {
  BatchSummary greedy, bfs;
  std::vector<BatchItem> greedy_items;
  std::vector<BatchInput> inputs;
  std::vector<MSIndex> indices;
  bool ran = false;
};
BatchOutcome g_batch;

void run_batches() {
  if (g_batch.ran) return;
  auto ds = gen_MS_dataset(7, 7);
  for (auto& [idx, p] : ds) {
    g_batch.inputs.push_back(BatchInput{p, idx.n, idx.w});
    g_batch.indices.push_back(idx);
  }
  BatchOptions opt;
  opt.max_nodes = 1'000'000;
  opt.algo = SearchAlgo::kGreedy;
  fprintf(stderr, "  [4] greedy over 1190 presentations...\n");
  g_batch.greedy_items = batch_solve(g_batch.inputs, opt, &g_batch.greedy);
  opt.algo = SearchAlgo::kBfs;
  fprintf(stderr, "  [4] bfs over 1190 presentations...\n");
  batch_solve(g_batch.inputs, opt, &g_batch.bfs);
  g_batch.ran = true;
}

bool c4_search(std::string& detail) {
  run_batches();
  bool ok = true;

  for (size_t i = 0; i < g_batch.inputs.size(); ++i) {
    bool solved = g_batch.greedy_items[i].result.solved;
    if (g_batch.indices[i].n == 1 && !solved) {
      ok = false;
      DETAIL("greedy missed n=1 instance %zu", i);
    }
    if (length(g_batch.inputs[i].presentation) < 14 && !solved) {
      ok = false;
      DETAIL("greedy missed length-%d instance %zu",
             length(g_batch.inputs[i].presentation), i);
    }
  }

  SearchConfig cfg;
  cfg.max_relator_len = max_relator_bound(gen_AK(2));
  if (!greedy_trivialize(gen_AK(2), cfg).solved) {
    ok = false;
    DETAIL("greedy failed on AK(2)");
  }
  cfg.max_relator_len = 20;
  if (greedy_trivialize(gen_AK(3), cfg).solved) {
    ok = false;
    DETAIL("greedy unexpectedly solved AK(3) at bound 20");
  }

  auto within = [](uint64_t got, double target) {
    return std::abs(static_cast<double>(got) - target) <= 0.03 * target;
  };
  if (!within(g_batch.greedy.solved, 533.0)) {
    ok = false;
    DETAIL("greedy solved %llu outside 533 +- 3%%",
           (unsigned long long)g_batch.greedy.solved);
  }
  if (!within(g_batch.bfs.solved, 278.0)) {
    ok = false;
    DETAIL("bfs solved %llu outside 278 +- 3%% (the published count is not "
           "reachable at N=10^6 under any queue/budget semantics tried; the "
           "capped instances need ~10^7 marked states for their 9-11 move "
           "shortest paths - see the notes on this criterion)",
           (unsigned long long)g_batch.bfs.solved);
  }
  DETAIL("greedy %llu/1190, bfs %llu/1190",
         (unsigned long long)g_batch.greedy.solved,
         (unsigned long long)g_batch.bfs.solved);
  return ok;
}

bool c5_length_increase(std::string& detail) {
  run_batches();
  int max_inc = g_batch.greedy.max_path_length_increase;
  DETAIL("max path length increase over greedy-solved: %d", max_inc);
  return max_inc <= 6;
}

// ---- 6. neighborhood statistics ----------------------------------------
bool c6_neighborhoods(std::string& detail) {
  auto ds = gen_MS_dataset(7, 7);
  std::vector<Presentation> seeds;
  for (auto& [idx, p] : ds) seeds.push_back(p);
  auto t0 = Clock::now();
  auto sizes = neighborhood_sizes(seeds, 5, MoveSet::kPrime, 0);
  auto st = neighborhood_stats(sizes);
  bool ok = st.min == 72964 && st.max == 89872 && st.distinct == 131 &&
            st.median == 89859;
  DETAIL("min=%llu max=%llu distinct=%llu median=%llu mean=%.1f (%.0fs)",
         (unsigned long long)st.min, (unsigned long long)st.max,
         (unsigned long long)st.distinct, (unsigned long long)st.median,
         st.mean, seconds_since(t0));
  return ok;
}

// ---- 7. connectivity oracle equivalence --------------------------------
bool c7_conn_oracle(std::string& detail) {
  bool ok = true;
  for (MoveSet set : {MoveSet::kClassical, MoveSet::kPrime}) {
    FilteredGraph g = enumerate_identity_component(8, set, 0);
    auto conn = connectivity_values(g);
    std::map<std::array<uint64_t, 4>, int> first_seen;
    for (int l = 2; l <= 8; ++l) {
      FilteredGraph gl = enumerate_identity_component_serial(l, set);
      for (const PackedState& key : gl.vertices) first_seen.emplace(key.v, l);
    }
    uint64_t mismatches = 0;
    for (uint32_t v = 0; v < g.vertices.size(); ++v) {
      if (first_seen.at(g.vertices[v].v) != conn[v]) mismatches++;
    }
    if (mismatches != 0) {
      ok = false;
      DETAIL("%s: %llu conn mismatches", move_set_name(set),
             (unsigned long long)mismatches);
    } else {
      DETAIL("%s: %zu vertices, zero mismatches", move_set_name(set),
             g.vertices.size());
    }
  }
  return ok;
}

// ---- 8. RL property suite ----------------------------------------------
bool c8_rl(std::string& detail) {
  using namespace acw::rl;
  bool ok = true;
  auto t0 = Clock::now();

  // (a) reward formula on lengths 3, 7, 10, 20 and a trivial terminal
  {
    EnvConfig cfg;
    cfg.max_relator_len = 36;
    Env env(cfg);
    // h11 (action 10) conjugates a power of y by y: a no-op transition, so
    // the resulting length is the starting length
    auto reward_at = [&](const char* text) {
      env.reset(parse_presentation(text), 0);
      StepResult r = env.step(10);
      return std::pair<double, int>(r.reward, env.length());
    };
    bool a_ok = true;
    a_ok &= reward_at("xx,y") == std::pair<double, int>(-3.0, 3);
    a_ok &= reward_at("xxxx,yyy") == std::pair<double, int>(-7.0, 7);
    a_ok &= reward_at("xxxxx,yyyyy") == std::pair<double, int>(-10.0, 10);
    a_ok &= reward_at("xxxxxxxxxx,yyyyyyyyyy") ==
            std::pair<double, int>(-10.0, 20);
    Env env2(cfg);
    env2.reset(parse_presentation("x,yx"), 0);
    StepResult sr = env2.step(2);  // h3 reaches the trivial state
    a_ok &= sr.reward == 1000.0 && sr.solved;
    if (!a_ok) {
      ok = false;
      DETAIL("(a) reward formula mismatch");
    }
  }

  // (b) GAE against the direct-summation oracle, 100 random rollouts
  {
    std::mt19937_64 rng(1234);
    double worst = 0;
    for (int round = 0; round < 100; ++round) {
      int n = 1 + static_cast<int>(rng() % 64);
      std::vector<double> rewards(static_cast<size_t>(n)),
          values(static_cast<size_t>(n));
      std::vector<uint8_t> dones(static_cast<size_t>(n));
      std::uniform_real_distribution<double> real(-10, 10);
      for (int i = 0; i < n; ++i) {
        rewards[static_cast<size_t>(i)] = real(rng);
        values[static_cast<size_t>(i)] = real(rng);
        dones[static_cast<size_t>(i)] = rng() % 6 == 0;
      }
      double bootstrap = real(rng);
      std::vector<double> adv, ret;
      gae(rewards, values, dones, bootstrap, 0.999, 0.95, adv, ret);
      for (int t = 0; t < n; ++t) {
        double direct = 0, coeff = 1;
        for (int j = t; j < n; ++j) {
          double nv = j + 1 < n ? values[static_cast<size_t>(j) + 1] : bootstrap;
          double nd = dones[static_cast<size_t>(j)] ? 0.0 : 1.0;
          direct += coeff * (rewards[static_cast<size_t>(j)] + 0.999 * nv * nd -
                             values[static_cast<size_t>(j)]);
          if (dones[static_cast<size_t>(j)]) break;
          coeff *= 0.999 * 0.95;
        }
        worst = std::max(worst, std::abs(direct - adv[static_cast<size_t>(t)]));
      }
    }
    if (worst > 1e-10) {
      ok = false;
      DETAIL("(b) GAE deviates from oracle by %.2e", worst);
    }
  }

  // (c) gradient check on a down-scaled net
  {
    std::mt19937_64 rng(77);
    int obs_dim = 6, na = 4;
    Mlp actor(obs_dim, 8, na, 0.01, 5);
    Mlp critic(obs_dim, 8, 1, 1.0, 6);
    Rollout roll;
    roll.actors = 2;
    roll.steps = 8;
    roll.obs_dim = obs_dim;
    roll.num_actions = na;
    size_t n = roll.sample_count();
    std::uniform_real_distribution<double> real(-1, 1);
    roll.obs.resize(n * static_cast<size_t>(obs_dim));
    for (double& x : roll.obs) x = real(rng);
    roll.masks.assign(n * static_cast<size_t>(na), 1);
    roll.actions.resize(n);
    roll.rewards.resize(n);
    roll.values.resize(n);
    roll.logps.resize(n);
    roll.dones.assign(n, 0);
    roll.bootstrap.assign(2, 0.0);
    for (size_t i = 0; i < n; ++i) {
      roll.masks[i * static_cast<size_t>(na) + (i % na)] = i % 3 ? 1 : 0;
      roll.actions[i] = static_cast<int32_t>((i + 1) % na);
      if (!roll.masks[i * static_cast<size_t>(na) + roll.actions[i]]) {
        roll.actions[i] = static_cast<int32_t>((roll.actions[i] + 1) % na);
      }
      roll.rewards[i] = real(rng) * 5;
      roll.values[i] = real(rng);
      roll.logps[i] = -1.2 + 0.2 * real(rng);
    }
    roll.compute_gae(0.999, 0.95);
    std::vector<double> adv = roll.advantages;
    double mean = std::accumulate(adv.begin(), adv.end(), 0.0) / adv.size();
    double var = 0;
    for (double a : adv) var += (a - mean) * (a - mean);
    double stdev = std::sqrt(var / adv.size()) + 1e-8;
    for (double& a : adv) a = (a - mean) / stdev;
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    PpoConfig cfg;
    ppo_minibatch(actor, critic, roll, idx, adv, cfg, true);
    std::vector<double> ga = actor.grads(), gc = critic.grads();
    auto loss = [&]() {
      return ppo_minibatch(actor, critic, roll, idx, adv, cfg, false).loss_total;
    };
    double h = 1e-5, worst = 0;
    auto scan = [&](Mlp& net, std::vector<double>& grads) {
      size_t stride = std::max<size_t>(1, net.param_count() / 50);
      for (size_t i = 0; i < net.param_count(); i += stride) {
        double saved = net.params()[i];
        net.params()[i] = saved + h;
        double up = loss();
        net.params()[i] = saved - h;
        double down = loss();
        net.params()[i] = saved;
        double fd = (up - down) / (2 * h);
        double denom = std::max({std::abs(fd), std::abs(grads[i]), 1e-6});
        worst = std::max(worst, std::abs(fd - grads[i]) / denom);
      }
    };
    scan(actor, ga);
    scan(critic, gc);
    if (worst > 1e-4) {
      ok = false;
      DETAIL("(c) gradient relative error %.2e > 1e-4", worst);
    }
  }

  // (d) masked probability mass
  {
    std::mt19937_64 rng(88);
    double worst = 0;
    for (int round = 0; round < 100; ++round) {
      double logits[12], logp[12];
      bool mask[12];
      for (int i = 0; i < 12; ++i) {
        logits[i] = -8.0 + static_cast<double>(rng() % 1600) / 100.0;
        mask[i] = rng() % 3 != 0;
      }
      mask[rng() % 12] = true;
      masked_log_softmax(logits, mask, 12, logp);
      for (int i = 0; i < 12; ++i) {
        if (!mask[i]) worst = std::max(worst, std::exp(logp[i]));
      }
    }
    if (worst >= 1e-8) {
      ok = false;
      DETAIL("(d) masked action carries probability %.2e", worst);
    }
  }

  // (e) KL early stop under an injected LR spike
  {
    std::mt19937_64 rng(99);
    int obs_dim = 6, na = 4;
    Mlp actor(obs_dim, 16, na, 0.01, 7);
    Mlp critic(obs_dim, 16, 1, 1.0, 8);
    Adam aopt(actor.param_count(), 1e-5);
    Adam copt(critic.param_count(), 1e-5);
    Rollout roll;
    roll.actors = 4;
    roll.steps = 16;
    roll.obs_dim = obs_dim;
    roll.num_actions = na;
    size_t n = roll.sample_count();
    std::uniform_real_distribution<double> real(-1, 1);
    roll.obs.resize(n * static_cast<size_t>(obs_dim));
    for (double& x : roll.obs) x = real(rng);
    roll.masks.assign(n * static_cast<size_t>(na), 1);
    roll.actions.resize(n);
    roll.rewards.resize(n);
    roll.values.resize(n);
    roll.dones.assign(n, 0);
    roll.bootstrap.assign(4, 0.0);
    roll.logps.resize(n);
    for (size_t i = 0; i < n; ++i) {
      roll.actions[i] = static_cast<int32_t>(rng() % na);
      roll.rewards[i] = real(rng) * 5;
      roll.values[i] = real(rng);
    }
    std::vector<double> logits(n * static_cast<size_t>(na)), lp(static_cast<size_t>(na));
    actor.forward(roll.obs.data(), static_cast<int>(n), logits.data(), nullptr);
    for (size_t i = 0; i < n; ++i) {
      bool mask[4] = {true, true, true, true};
      masked_log_softmax(&logits[i * static_cast<size_t>(na)], mask, na, lp.data());
      roll.logps[i] = lp[static_cast<size_t>(roll.actions[i])];
    }
    roll.compute_gae(0.999, 0.95);
    PpoConfig cfg;
    std::mt19937_64 rng2(3);
    UpdateStats st = ppo_update(actor, critic, aopt, copt, roll, cfg, 5.0, rng2);
    if (!(st.early_stopped && st.minibatches_done < cfg.minibatches)) {
      ok = false;
      DETAIL("(e) early stop did not fire (kl=%.4f, minibatches=%d)",
             st.approx_kl, st.minibatches_done);
    }
    if (!(st.clip_frac > 0.0)) {
      ok = false;
      DETAIL("(e) clip fraction stayed zero under the spike");
    }
  }

  // (f) smoke training on {AK(2)} with at most 2e3 rollouts, as stated.
  // The reward -min(10, length) is flat over everything reachable from
  // AK(2) by chance (random walks never dip below presentation length 11),
  // so a from-scratch policy gets no gradient until a full trivialization
  // is sampled; that needs the cross-instance curriculum the full setup
  // provides. The attempt runs faithfully and its failure is reported;
  // the companion curriculum run demonstrates that the trainer itself
  // learns multi-move trivializations within the same budget.
  {
    PpoConfig smoke;
    smoke.hidden = 64;
    smoke.actors = 8;
    smoke.rollout_len = 200;
    smoke.lr_max = 1e-3;
    smoke.entropy_coef = 0.03;
    smoke.gamma = 0.99;
    smoke.epochs = 4;

    EnvConfig env_cfg;
    env_cfg.horizon = 200;
    env_cfg.max_relator_len = max_relator_bound(gen_AK(2));
    TrainOptions opt;
    opt.total_rollouts = 2000;
    opt.seed = 3;
    opt.stop_when_all_solved = true;
    TrainResult res = train({gen_AK(2)}, env_cfg, smoke, opt);
    if (res.solved_count != 1) {
      ok = false;
      DETAIL("(f) AK(2) not in the solved registry after %d phases / %llu "
             "env steps (reward is -10 on every state a fresh policy "
             "reaches; see the notes on this criterion)",
             res.phases, (unsigned long long)res.env_steps);
    } else {
      DETAIL("(f) AK(2) solved after %d phases, best path %zu moves",
             res.phases, res.best_paths.at(0).size());
    }

    // companion learning demonstration: states 1..4 moves from a trivial
    // state plus the length-7 MS member they came from; random exploration
    // alone solves none of the deeper ones
    Presentation ms1 = gen_MS(1, word_from_text("y"));
    int cap = max_relator_bound(1, word_from_text("y"));
    SearchConfig scfg;
    scfg.max_relator_len = cap;
    SearchResult gs = greedy_trivialize(ms1, scfg);
    std::vector<Presentation> chain{ms1};
    for (MoveId m : gs.path) chain.push_back(apply_masked(chain.back(), m, cap));
    std::vector<Presentation> curriculum;
    for (int back = 1; back <= 4; ++back) {
      curriculum.push_back(chain[chain.size() - 1 - static_cast<size_t>(back)]);
    }
    curriculum.push_back(ms1);
    EnvConfig demo_cfg;
    demo_cfg.horizon = 200;
    demo_cfg.max_relator_len = cap;
    TrainResult demo = train(curriculum, demo_cfg, smoke, opt);
    if (demo.solved_count != curriculum.size()) {
      ok = false;
      DETAIL("(f-demo) curriculum run solved %zu/%zu", demo.solved_count,
             curriculum.size());
    } else {
      DETAIL("(f-demo) curriculum of 1..5-move instances fully solved in %d "
             "phases", demo.phases);
    }
  }

  double dt = seconds_since(t0);
  if (dt >= 600) {
    ok = false;
    DETAIL("suite runtime %.0fs >= 600s", dt);
  } else {
    DETAIL("suite runtime %.0fs", dt);
  }
  return ok;
}

// ---- 9. random-walk corpus properties ----------------------------------
bool c9_lm_dataset(std::string& detail) {
  bool ok = true;
  auto ds = gen_MS_dataset(7, 7);
  std::vector<Presentation> seeds;
  for (auto& [idx, p] : ds) seeds.push_back(p);

  // 1%-scale run: one chain, 12 phases; reproducible and capped at 128
  {
    LmDatasetConfig cfg;
    cfg.phases = 12;
    cfg.chains = 1;
    cfg.moves_per_phase = 1000;
    cfg.max_relator_len = 128;
    cfg.seed = 11;
    auto t0 = Clock::now();
    auto run = [&]() {
      std::map<std::tuple<int, int, int>, std::string> out;
      std::mutex mu;
      gen_lm_dataset(seeds, cfg,
                     [&](const LmRecord& r) {
                       std::lock_guard<std::mutex> lock(mu);
                       out[{r.seed_index, r.chain, r.phase}] =
                           format(r.presentation);
                     });
      return out;
    };
    auto a = run();
    double dt = seconds_since(t0);
    auto b = run();
    if (a != b) {
      ok = false;
      DETAIL("1%% run not bit-reproducible");
    }
    if (a.size() != seeds.size() * 12) {
      ok = false;
      DETAIL("1%% run emitted %zu records", a.size());
    }
    for (auto& [key, text] : a) {
      Presentation p = parse_presentation(text);
      if (max_relator_length(p) > 128) {
        ok = false;
        DETAIL("relator above 128 in 1%% run");
        break;
      }
    }
    if (dt >= 300) {
      ok = false;
      DETAIL("1%% run took %.0fs >= 300s", dt);
    } else {
      DETAIL("1%% run %.0fs, %zu records", dt, a.size());
    }
  }

  // full-scale 20-bin presentation-length histogram stays near uniform
  {
    LmDatasetConfig cfg;
    cfg.seed = 11;
    std::vector<uint64_t> lengths;
    std::mutex mu;
    auto t0 = Clock::now();
    gen_lm_dataset(seeds, cfg, [&](const LmRecord& r) {
      std::lock_guard<std::mutex> lock(mu);
      lengths.push_back(static_cast<uint64_t>(length(r.presentation)));
      if (max_relator_length(r.presentation) > 128) lengths.back() = UINT64_MAX;
    });
    double dt = seconds_since(t0);
    uint64_t lo = UINT64_MAX, hi = 0;
    for (uint64_t l : lengths) {
      if (l == UINT64_MAX) {
        ok = false;
        DETAIL("relator above 128 at full scale");
        break;
      }
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    std::vector<uint64_t> bins(20, 0);
    double width = static_cast<double>(hi - lo) / 20.0;
    for (uint64_t l : lengths) {
      int b = width > 0 ? static_cast<int>((static_cast<double>(l - lo)) / width) : 0;
      bins[static_cast<size_t>(std::clamp(b, 0, 19))]++;
    }
    double mean_mass = static_cast<double>(lengths.size()) / 20.0;
    uint64_t worst = *std::max_element(bins.begin(), bins.end());
    if (static_cast<double>(worst) > 2.0 * mean_mass) {
      ok = false;
      DETAIL("full-scale histogram bin %llu > 2x mean %.0f",
             (unsigned long long)worst, mean_mass);
    }
    DETAIL("full scale: %zu records in %.0fs, max bin %.2fx mean",
           lengths.size(), dt, static_cast<double>(worst) / mean_mass);
  }
  return ok;
}

// ---- 10. move-engine algebra -------------------------------------------
bool c10_algebra(std::string& detail) {
  std::mt19937_64 rng(2024);
  uint64_t failures = 0;
  const int kTrials = 10000;
  for (int i = 0; i < kTrials; ++i) {
    int len1 = 1 + static_cast<int>(rng() % 20);
    int len2 = 1 + static_cast<int>(rng() % 20);
    Word r1, r2;
    while (static_cast<int>(r1.size()) < len1) {
      auto l = static_cast<uint8_t>(rng() % 4);
      if (!r1.empty() && static_cast<uint8_t>(r1.back()) == inverse_letter(l)) continue;
      r1.push_back(static_cast<char>(l));
    }
    while (static_cast<int>(r2.size()) < len2) {
      auto l = static_cast<uint8_t>(rng() % 4);
      if (!r2.empty() && static_cast<uint8_t>(r2.back()) == inverse_letter(l)) continue;
      r2.push_back(static_cast<char>(l));
    }
    Presentation p{r1, r2};
    for (int m = 1; m <= kNumMoves; ++m) {
      MoveId fwd{MoveSet::kPrime, m};
      MoveId bwd = inverse_move(fwd);
      if (!(apply_move(apply_move(p, fwd), bwd) == p)) failures++;
      if (!(apply_move(apply_move(p, bwd), fwd) == p)) failures++;
    }
  }
  DETAIL("%d presentations x 12 pairs x both orders, %llu failures", kTrials,
         (unsigned long long)failures);
  return failures == 0;
}

const Criterion kCriteria[] = {
    {1, "series counts (170 per n, 1190 total, <10s)", c1_series},
    {2, "stable certificate replay (53 moves, <=25, AK(3), <10ms)", c2_certificate},
    {3, "persistence tables match the published values through l=13", c3_tables},
    {4, "search baselines (n=1 and length<14 all solved; 533/278 +-3%)", c4_search},
    {5, "length increase along greedy-solved paths <= 6", c5_length_increase},
    {6, "5-step neighborhood statistics (72964/89872/131/89859)", c6_neighborhoods},
    {7, "union-find connectivity equals iterated first appearance (l<=8)", c7_conn_oracle},
    {8, "RL property suite (reward/GAE/gradients/mask/KL-stop/smoke)", c8_rl},
    {9, "random-walk corpus (reproducible, capped, near-uniform histogram)", c9_lm_dataset},
    {10, "prime inverse-pair compositions are the identity (10^4 cases)", c10_algebra},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    printf("%s [%2d] %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
           detail.empty() ? "" : " -- ", detail.c_str());
    fflush(stdout);
    if (!ok) failures++;
  }
  return failures == 0 ? 0 : 1;
}
