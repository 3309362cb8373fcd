#include "acw/cli.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acw/analysis.hpp"
#include "acw/certificate.hpp"
#include "acw/io.hpp"
#include "acw/moves.hpp"
#include "acw/neighborhoods.hpp"
#include "acw/rl/ppo.hpp"
#include "acw/search.hpp"
#include "acw/series.hpp"
#include "acw/topology.hpp"
#include "acw/version.hpp"

namespace acw {
namespace {

using Clock = std::chrono::steady_clock;

struct DatasetEntry {
  Presentation p;
  int n = 0;
  Word w;
};

// Reads a presentation file, picking up `# n=<n> w=<w>` annotations emitted
// by gen-series so the auto relator bound can use the series formula.
std::vector<DatasetEntry> read_annotated(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    in = &file;
  }
  std::vector<DatasetEntry> out;
  std::string line;
  int pending_n = 0;
  Word pending_w;
  size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      int n = 0;
      char wbuf[256] = {0};
      if (sscanf(line.c_str() + start, "# n=%d w=%255s", &n, wbuf) == 2) {
        pending_n = n;
        pending_w = word_from_text(wbuf);
      }
      continue;
    }
    size_t end = line.find_last_not_of(" \t");
    try {
      DatasetEntry e;
      e.p = parse_presentation(std::string_view(line).substr(start, end - start + 1));
      e.n = pending_n;
      e.w = pending_w;
      out.push_back(std::move(e));
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               err.what());
    }
    pending_n = 0;
    pending_w.clear();
  }
  return out;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

void finish_manifest(const std::string& out_dir, const std::string& sub,
                     const std::vector<std::string>& args, uint64_t seed,
                     const std::vector<std::string>& inputs,
                     Clock::time_point t0) {
  if (out_dir.empty()) return;
  RunManifest m;
  m.subcommand = sub;
  m.config = join_args(args);
  m.seed = seed;
  m.version = kVersion;
  for (const auto& p : inputs) {
    if (p != "-") m.input_digests.emplace_back(p, fnv1a_file_digest(p));
  }
  m.wall_time_s =
      std::chrono::duration<double>(Clock::now() - t0).count();
  write_manifest(out_dir, m);
}

std::ostream& open_output(std::ofstream& file, const std::string& out_dir,
                          const std::string& name) {
  if (out_dir.empty()) return std::cout;
  std::filesystem::create_directories(out_dir);
  file.open(out_dir + "/" + name);
  if (!file) throw std::runtime_error("cannot write " + out_dir + "/" + name);
  return file;
}

int cmd_gen_series(const std::vector<std::string>& args) {
  CLI::App app{"Generate the presentation series"};
  int nmax = 7, wlen = 7;
  std::string out_dir;
  std::string gordon;
  int ak_n = 0;
  app.add_option("--nmax", nmax, "largest n");
  app.add_option("--wlen", wlen, "largest |w|");
  app.add_option("--ak", ak_n, "emit the single AK(n) presentation instead");
  app.add_option("--gordon", gordon,
                 "emit one Gordon presentation G(m,n,p,q): m,n,p,q");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "series.txt");
  if (ak_n > 0) {
    os << "# AK(" << ak_n << ")\n" << format(gen_AK(ak_n)) << "\n";
  } else if (!gordon.empty()) {
    int m, n, p, q;
    if (sscanf(gordon.c_str(), "%d,%d,%d,%d", &m, &n, &p, &q) != 4) {
      std::cerr << "--gordon expects m,n,p,q\n";
      return 2;
    }
    os << "# G(" << gordon << ")\n" << format(gen_Gordon(m, n, p, q)) << "\n";
  } else {
    auto ds = gen_MS_dataset(nmax, wlen);
    for (const auto& [idx, p] : ds) {
      os << "# n=" << idx.n << " w=" << word_to_text(idx.w) << "\n"
         << format(p) << "\n";
    }
    std::cerr << "wrote " << ds.size() << " presentations (n <= " << nmax
              << ", |w| <= " << wlen << ")\n";
  }
  finish_manifest(out_dir, "gen-series", args, 0, {}, t0);
  return 0;
}

int cmd_solve(const std::vector<std::string>& args) {
  CLI::App app{"Search for trivializations"};
  std::string algo = "greedy", move_set = "prime", bound = "auto", out_dir;
  std::string input;
  uint64_t max_nodes = 1'000'000;
  int threads = 0;
  app.add_option("input", input, "presentation file (- for stdin)")->required();
  app.add_option("--algo", algo, "bfs|greedy")
      ->check(CLI::IsMember({"bfs", "greedy"}));
  app.add_option("--max-nodes", max_nodes, "visited-state cap");
  app.add_option("--move-set", move_set, "prime|classical")
      ->check(CLI::IsMember({"prime", "classical"}));
  app.add_option("--max-relator-len", bound, "auto or a positive integer");
  app.add_option("--threads", threads, "worker cap (default all cores)");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  auto entries = read_annotated(input);
  std::vector<BatchInput> inputs;
  for (auto& e : entries) {
    inputs.push_back(BatchInput{e.p, e.n, e.w});
  }
  BatchOptions opt;
  opt.algo = algo == "bfs" ? SearchAlgo::kBfs : SearchAlgo::kGreedy;
  opt.max_nodes = max_nodes;
  opt.move_set = move_set_from_name(move_set);
  opt.threads = threads;
  if (bound != "auto") opt.max_relator_len = std::stoi(bound);

  BatchSummary summary;
  auto items = batch_solve(inputs, opt, &summary);

  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "results.jsonl");
  for (size_t i = 0; i < items.size(); ++i) {
    nlohmann::json j;
    j["input"] = format(inputs[i].presentation);
    j["solved"] = items[i].result.solved;
    std::vector<int> path;
    for (MoveId m : items[i].result.path) path.push_back(m.index);
    j["path"] = path;
    j["nodes_visited"] = items[i].result.nodes_visited;
    j["max_length_seen"] = items[i].result.max_length_seen;
    j["bound"] = items[i].bound;
    os << j.dump() << "\n";
  }
  std::cerr << "solved " << summary.solved << "/" << summary.total << "\n";
  for (auto& [n, counts] : summary.by_n) {
    std::cerr << "  n=" << n << ": " << counts.first << "/" << counts.second
              << "\n";
  }
  std::cerr << "max length increase over solved paths: "
            << summary.max_path_length_increase << "\n";
  finish_manifest(out_dir, "solve", args, 0, {input}, t0);
  return 0;
}

int cmd_verify_ak3(const std::vector<std::string>& args) {
  CLI::App app{"Replay the stable-trivialization certificate"};
  std::string cert_file;
  app.add_option("--cert", cert_file, "user certificate in path-file format");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  Certificate cert = ak3_certificate();
  if (!cert_file.empty()) {
    PathFile pf = read_path_file(cert_file);
    if (pf.paths.size() != 1) {
      std::cerr << "certificate file must contain exactly one path\n";
      return 2;
    }
    cert.moves = to_moves(pf.paths[0], pf.set);
    if (pf.start) cert.start = *pf.start;
    if (pf.terminal) cert.claimed_terminal = *pf.terminal;
    if (pf.max_length) cert.claimed_max_length = *pf.max_length;
  }
  VerifyReport rep = verify(cert);
  for (size_t i = 0; i < rep.length_profile.size(); ++i) {
    std::cout << i << "\t" << rep.length_profile[i] << "\n";
  }
  std::cout << "terminal\t" << format(rep.terminal) << "\n";
  std::cerr << (rep.ok ? "OK" : "FAIL") << ": " << cert.moves.size()
            << " moves, max length " << rep.max_length_seen << " (claimed <= "
            << cert.claimed_max_length << ")\n";
  if (!rep.ok) {
    std::cerr << "first divergence at step " << *rep.first_divergence << "\n";
    return 1;
  }
  return 0;
}

int cmd_persistence_table(const std::vector<std::string>& args) {
  CLI::App app{"Filtration tables of the identity component"};
  std::string move_set = "prime", fmt = "tsv", dump_dir, from_dir, out_dir;
  int lmax = 13, threads = 0;
  bool serial = false;
  app.add_option("--move-set", move_set, "prime|classical")
      ->check(CLI::IsMember({"prime", "classical"}));
  app.add_option("--lmax", lmax, "largest presentation length")
      ->check(CLI::Range(3, 16));
  app.add_option("--format", fmt, "tsv|markdown")
      ->check(CLI::IsMember({"tsv", "markdown"}));
  app.add_option("--dump-graph", dump_dir, "write vertices.bin/edges.bin here");
  app.add_option("--from-graph", from_dir, "load a dumped graph instead of enumerating");
  app.add_option("--threads", threads, "worker cap (default all cores)");
  app.add_flag("--serial", serial, "use the single-threaded reference enumeration");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  MoveSet set = move_set_from_name(move_set);
  FilteredGraph g;
  if (!from_dir.empty()) {
    g = load_graph(from_dir);
  } else if (serial) {
    g = enumerate_identity_component_serial(lmax, set);
  } else {
    g = enumerate_identity_component(lmax, set, threads);
  }
  if (!dump_dir.empty()) dump_graph(g, dump_dir);
  auto rows = persistence_table(g);

  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "table.tsv");
  if (fmt == "markdown") {
    os << "| l | v | e | ic1 | ic2 | ic3 |\n|---|---|---|---|---|---|\n";
    for (auto& r : rows) {
      os << "| " << r.l << " | " << r.v << " | " << r.e << " | " << r.ic1
         << " | " << r.ic2 << " | " << r.ic3 << " |\n";
    }
  } else {
    os << "l\tv\te\tic1\tic2\tic3\n";
    for (auto& r : rows) {
      os << r.l << '\t' << r.v << '\t' << r.e << '\t' << r.ic1 << '\t' << r.ic2
         << '\t' << r.ic3 << '\n';
    }
  }
  std::cerr << move_set << " table to l=" << lmax << ": " << g.vertices.size()
            << " vertices, " << g.edge_count() << " edges\n";
  finish_manifest(out_dir, "persistence-table", args, 0, {}, t0);
  return 0;
}

int cmd_neighborhoods(const std::vector<std::string>& args) {
  CLI::App app{"k-step neighborhood sizes over a dataset"};
  std::string input, labels_file, out_dir;
  int k = 5, threads = 0;
  app.add_option("input", input, "presentation file (- for stdin)")->required();
  app.add_option("--k", k, "neighborhood depth");
  app.add_option("--labels", labels_file,
                 "lines: presentation-line-index,solved|unsolved");
  app.add_option("--threads", threads, "worker cap (default all cores)");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  auto entries = read_annotated(input);
  std::vector<Presentation> seeds;
  for (auto& e : entries) seeds.push_back(e.p);
  auto sizes = neighborhood_sizes(seeds, k, MoveSet::kPrime, threads);
  auto st = neighborhood_stats(sizes);

  std::vector<bool> labels;
  if (!labels_file.empty()) {
    labels.assign(seeds.size(), false);
    std::ifstream lf(labels_file);
    if (!lf) throw std::runtime_error("cannot open " + labels_file);
    std::string line;
    while (std::getline(lf, line)) {
      if (line.empty() || line[0] == '#') continue;
      size_t comma = line.find(',');
      if (comma == std::string::npos) {
        throw std::runtime_error("labels: expected index,solved|unsolved");
      }
      size_t idx = std::stoul(line.substr(0, comma));
      std::string tag = line.substr(comma + 1);
      if (idx >= labels.size()) throw std::runtime_error("label index out of range");
      labels[idx] = tag == "solved";
    }
  }

  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "sizes.tsv");
  os << "index\tsize" << (labels.empty() ? "" : "\tlabel") << "\n";
  for (size_t i = 0; i < sizes.size(); ++i) {
    os << i << '\t' << sizes[i];
    if (!labels.empty()) os << '\t' << (labels[i] ? "solved" : "unsolved");
    os << '\n';
  }

  std::cerr << "min=" << st.min << " max=" << st.max << " mean=" << st.mean
            << " median=" << st.median << " distinct=" << st.distinct << "\n";
  for (int bins : {6, 26}) {
    auto h = st.histogram(bins);
    std::cerr << bins << "-bin histogram:";
    for (uint64_t c : h) std::cerr << ' ' << c;
    std::cerr << "\n";
  }
  if (!labels.empty()) {
    auto rep = band_report(sizes, labels);
    std::cerr << "solved=" << rep.solved_total
              << " unsolved=" << rep.unsolved_total << "\n";
    for (auto& b : rep.bands) {
      std::cerr << "band [" << b.band.first << ", " << b.band.second
                << "]: solved " << b.solved_inside << ", unsolved "
                << b.unsolved_inside << "\n";
    }
    std::cerr << "solved outside all bands: "
              << 100.0 * rep.solved_outside_fraction << "%\n"
              << "unsolved inside some band: "
              << 100.0 * rep.unsolved_inside_fraction << "%\n";
  }
  finish_manifest(out_dir, "neighborhoods", args, 0, {input}, t0);
  return 0;
}

int cmd_train_ppo(const std::vector<std::string>& args) {
  CLI::App app{"Train the trivialization policy"};
  std::string dataset_file, out_dir;
  rl::PpoConfig ppo;
  uint64_t total_rollouts = 200000, seed = 1;
  int horizon = 200, threads = 0, relator_cap = 0;
  app.add_option("--dataset", dataset_file, "presentation file")->required();
  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--horizon", horizon, "episode cap T");
  app.add_option("--actors", ppo.actors, "parallel environments");
  app.add_option("--total-rollouts", total_rollouts,
                 "actor-segments of rollout-len steps");
  app.add_option("--rollout-len", ppo.rollout_len, "steps per actor per phase");
  app.add_option("--seed", seed, "run seed");
  app.add_option("--lr", ppo.lr_max, "peak learning rate");
  app.add_option("--hidden", ppo.hidden, "hidden units per layer");
  app.add_option("--max-relator-len", relator_cap,
                 "state cap L (default: series formula maximum over dataset)");
  app.add_option("--threads", threads, "worker cap (default all cores)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  if (threads > 0) omp_set_num_threads(threads);
  auto t0 = Clock::now();
  auto entries = read_annotated(dataset_file);
  if (entries.empty()) {
    std::cerr << "empty dataset\n";
    return 2;
  }
  std::vector<Presentation> dataset;
  int cap = relator_cap;
  for (auto& e : entries) {
    dataset.push_back(e.p);
    if (relator_cap <= 0) {
      int b = (e.n > 0 && !e.w.empty()) ? max_relator_bound(e.n, e.w)
                                        : max_relator_bound(e.p);
      cap = std::max(cap, b);
    }
  }
  rl::EnvConfig env_cfg;
  env_cfg.horizon = horizon;
  env_cfg.max_relator_len = cap;
  rl::TrainOptions opt;
  opt.total_rollouts = total_rollouts;
  opt.seed = seed;
  opt.out_dir = out_dir;
  opt.on_phase = [](int phase, const rl::UpdateStats& st, size_t solved) {
    if (phase % 10 == 0) {
      std::cerr << "phase " << phase << ": solved=" << solved
                << " kl=" << st.approx_kl << " pi_loss=" << st.policy_loss
                << " v_loss=" << st.value_loss << " entropy=" << st.entropy
                << (st.early_stopped ? " [kl stop]" : "") << "\n";
    }
  };
  rl::TrainResult res = rl::train(dataset, env_cfg, ppo, opt);
  std::cerr << "trained " << res.phases << " phases, " << res.env_steps
            << " env steps; solved " << res.solved_count << "/"
            << dataset.size() << "\n";
  finish_manifest(out_dir, "train-ppo", args, seed, {dataset_file}, t0);
  return 0;
}

int cmd_anatomy(const std::vector<std::string>& args) {
  CLI::App app{"Move-frequency profile of trivialization paths"};
  std::string input, out_dir;
  app.add_option("input", input, "path file")->required();
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  PathFile pf = read_path_file(input);
  AnatomyProfile prof = anatomy(pf.paths);
  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "anatomy.tsv");
  os << "move\tcount\tfrequency\n";
  for (int m = 1; m <= kNumMoves; ++m) {
    os << m << '\t' << prof.counts[static_cast<size_t>(m)] << '\t'
       << prof.frequency(m) << '\n';
  }
  for (int m = 1; m <= kNumMoves; ++m) {
    int bar = static_cast<int>(prof.frequency(m) * 60 + 0.5);
    std::cerr << (m < 10 ? " " : "") << m << " |" << std::string(bar, '#')
              << " " << prof.counts[static_cast<size_t>(m)] << "\n";
  }
  finish_manifest(out_dir, "anatomy", args, 0, {input}, t0);
  return 0;
}

int cmd_mine_supermoves(const std::vector<std::string>& args) {
  CLI::App app{"Frequent subsequences of trivialization paths"};
  std::string input, out_dir;
  int max_len = 6, top_k = 20;
  uint64_t min_support = 3;
  app.add_option("input", input, "path file")->required();
  app.add_option("--max-len", max_len, "longest subsequence");
  app.add_option("--top-k", top_k, "entries to keep");
  app.add_option("--min-support", min_support, "distinct-path support floor");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  PathFile pf = read_path_file(input);
  auto mined = mine_supermoves(pf.paths, max_len, top_k, min_support);
  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "supermoves.tsv");
  os << "moves\tpath_support\toccurrences\n";
  for (auto& sm : mined) {
    for (size_t i = 0; i < sm.moves.size(); ++i) {
      os << (i ? " " : "") << sm.moves[i];
    }
    os << '\t' << sm.path_support << '\t' << sm.occurrences << '\n';
  }
  std::cerr << mined.size() << " supermoves (max-len " << max_len
            << ", support >= " << min_support << ")\n";
  finish_manifest(out_dir, "mine-supermoves", args, 0, {input}, t0);
  return 0;
}

int cmd_gen_lm_dataset(const std::vector<std::string>& args) {
  CLI::App app{"Random-walk presentation corpus"};
  std::string dataset_file, out_dir;
  LmDatasetConfig cfg;
  int threads = 0;
  app.add_option("--dataset", dataset_file, "seed presentations")->required();
  app.add_option("--phases", cfg.phases, "phases per chain");
  app.add_option("--chains", cfg.chains, "chains per seed (m)");
  app.add_option("--moves", cfg.moves_per_phase, "moves per phase");
  app.add_option("--lmax", cfg.max_relator_len, "relator length ceiling");
  app.add_option("--seed", cfg.seed, "run seed");
  app.add_option("--threads", threads, "worker cap (default all cores)");
  app.add_option("--out", out_dir, "output directory (default stdout)");
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }
  auto t0 = Clock::now();
  auto entries = read_annotated(dataset_file);
  std::vector<Presentation> seeds;
  for (auto& e : entries) seeds.push_back(e.p);
  std::ofstream file;
  std::ostream& os = open_output(file, out_dir, "dataset.jsonl");
  std::mutex mu;
  uint64_t count = 0;
  gen_lm_dataset(seeds, cfg,
                 [&](const LmRecord& rec) {
                   nlohmann::json j;
                   j["presentation"] = format(rec.presentation);
                   j["seed_index"] = rec.seed_index;
                   j["chain"] = rec.chain;
                   j["phase"] = rec.phase;
                   j["l_i"] = rec.relator_cap;
                   std::lock_guard<std::mutex> lock(mu);
                   os << j.dump() << "\n";
                   ++count;
                 },
                 threads);
  std::cerr << "emitted " << count << " presentations\n";
  finish_manifest(out_dir, "gen-lm-dataset", args, cfg.seed, {dataset_file}, t0);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  if (args.empty() || args[0] == "-h" || args[0] == "--help") {
    std::cerr << kVersion << "\n"
              << "subcommands: gen-series solve verify-ak3 persistence-table\n"
              << "             neighborhoods train-ppo anatomy mine-supermoves\n"
              << "             gen-lm-dataset\n"
              << "run '<subcommand> --help' for flags\n";
    return args.empty() ? 2 : 0;
  }
  std::string sub = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  try {
    if (sub == "gen-series") return cmd_gen_series(rest);
    if (sub == "solve") return cmd_solve(rest);
    if (sub == "verify-ak3") return cmd_verify_ak3(rest);
    if (sub == "persistence-table") return cmd_persistence_table(rest);
    if (sub == "neighborhoods") return cmd_neighborhoods(rest);
    if (sub == "train-ppo") return cmd_train_ppo(rest);
    if (sub == "anatomy") return cmd_anatomy(rest);
    if (sub == "mine-supermoves") return cmd_mine_supermoves(rest);
    if (sub == "gen-lm-dataset") return cmd_gen_lm_dataset(rest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "unknown subcommand '" << sub << "'\n";
  return 2;
}

}  // namespace acw
