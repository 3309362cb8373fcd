#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

// Move path file: a `set: prime|classical` header, optional
// `start:`/`terminal:`/`max-length:` headers, then one whitespace-separated
// move-index path per line. `#` starts a comment.
struct PathFile {
  MoveSet set = MoveSet::kPrime;
  std::optional<Presentation> start;
  std::optional<Presentation> terminal;
  std::optional<int> max_length;
  std::vector<std::vector<int>> paths;
};

PathFile read_path_file(const std::string& path);
void write_path_file(const std::string& path, const PathFile& pf);

std::vector<MoveId> to_moves(const std::vector<int>& indices, MoveSet set);

// Every output directory gets exactly one of these.
struct RunManifest {
  std::string subcommand;
  std::string config;  // the full flag set, one token per entry
  uint64_t seed = 0;
  std::string version;
  std::vector<std::pair<std::string, std::string>> input_digests;  // path, fnv1a
  double wall_time_s = 0.0;
};

std::string fnv1a_file_digest(const std::string& path);
void write_manifest(const std::string& dir, const RunManifest& m);

}  // namespace acw
