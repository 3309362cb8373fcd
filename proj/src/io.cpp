#include "acw/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "acw/version.hpp"

namespace acw {

PathFile read_path_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  PathFile pf;
  bool have_set = false;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string body = line.substr(start);
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto header_value = [&](const char* key) -> std::optional<std::string> {
      std::string prefix = std::string(key) + ":";
      if (body.rfind(prefix, 0) != 0) return std::nullopt;
      std::string v = body.substr(prefix.size());
      size_t b = v.find_first_not_of(" \t");
      return b == std::string::npos ? std::string{} : v.substr(b);
    };
    if (auto v = header_value("set")) {
      pf.set = move_set_from_name(*v);
      have_set = true;
    } else if (auto v = header_value("start")) {
      pf.start = parse_presentation(*v);
    } else if (auto v = header_value("terminal")) {
      pf.terminal = parse_presentation(*v);
    } else if (auto v = header_value("max-length")) {
      pf.max_length = std::stoi(*v);
    } else {
      std::istringstream ss(body);
      std::vector<int> moves;
      int idx;
      while (ss >> idx) {
        if (idx < 1 || idx > kNumMoves) fail("move index out of range 1..12");
        moves.push_back(idx);
      }
      if (!ss.eof()) fail("malformed move index");
      pf.paths.push_back(std::move(moves));
    }
  }
  if (!have_set) {
    throw std::runtime_error(path + ": missing 'set:' header");
  }
  return pf;
}

void write_path_file(const std::string& path, const PathFile& pf) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "set: " << move_set_name(pf.set) << "\n";
  if (pf.start) out << "start: " << format(*pf.start) << "\n";
  if (pf.terminal) out << "terminal: " << format(*pf.terminal) << "\n";
  if (pf.max_length) out << "max-length: " << *pf.max_length << "\n";
  for (const auto& p : pf.paths) {
    for (size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << "\n";
  }
}

std::vector<MoveId> to_moves(const std::vector<int>& indices, MoveSet set) {
  std::vector<MoveId> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(MoveId{set, i});
  return out;
}

std::string fnv1a_file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

void write_manifest(const std::string& dir, const RunManifest& m) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["subcommand"] = m.subcommand;
  j["config"] = m.config;
  j["seed"] = m.seed;
  j["version"] = m.version.empty() ? kVersion : m.version;
  nlohmann::json digests = nlohmann::json::object();
  for (const auto& [p, d] : m.input_digests) digests[p] = d;
  j["input_digests"] = digests;
  j["wall_time_s"] = m.wall_time_s;
  std::ofstream out(dir + "/manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest in " + dir);
  out << j.dump(2) << "\n";
}

}  // namespace acw
