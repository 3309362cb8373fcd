#include "acw/presentation.hpp"

#include <fstream>
#include <stdexcept>

namespace acw {

bool is_trivial_state(const Presentation& p) {
  if (p.r1.size() != 1 || p.r2.size() != 1) return false;
  return generator_of(static_cast<uint8_t>(p.r1[0])) !=
         generator_of(static_cast<uint8_t>(p.r2[0]));
}

CanonicalForm canonicalize(const Presentation& p) {
  if (word_less(p.r2, p.r1)) return CanonicalForm{p.r2, p.r1};
  return CanonicalForm{p.r1, p.r2};
}

std::string format(const Presentation& p) {
  return word_to_text(p.r1) + "," + word_to_text(p.r2);
}

Presentation parse_presentation(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos ||
      text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("expected exactly two comma-separated relators");
  }
  Presentation p{word_from_text(text.substr(0, comma)),
                 word_from_text(text.substr(comma + 1))};
  if (p.r1.empty() || p.r2.empty()) {
    throw std::invalid_argument("empty relator");
  }
  if (!is_freely_reduced(p.r1) || !is_freely_reduced(p.r2)) {
    throw std::invalid_argument("relator is not freely reduced");
  }
  return p;
}

std::vector<Presentation> read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Presentation> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t end = line.find_last_not_of(" \t");
    try {
      out.push_back(parse_presentation(
          std::string_view(line).substr(start, end - start + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return out;
}

}  // namespace acw
