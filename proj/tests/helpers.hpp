#pragma once

#include <random>
#include <string>

#include "acw/presentation.hpp"
#include "acw/word.hpp"

namespace acw::test {

inline Word random_raw_word(std::mt19937_64& rng, int len) {
  Word w;
  std::uniform_int_distribution<int> letter(0, 3);
  for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(letter(rng)));
  return w;
}

inline Word random_reduced_word(std::mt19937_64& rng, int len) {
  Word w;
  std::uniform_int_distribution<int> letter(0, 3);
  while (static_cast<int>(w.size()) < len) {
    auto l = static_cast<uint8_t>(letter(rng));
    if (!w.empty() && static_cast<uint8_t>(w.back()) == inverse_letter(l)) continue;
    w.push_back(static_cast<char>(l));
  }
  return w;
}

inline Presentation random_presentation(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  return Presentation{random_reduced_word(rng, len(rng)),
                      random_reduced_word(rng, len(rng))};
}

// Reference reduction: rescan until no adjacent inverse pair remains.
inline Word naive_reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (static_cast<uint8_t>(w[i]) ==
          inverse_letter(static_cast<uint8_t>(w[i + 1]))) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace acw::test
