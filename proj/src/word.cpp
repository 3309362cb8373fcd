#include "acw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace acw {

Word free_reduce(std::string_view raw) {
  Word out;
  out.reserve(raw.size());
  for (char c : raw) {
    auto l = static_cast<uint8_t>(c);
    if (!out.empty() && static_cast<uint8_t>(out.back()) == inverse_letter(l)) {
      out.pop_back();
    } else {
      out.push_back(static_cast<char>(l));
    }
  }
  return out;
}

bool is_freely_reduced(std::string_view w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (static_cast<uint8_t>(w[i]) ==
        inverse_letter(static_cast<uint8_t>(w[i - 1]))) {
      return false;
    }
  }
  return true;
}

Word cyclic_reduce(Word w) {
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && static_cast<uint8_t>(w[lo]) ==
                             inverse_letter(static_cast<uint8_t>(w[hi - 1]))) {
    ++lo;
    --hi;
  }
  return w.substr(lo, hi - lo);
}

bool is_cyclically_reduced(std::string_view w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() >= 2 && static_cast<uint8_t>(w.front()) ==
                           inverse_letter(static_cast<uint8_t>(w.back()))) {
    return false;
  }
  return true;
}

Word inverse_word(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(static_cast<char>(inverse_letter(static_cast<uint8_t>(*it))));
  }
  return out;
}

Word rotated(std::string_view w, size_t k) {
  if (w.empty()) return Word{};
  k %= w.size();
  Word out;
  out.reserve(w.size());
  out.append(w.substr(k));
  out.append(w.substr(0, k));
  return out;
}

Word min_rotation(std::string_view w) {
  Word best(w);
  for (size_t k = 1; k < w.size(); ++k) {
    Word cand = rotated(w, k);
    if (cand < best) best = cand;
  }
  return best;
}

bool word_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int exponent_sum_x(std::string_view w) {
  int s = 0;
  for (char c : w) {
    auto l = static_cast<uint8_t>(c);
    if (l == kLx) ++s;
    if (l == kLX) --s;
  }
  return s;
}

char letter_to_char(uint8_t l) {
  static constexpr char kChars[4] = {'x', 'y', 'X', 'Y'};
  return kChars[l & 3u];
}

std::optional<uint8_t> letter_from_char(char c) {
  switch (c) {
    case 'x': return kLx;
    case 'y': return kLy;
    case 'X': return kLX;
    case 'Y': return kLY;
    default: return std::nullopt;
  }
}

std::string word_to_text(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) out.push_back(letter_to_char(static_cast<uint8_t>(c)));
  return out;
}

Word word_from_text(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    auto l = letter_from_char(c);
    if (!l) {
      throw std::invalid_argument("invalid letter '" + std::string(1, c) +
                                  "', expected one of x, y, X, Y");
    }
    out.push_back(static_cast<char>(*l));
  }
  return out;
}

}  // namespace acw
