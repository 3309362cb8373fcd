#include "acw/series.hpp"

#include <map>
#include <stdexcept>

namespace acw {
namespace {

Word power(uint8_t l, int k) { return Word(static_cast<size_t>(k), static_cast<char>(l)); }

Word commutator_power(uint8_t base, int e, uint8_t other, int f) {
  // [base^e, other^f]
  auto pow_signed = [](uint8_t l, int k) {
    return k >= 0 ? power(l, k) : power(inverse_letter(l), -k);
  };
  Word a = pow_signed(base, e);
  Word b = pow_signed(other, f);
  return a + b + inverse_word(a) + inverse_word(b);
}

}  // namespace

Presentation gen_AK(int n) {
  if (n < 2) throw std::invalid_argument("gen_AK requires n >= 2");
  Word r1 = power(kLx, n) + power(kLY, n + 1);
  Word r2 = word_from_text("xyxYXY");
  return Presentation{r1, r2};
}

Presentation gen_MS(int n, const Word& w) {
  if (n < 1) throw std::invalid_argument("gen_MS requires n >= 1");
  if (w.empty()) throw std::invalid_argument("gen_MS requires a nonempty w");
  if (!is_freely_reduced(w)) throw std::invalid_argument("w must be freely reduced");
  if (exponent_sum_x(w) != 0) {
    throw std::invalid_argument("w must have zero exponent sum on x");
  }
  Word r1 = power(kLX, 1) + power(kLy, n) + power(kLx, 1) + power(kLY, n + 1);
  Word r2 = free_reduce(power(kLX, 1) + w);
  return Presentation{r1, r2};
}

std::vector<std::pair<MSIndex, Presentation>> gen_MS_dataset(int n_max,
                                                             int wlen_max) {
  // Enumerate freely reduced w in (|w|, lex) order and dedup by the rotation
  // class of the cyclically reduced x^-1 w, keeping the first hit.
  std::map<Word, Word> class_to_w;  // class key -> first w
  std::vector<Word> kept_order;     // in (|w|, lex) enumeration order

  std::vector<Word> current;  // all reduced words of the current length
  for (int len = 1; len <= wlen_max; ++len) {
    std::vector<Word> next;
    if (len == 1) {
      for (uint8_t l = 0; l < 4; ++l) next.push_back(power(l, 1));
    } else {
      for (const Word& w : current) {
        for (uint8_t l = 0; l < 4; ++l) {
          if (inverse_letter(static_cast<uint8_t>(w.back())) == l) continue;
          next.push_back(w + static_cast<char>(l));
        }
      }
    }
    current = std::move(next);
    for (const Word& w : current) {
      if (exponent_sum_x(w) != 0) continue;
      Word key = min_rotation(cyclic_reduce(free_reduce(power(kLX, 1) + w)));
      // A single-letter class means the second relation collapses to x = 1;
      // those degenerate members are not part of the family.
      if (key.size() <= 1) continue;
      auto [it, inserted] = class_to_w.emplace(std::move(key), w);
      if (inserted) kept_order.push_back(w);
    }
  }

  std::vector<std::pair<MSIndex, Presentation>> out;
  out.reserve(static_cast<size_t>(n_max) * kept_order.size());
  for (int n = 1; n <= n_max; ++n) {
    for (const Word& w : kept_order) {
      out.emplace_back(MSIndex{n, w}, gen_MS(n, w));
    }
  }
  return out;
}

Presentation mms_length25() {
  return Presentation{word_from_text("XYxYXyxYYxyXy"),
                      word_from_text("YXyyXYxyxYYx")};
}

Presentation gen_Gordon(int m, int n, int p, int q) {
  Word r1 = free_reduce(power(kLX, 1) + commutator_power(kLx, m, kLy, n));
  Word r2 = free_reduce(power(kLY, 1) + commutator_power(kLy, p, kLx, q));
  return Presentation{r1, r2};
}

}  // namespace acw
