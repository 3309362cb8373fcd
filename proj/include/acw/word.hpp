#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace acw {

// Letters of the rank-2 free group, encoded so that taking the inverse is a
// single xor and byte comparison gives the fixed order x < y < X < Y
// (X = x^-1, Y = y^-1).
enum Letter : uint8_t { kLx = 0, kLy = 1, kLX = 2, kLY = 3 };

constexpr uint8_t inverse_letter(uint8_t l) { return l ^ 2u; }
constexpr uint8_t generator_of(uint8_t l) { return l & 1u; }

// A word is a byte string over {0,1,2,3}. Everything downstream assumes words
// are freely reduced; free_reduce() is the only way raw sequences enter.
using Word = std::string;

Word free_reduce(std::string_view raw);
bool is_freely_reduced(std::string_view w);

// Strips matching inverse first/last letters. Expects a freely reduced word.
Word cyclic_reduce(Word w);
bool is_cyclically_reduced(std::string_view w);

Word inverse_word(std::string_view w);
Word rotated(std::string_view w, size_t k);
// Lexicographically smallest rotation under x < y < X < Y.
Word min_rotation(std::string_view w);

// (length, lex) order used for canonical forms and dedup keys.
bool word_less(std::string_view a, std::string_view b);

int exponent_sum_x(std::string_view w);

char letter_to_char(uint8_t l);
std::optional<uint8_t> letter_from_char(char c);

std::string word_to_text(std::string_view w);
// Throws std::invalid_argument on characters outside {x,y,X,Y}.
Word word_from_text(std::string_view text);

}  // namespace acw
