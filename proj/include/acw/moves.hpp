#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "acw/kernel.hpp"
#include "acw/presentation.hpp"

namespace acw {

// Both sets have 12 moves indexed 1..12.
//
// prime (h1..h12):
//   h1: r2 -> r2 r1        h5: r2 -> x^-1 r2 x   h9:  r2 -> x r2 x^-1
//   h2: r1 -> r1 r2^-1     h6: r1 -> y^-1 r1 y   h10: r1 -> y r1 y^-1
//   h3: r2 -> r2 r1^-1     h7: r2 -> y^-1 r2 y   h11: r2 -> y r2 y^-1
//   h4: r1 -> r1 r2        h8: r1 -> x r1 x^-1   h12: r1 -> x^-1 r1 x
//
// classical:
//   1: r1 -> r1 r2   2: r2 -> r2 r1   3: r1 -> r1^-1   4: r2 -> r2^-1
//   5..8:  r1 -> g r1 g^-1 for g = x, y, x^-1, y^-1
//   9..12: r2 -> g r2 g^-1 for g = x, y, x^-1, y^-1
enum class MoveSet : uint8_t { kClassical = 0, kPrime = 1 };

inline constexpr int kNumMoves = 12;

struct MoveId {
  MoveSet set = MoveSet::kPrime;
  int index = 1;  // 1..12

  bool operator==(const MoveId&) const = default;
};

// Relator lengths are capped at this value when a search is unbounded.
inline constexpr int kUnboundedRelatorLen = std::numeric_limits<int32_t>::max();

const char* move_set_name(MoveSet set);
MoveSet move_set_from_name(const std::string& name);  // throws on bad name

// In-place kernel application; the untouched relator is preserved.
// `scratch` must not alias `s`. Returns the index (0/1) of the relator the
// move rewrites.
int apply_move_fixed(FixedPres& s, MoveId m, FixedWord& scratch);

// Kernel application with masking: if any relator of the result would exceed
// max_relator_len, s is left unchanged and false is returned.
bool apply_masked_fixed(FixedPres& s, MoveId m, int max_relator_len,
                        FixedWord& scratch);

Presentation apply_move(const Presentation& p, MoveId m);
// No-op (returns p unchanged) when the result would violate the bound.
// Requires p itself to satisfy the bound.
Presentation apply_masked(const Presentation& p, MoveId m, int max_relator_len);

// All 12 moves in index order, keeping only results that differ from p and
// satisfy the bound.
std::vector<std::pair<MoveId, Presentation>> neighbors(const Presentation& p,
                                                       MoveSet set,
                                                       int max_relator_len);

// Per-relator length cap for searching MS(n, w): 2*max(2n+3, |w|+1) + 2.
int max_relator_bound(int n, const Word& w);
// Generic fallback for presentations without an (n, w) index:
// 2*max(|r1|, |r2|) + 2.
int max_relator_bound(const Presentation& p);

// Defined for the prime set: (h1,h3), (h2,h4), (h5,h9), (h6,h10), (h7,h11),
// (h8,h12) and their reverses.
MoveId inverse_move(MoveId m);

}  // namespace acw
