#include "acw/moves.hpp"

#include <stdexcept>

namespace acw {
namespace {

struct MoveSpec {
  enum Kind : uint8_t { kConcat, kInvert, kConjugate } kind;
  uint8_t target;    // relator rewritten (0 or 1)
  uint8_t invert_src;  // kConcat: append inverse of the other relator
  uint8_t g;         // kConjugate: result is g r g^-1
};

constexpr MoveSpec kPrimeMoves[kNumMoves] = {
    {MoveSpec::kConcat, 1, 0, 0},        // h1: r2 -> r2 r1
    {MoveSpec::kConcat, 0, 1, 0},        // h2: r1 -> r1 r2^-1
    {MoveSpec::kConcat, 1, 1, 0},        // h3: r2 -> r2 r1^-1
    {MoveSpec::kConcat, 0, 0, 0},        // h4: r1 -> r1 r2
    {MoveSpec::kConjugate, 1, 0, kLX},   // h5
    {MoveSpec::kConjugate, 0, 0, kLY},   // h6
    {MoveSpec::kConjugate, 1, 0, kLY},   // h7
    {MoveSpec::kConjugate, 0, 0, kLx},   // h8
    {MoveSpec::kConjugate, 1, 0, kLx},   // h9
    {MoveSpec::kConjugate, 0, 0, kLy},   // h10
    {MoveSpec::kConjugate, 1, 0, kLy},   // h11
    {MoveSpec::kConjugate, 0, 0, kLX},   // h12
};

constexpr MoveSpec kClassicalMoves[kNumMoves] = {
    {MoveSpec::kConcat, 0, 0, 0},        // r1 -> r1 r2
    {MoveSpec::kConcat, 1, 0, 0},        // r2 -> r2 r1
    {MoveSpec::kInvert, 0, 0, 0},        // r1 -> r1^-1
    {MoveSpec::kInvert, 1, 0, 0},        // r2 -> r2^-1
    {MoveSpec::kConjugate, 0, 0, kLx},
    {MoveSpec::kConjugate, 0, 0, kLy},
    {MoveSpec::kConjugate, 0, 0, kLX},
    {MoveSpec::kConjugate, 0, 0, kLY},
    {MoveSpec::kConjugate, 1, 0, kLx},
    {MoveSpec::kConjugate, 1, 0, kLy},
    {MoveSpec::kConjugate, 1, 0, kLX},
    {MoveSpec::kConjugate, 1, 0, kLY},
};

const MoveSpec& spec_for(MoveId m) {
  if (m.index < 1 || m.index > kNumMoves) {
    throw std::out_of_range("move index must be in 1..12");
  }
  return m.set == MoveSet::kPrime ? kPrimeMoves[m.index - 1]
                                  : kClassicalMoves[m.index - 1];
}

}  // namespace

const char* move_set_name(MoveSet set) {
  return set == MoveSet::kPrime ? "prime" : "classical";
}

MoveSet move_set_from_name(const std::string& name) {
  if (name == "prime") return MoveSet::kPrime;
  if (name == "classical") return MoveSet::kClassical;
  throw std::invalid_argument("unknown move set '" + name +
                              "' (expected prime or classical)");
}

int apply_move_fixed(FixedPres& s, MoveId m, FixedWord& scratch) {
  const MoveSpec& spec = spec_for(m);
  int t = spec.target;
  switch (spec.kind) {
    case MoveSpec::kConcat:
      concat_reduced(scratch, s.r[t], s.r[1 - t], spec.invert_src != 0);
      break;
    case MoveSpec::kInvert:
      invert_word(scratch, s.r[t]);
      break;
    case MoveSpec::kConjugate:
      conjugate_reduced(scratch, s.r[t], spec.g);
      break;
  }
  std::memcpy(s.r[t].a, scratch.a, static_cast<size_t>(scratch.len));
  s.r[t].len = scratch.len;
  return t;
}

bool apply_masked_fixed(FixedPres& s, MoveId m, int max_relator_len,
                        FixedWord& scratch) {
  const MoveSpec& spec = spec_for(m);
  int t = spec.target;
  switch (spec.kind) {
    case MoveSpec::kConcat:
      concat_reduced(scratch, s.r[t], s.r[1 - t], spec.invert_src != 0);
      break;
    case MoveSpec::kInvert:
      invert_word(scratch, s.r[t]);
      break;
    case MoveSpec::kConjugate:
      conjugate_reduced(scratch, s.r[t], spec.g);
      break;
  }
  if (scratch.len > max_relator_len) return false;
  std::memcpy(s.r[t].a, scratch.a, static_cast<size_t>(scratch.len));
  s.r[t].len = scratch.len;
  return true;
}

Presentation apply_move(const Presentation& p, MoveId m) {
  FixedPres s = fixed_from_presentation(p);
  FixedWord scratch;
  apply_move_fixed(s, m, scratch);
  return presentation_from_fixed(s);
}

Presentation apply_masked(const Presentation& p, MoveId m, int max_relator_len) {
  FixedPres s = fixed_from_presentation(p);
  FixedWord scratch;
  apply_masked_fixed(s, m, max_relator_len, scratch);
  return presentation_from_fixed(s);
}

std::vector<std::pair<MoveId, Presentation>> neighbors(const Presentation& p,
                                                       MoveSet set,
                                                       int max_relator_len) {
  std::vector<std::pair<MoveId, Presentation>> out;
  out.reserve(kNumMoves);
  FixedPres base = fixed_from_presentation(p);
  FixedWord scratch;
  for (int i = 1; i <= kNumMoves; ++i) {
    MoveId m{set, i};
    FixedPres s = base;
    if (!apply_masked_fixed(s, m, max_relator_len, scratch)) continue;
    int t = spec_for(m).target;
    if (fixed_word_equal(s.r[t], base.r[t])) continue;  // self-loop
    out.emplace_back(m, presentation_from_fixed(s));
  }
  return out;
}

int max_relator_bound(int n, const Word& w) {
  int a = 2 * n + 3;
  int b = static_cast<int>(w.size()) + 1;
  return 2 * std::max(a, b) + 2;
}

int max_relator_bound(const Presentation& p) {
  return 2 * max_relator_length(p) + 2;
}

MoveId inverse_move(MoveId m) {
  if (m.set != MoveSet::kPrime) {
    throw std::invalid_argument("inverse_move is defined for the prime set");
  }
  static constexpr int kInv[kNumMoves + 1] = {0, 3, 4, 1, 2, 9, 10, 11, 12, 5, 6, 7, 8};
  return MoveId{MoveSet::kPrime, kInv[m.index]};
}

}  // namespace acw
