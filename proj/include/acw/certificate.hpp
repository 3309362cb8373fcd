#pragma once

#include <optional>
#include <vector>

#include "acw/moves.hpp"
#include "acw/presentation.hpp"

namespace acw {

// A replayable connectivity claim: applying `moves` (prime set) to `start`
// reaches `claimed_terminal` up to relator order, never exceeding
// `claimed_max_length` in presentation length along the way.
struct Certificate {
  Presentation start;
  std::vector<MoveId> moves;
  Presentation claimed_terminal;
  int claimed_max_length = 0;
};

// The 53-move h-sequence from the length-25 two-generator presentation to
// AK(3), with a length ceiling of 25.
Certificate ak3_certificate();

struct VerifyReport {
  bool ok = false;
  Presentation terminal;
  int max_length_seen = 0;
  // First step index at which a claim fails: the step whose result exceeds
  // claimed_max_length, or moves.size() when only the terminal mismatches.
  std::optional<size_t> first_divergence;
  // Presentation length before each step and after the last: moves.size()+1
  // entries.
  std::vector<int> length_profile;
};

// Unbounded replay; terminal comparison is by canonical form.
VerifyReport verify(const Certificate& cert);

}  // namespace acw
