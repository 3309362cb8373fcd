#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "acw/word.hpp"

namespace acw {

// Ordered pair of freely reduced relators over two generators. Moves act on
// the ordered pair; state identity elsewhere is the canonical (sorted) form.
struct Presentation {
  Word r1;
  Word r2;

  bool operator==(const Presentation&) const = default;
};

inline int length(const Presentation& p) {
  return static_cast<int>(p.r1.size() + p.r2.size());
}

inline int max_relator_length(const Presentation& p) {
  return static_cast<int>(std::max(p.r1.size(), p.r2.size()));
}

// True iff the relator set is {x^a, y^b} with a, b = +-1.
bool is_trivial_state(const Presentation& p);

// Relators sorted by (length, lex) under x < y < X < Y. Idempotent and
// symmetric in relator order; relators are never rotated or inverted.
struct CanonicalForm {
  Word first;
  Word second;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const {
    if (first != o.first) return word_less(first, o.first) ? true : false;
    return word_less(second, o.second);
  }
};

CanonicalForm canonicalize(const Presentation& p);
inline Presentation as_presentation(const CanonicalForm& c) {
  return Presentation{c.first, c.second};
}

// Text form "<r1>,<r2>" over {x,y,X,Y}. Empty relators are formatted as the
// empty string but rejected on parse; input files never carry them.
std::string format(const Presentation& p);
// Throws std::invalid_argument for bad letters, relator count != 2,
// unreduced or empty relators.
Presentation parse_presentation(std::string_view text);

// One presentation per line; lines starting with '#' and blank lines skipped.
std::vector<Presentation> read_presentation_file(const std::string& path);

}  // namespace acw
