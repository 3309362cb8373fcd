#pragma once

#include <vector>

#include "acw/presentation.hpp"

namespace acw {

// Index of a Miller-Schupp family member: n >= 1 and a nonempty word w in
// x, y with zero exponent sum on x.
struct MSIndex {
  int n = 1;
  Word w;
};

// AK(n) = <x,y | x^n y^-(n+1), xyx (yxy)^-1>, n >= 2.
Presentation gen_AK(int n);

// MS(n, w) = <x,y | x^-1 y^n x y^-(n+1), reduce(x^-1 w)>. Throws on an
// invalid index.
Presentation gen_MS(int n, const Word& w);

// All MS(n, w) with 1 <= n <= n_max and 1 <= |w| <= wlen_max, one entry per
// cyclic-rotation class of the reduced x^-1 w. Entries are ordered by
// (n, |w|, lex); the kept w is the first of its class in (|w|, lex) order and
// the stored second relator is reduce(x^-1 w) for that w.
std::vector<std::pair<MSIndex, Presentation>> gen_MS_dataset(int n_max = 7,
                                                             int wlen_max = 7);

// The two-generator length-25 presentation obtained from the unknot
// presentation family at w = x^-1 y z.
Presentation mms_length25();

// G(m,n,p,q) = <x,y | x^-1 [x^m, y^n], y^-1 [y^p, x^q]> with
// [a,b] = a b a^-1 b^-1.
Presentation gen_Gordon(int m, int n, int p, int q);

}  // namespace acw
