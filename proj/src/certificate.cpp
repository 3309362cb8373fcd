#include "acw/certificate.hpp"

#include "acw/series.hpp"

namespace acw {
namespace {

constexpr int kAk3Moves[] = {
    9, 7, 4, 8, 11, 5, 11, 9,  3, 10, 12, 7, 7, 9, 11, 5, 3, 5,
    4, 3, 12, 5, 7, 7, 1, 9, 11, 8, 3, 5, 10, 2, 6, 12, 9, 7,
    5, 11, 10, 3, 8, 11, 9, 2, 10, 12, 5, 7, 9, 11, 1, 9, 8};

}  // namespace

Certificate ak3_certificate() {
  Certificate cert;
  cert.start = mms_length25();
  for (int i : kAk3Moves) cert.moves.push_back(MoveId{MoveSet::kPrime, i});
  cert.claimed_terminal = gen_AK(3);
  cert.claimed_max_length = 25;
  return cert;
}

VerifyReport verify(const Certificate& cert) {
  VerifyReport rep;
  Presentation p = cert.start;
  rep.max_length_seen = length(p);
  rep.length_profile.push_back(length(p));
  if (rep.max_length_seen > cert.claimed_max_length) rep.first_divergence = 0;
  for (size_t i = 0; i < cert.moves.size(); ++i) {
    p = apply_move(p, cert.moves[i]);
    int len = length(p);
    rep.length_profile.push_back(len);
    rep.max_length_seen = std::max(rep.max_length_seen, len);
    if (len > cert.claimed_max_length && !rep.first_divergence) {
      rep.first_divergence = i;
    }
  }
  rep.terminal = p;
  if (!rep.first_divergence &&
      !(canonicalize(p) == canonicalize(cert.claimed_terminal))) {
    rep.first_divergence = cert.moves.size();
  }
  rep.ok = !rep.first_divergence.has_value();
  return rep;
}

}  // namespace acw
