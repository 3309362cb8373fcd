#include "acw/kernel.hpp"

#include <cassert>
#include <stdexcept>

namespace acw {

void fixed_from_word(FixedWord& dst, const Word& w) {
  if (w.size() > kFixedCap) throw std::length_error("word exceeds kernel capacity");
  dst.len = static_cast<int32_t>(w.size());
  std::memcpy(dst.a, w.data(), w.size());
}

Word word_from_fixed(const FixedWord& w) {
  return Word(reinterpret_cast<const char*>(w.a), static_cast<size_t>(w.len));
}

FixedPres fixed_from_presentation(const Presentation& p) {
  FixedPres s;
  fixed_from_word(s.r[0], p.r1);
  fixed_from_word(s.r[1], p.r2);
  return s;
}

Presentation presentation_from_fixed(const FixedPres& s) {
  return Presentation{word_from_fixed(s.r[0]), word_from_fixed(s.r[1])};
}

void concat_reduced(FixedWord& dst, const FixedWord& u, const FixedWord& v,
                    bool invert_v) {
  // Letters of v in application order; inversion reads v backwards.
  auto v_at = [&](int i) -> uint8_t {
    return invert_v ? inverse_letter(v.a[v.len - 1 - i]) : v.a[i];
  };
  int cancel = 0;
  while (cancel < u.len && cancel < v.len &&
         u.a[u.len - 1 - cancel] == inverse_letter(v_at(cancel))) {
    ++cancel;
  }
  int ulen = u.len - cancel;
  dst.len = ulen + v.len - cancel;
  if (dst.len > kFixedCap) throw std::length_error("relator exceeds kernel capacity");
  std::memcpy(dst.a, u.a, static_cast<size_t>(ulen));
  for (int i = cancel; i < v.len; ++i) dst.a[ulen + i - cancel] = v_at(i);
}

void conjugate_reduced(FixedWord& dst, const FixedWord& u, uint8_t g) {
  uint8_t ginv = inverse_letter(g);
  if (u.len == 0) {
    dst.len = 0;
    return;
  }
  bool strip_front = u.a[0] == ginv;
  bool strip_back = u.a[u.len - 1] == g;
  if (strip_front && strip_back) {
    // g . g^-1 s g . g^-1 = s
    dst.len = u.len - 2;
    std::memcpy(dst.a, u.a + 1, static_cast<size_t>(dst.len));
  } else if (strip_front) {
    dst.len = u.len;
    std::memcpy(dst.a, u.a + 1, static_cast<size_t>(u.len - 1));
    dst.a[u.len - 1] = ginv;
  } else if (strip_back) {
    dst.len = u.len;
    dst.a[0] = g;
    std::memcpy(dst.a + 1, u.a, static_cast<size_t>(u.len - 1));
  } else {
    dst.len = u.len + 2;
    if (dst.len > kFixedCap) throw std::length_error("relator exceeds kernel capacity");
    dst.a[0] = g;
    std::memcpy(dst.a + 1, u.a, static_cast<size_t>(u.len));
    dst.a[u.len + 1] = ginv;
  }
}

void invert_word(FixedWord& dst, const FixedWord& u) {
  dst.len = u.len;
  for (int i = 0; i < u.len; ++i) {
    dst.a[i] = inverse_letter(u.a[u.len - 1 - i]);
  }
}

void pack_word(const FixedWord& w, uint64_t& hi, uint64_t& lo) {
  assert(w.len <= kMaxPackableLen);
  unsigned __int128 v = 1;
  for (int i = 0; i < w.len; ++i) {
    v = (v << 2) | w.a[i];
  }
  hi = static_cast<uint64_t>(v >> 64);
  lo = static_cast<uint64_t>(v);
}

void unpack_word(FixedWord& w, uint64_t hi, uint64_t lo) {
  unsigned __int128 v =
      (static_cast<unsigned __int128>(hi) << 64) | static_cast<unsigned __int128>(lo);
  int len = 0;
  uint8_t buf[kMaxPackableLen];
  while (v != 1) {
    buf[len++] = static_cast<uint8_t>(v & 3u);
    v >>= 2;
  }
  w.len = len;
  for (int i = 0; i < len; ++i) w.a[i] = buf[len - 1 - i];
}

PackedState pack_ordered(const FixedPres& s) {
  PackedState k;
  pack_word(s.r[0], k.v[0], k.v[1]);
  pack_word(s.r[1], k.v[2], k.v[3]);
  return k;
}

PackedState pack_canonical(const FixedPres& s) {
  PackedState k;
  if (fixed_word_less(s.r[1], s.r[0])) {
    pack_word(s.r[1], k.v[0], k.v[1]);
    pack_word(s.r[0], k.v[2], k.v[3]);
  } else {
    pack_word(s.r[0], k.v[0], k.v[1]);
    pack_word(s.r[1], k.v[2], k.v[3]);
  }
  return k;
}

FixedPres unpack_state(const PackedState& key) {
  FixedPres s;
  unpack_word(s.r[0], key.v[0], key.v[1]);
  unpack_word(s.r[1], key.v[2], key.v[3]);
  return s;
}

}  // namespace acw
