#pragma once

#include <array>
#include <cstdint>
#include <cstring>

#include "acw/presentation.hpp"
#include "acw/word.hpp"

namespace acw {

// Fixed-capacity relator buffers for the hot loops (search, graph
// enumeration, environment stepping, dataset generation). Capacity covers
// the largest pre-mask intermediate: two length-128 relators concatenated.
inline constexpr int kFixedCap = 260;

struct FixedWord {
  int32_t len = 0;
  uint8_t a[kFixedCap];
};

struct FixedPres {
  FixedWord r[2];
};

void fixed_from_word(FixedWord& dst, const Word& w);
Word word_from_fixed(const FixedWord& w);
FixedPres fixed_from_presentation(const Presentation& p);
Presentation presentation_from_fixed(const FixedPres& s);

inline bool fixed_word_equal(const FixedWord& a, const FixedWord& b) {
  return a.len == b.len && std::memcmp(a.a, b.a, static_cast<size_t>(a.len)) == 0;
}

// (length, lex) order, matching word_less().
inline bool fixed_word_less(const FixedWord& a, const FixedWord& b) {
  if (a.len != b.len) return a.len < b.len;
  return std::memcmp(a.a, b.a, static_cast<size_t>(a.len)) < 0;
}

// dst = reduce(u . v) or reduce(u . v^-1); u, v freely reduced. dst must not
// alias u or v.
void concat_reduced(FixedWord& dst, const FixedWord& u, const FixedWord& v,
                    bool invert_v);
// dst = reduce(g . u . g^-1); dst must not alias u.
void conjugate_reduced(FixedWord& dst, const FixedWord& u, uint8_t g);
// dst = u^-1.
void invert_word(FixedWord& dst, const FixedWord& u);

inline bool fixed_trivial_state(const FixedPres& s) {
  return s.r[0].len == 1 && s.r[1].len == 1 &&
         generator_of(s.r[0].a[0]) != generator_of(s.r[1].a[0]);
}

inline int fixed_length(const FixedPres& s) { return s.r[0].len + s.r[1].len; }

// Two 128-bit word codes: value(w) = 1 followed by 2 bits per letter.
// Injective for relators up to 63 letters, which covers every bounded
// workload (relator caps <= 36 in search, presentation length <= 16 in the
// graph tables). The all-zero key never occurs and marks empty map slots.
struct PackedState {
  std::array<uint64_t, 4> v{};

  bool operator==(const PackedState& o) const { return v == o.v; }
  bool is_empty() const { return (v[0] | v[1] | v[2] | v[3]) == 0; }
};

inline constexpr int kMaxPackableLen = 63;

void pack_word(const FixedWord& w, uint64_t& hi, uint64_t& lo);
void unpack_word(FixedWord& w, uint64_t hi, uint64_t lo);

// Packs relators in stored order (replayable orientation).
PackedState pack_ordered(const FixedPres& s);
// Packs relators sorted by (length, lex): the relator-set identity key.
PackedState pack_canonical(const FixedPres& s);
FixedPres unpack_state(const PackedState& key);

inline uint64_t mix64(uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline uint64_t hash_packed(const PackedState& k) {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (uint64_t w : k.v) h = mix64(h ^ w) * 0x2545f4914f6cdd1dULL;
  return h;
}

// Open-addressing map PackedState -> uint32_t with linear probing. The
// node-based standard containers are too slow and too fat for multi-million
// entry visited sets.
class VisitedMap {
 public:
  explicit VisitedMap(size_t initial_capacity = 1 << 16) { rehash(initial_capacity); }

  // Returns (id, inserted). If absent, inserts with id = size() at call time.
  std::pair<uint32_t, bool> insert_or_get(const PackedState& key) {
    if ((count_ + 1) * 5 >= slots_.size() * 3) rehash(slots_.size() * 2);
    size_t i = hash_packed(key) & mask_;
    while (true) {
      Slot& s = slots_[i];
      if (s.key.is_empty()) {
        s.key = key;
        s.val = static_cast<uint32_t>(count_);
        ++count_;
        return {s.val, true};
      }
      if (s.key == key) return {s.val, false};
      i = (i + 1) & mask_;
    }
  }

  // Returns id or UINT32_MAX.
  uint32_t find(const PackedState& key) const {
    size_t i = hash_packed(key) & mask_;
    while (true) {
      const Slot& s = slots_[i];
      if (s.key.is_empty()) return UINT32_MAX;
      if (s.key == key) return s.val;
      i = (i + 1) & mask_;
    }
  }

  size_t size() const { return count_; }

  void reserve(size_t n) {
    size_t need = n * 2;
    size_t cap = slots_.empty() ? 1 : slots_.size();
    while (cap < need) cap *= 2;
    if (cap > slots_.size()) rehash(cap);
  }

 private:
  struct Slot {
    PackedState key;  // all-zero = empty
    uint32_t val = 0;
  };

  void rehash(size_t new_cap) {
    size_t cap = 1;
    while (cap < new_cap) cap *= 2;
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(cap, Slot{});
    mask_ = cap - 1;
    for (const Slot& s : old) {
      if (s.key.is_empty()) continue;
      size_t i = hash_packed(s.key) & mask_;
      while (!slots_[i].key.is_empty()) i = (i + 1) & mask_;
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  size_t mask_ = 0;
  size_t count_ = 0;
};

}  // namespace acw
