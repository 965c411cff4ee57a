#pragma once

// Small fixed-size helpers for the sweep inner loops.  Arrays are 0-based
// images of degree m <= 64.

#include <array>
#include <cstdint>

namespace immcensus::detail {

inline constexpr int kMaxDegree = 64;
using Small = std::array<std::uint8_t, kMaxDegree>;

inline std::uint64_t low_mask(int m) { return m >= 64 ? ~0ull : ((1ull << m) - 1); }

inline int cycles(const std::uint8_t* p, int m) {
  std::uint64_t unseen = low_mask(m);
  int c = 0;
  while (unseen) {
    int i = __builtin_ctzll(unseen);
    ++c;
    int j = i;
    do {
      unseen &= ~(1ull << j);
      j = p[j];
    } while (j != i);
  }
  return c;
}

// cycles of p composed with rho0 on the right: i -> p(i xor 1)
inline int cycles_times_rho(const std::uint8_t* p, int m) {
  std::uint64_t unseen = low_mask(m);
  int c = 0;
  while (unseen) {
    int i = __builtin_ctzll(unseen);
    ++c;
    int j = i;
    do {
      unseen &= ~(1ull << j);
      j = p[j ^ 1];
    } while (j != i);
  }
  return c;
}

inline bool has_fixed_point(const std::uint8_t* p, int m) {
  for (int i = 0; i < m; ++i)
    if (p[i] == i) return true;
  return false;
}

// Lexicographic compare of two arrays of length m.
inline int lex_compare(const std::uint8_t* a, const std::uint8_t* b, int m) {
  for (int i = 0; i < m; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace immcensus::detail
