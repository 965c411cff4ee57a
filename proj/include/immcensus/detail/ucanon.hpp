#pragma once

// Canonical forms of U elements under Z_n = <beta^2> and D_n = <beta^2, r>.
// Element j < n of D_n is the rotation i -> i + 2j; element n + j is the
// reflection i -> (2j + 1) - i (all 0-based, mod 2n).

#include <cstdint>

#include "immcensus/detail/kernels.hpp"

namespace immcensus::detail {

inline std::uint8_t u_conj_at(const std::uint8_t* s, int n, int j, int i) {
  const int m = 2 * n;
  if (j < n) {
    const int t = 2 * j;
    return static_cast<std::uint8_t>((s[(i - t + m) % m] + t) % m);
  }
  const int e = 2 * (j - n) + 1;
  const int src = ((e - i) % m + m) % m;
  return static_cast<std::uint8_t>(((e - s[src]) % m + m) % m);
}

// Is s least among its conjugates?  stab receives the stabilizer order.
inline bool u_is_least(const std::uint8_t* s, int n, bool dihedral, int* stab) {
  const int m = 2 * n;
  const int count = dihedral ? 2 * n : n;
  int st = 1;
  for (int j = 1; j < count; ++j) {
    int verdict = 0;
    for (int i = 0; i < m && verdict == 0; ++i) {
      std::uint8_t a = u_conj_at(s, n, j, i);
      if (a != s[i]) verdict = a < s[i] ? -1 : 1;
    }
    if (verdict < 0) return false;
    if (verdict == 0) ++st;
  }
  if (stab) *stab = st;
  return true;
}

inline void u_least(const std::uint8_t* s, int n, bool dihedral, std::uint8_t* out) {
  const int m = 2 * n;
  const int count = dihedral ? 2 * n : n;
  for (int i = 0; i < m; ++i) out[i] = s[i];
  Small cand;
  for (int j = 1; j < count; ++j) {
    for (int i = 0; i < m; ++i) cand[i] = u_conj_at(s, n, j, i);
    if (lex_compare(cand.data(), out, m) < 0)
      for (int i = 0; i < m; ++i) out[i] = cand[i];
  }
}

inline std::uint64_t rank_raw(const std::uint8_t* a, int m) {
  std::uint64_t rank = 0;
  std::uint64_t used = 0;
  for (int i = 0; i < m; ++i) {
    std::uint64_t below = (1ull << a[i]) - 1ull;
    rank = rank * static_cast<std::uint64_t>(m - i) + static_cast<std::uint64_t>(__builtin_popcountll(below & ~used));
    used |= 1ull << a[i];
  }
  return rank;
}

}  // namespace immcensus::detail
