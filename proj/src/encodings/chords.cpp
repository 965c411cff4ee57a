#include <algorithm>
#include <array>

#include "immcensus/chords.hpp"
#include "immcensus/detail/kernels.hpp"
#include "immcensus/group.hpp"

namespace immcensus {

namespace {

constexpr int kMaxN = 16;

struct Move {
  bool reflect;
  bool flip;
  int t;
};

std::vector<Move> moves_of(ChordSymmetry sym, int m) {
  const bool refl = sym == ChordSymmetry::RotationReflection || sym == ChordSymmetry::All;
  const bool flip = sym == ChordSymmetry::RotationFlip || sym == ChordSymmetry::All;
  std::vector<Move> out;
  for (int r = 0; r <= (refl ? 1 : 0); ++r)
    for (int f = 0; f <= (flip ? 1 : 0); ++f)
      for (int t = 0; t < m; ++t) out.push_back({r == 1, f == 1, t});
  return out;  // out[0] is the identity
}

inline std::uint8_t reflect_value(std::uint8_t v, int m) {
  return static_cast<std::uint8_t>(2 * (m - v / 2) + (v & 1));
}

inline std::uint8_t moved(const std::uint8_t* c, int m, const Move& mv, int p) {
  std::uint8_t v = mv.reflect ? reflect_value(c[((mv.t - p) % m + m) % m], m) : c[(p + mv.t) % m];
  return mv.flip ? static_cast<std::uint8_t>(v ^ 1) : v;
}

int compare_moved(const std::uint8_t* c, int m, const Move& mv) {
  for (int p = 0; p < m; ++p) {
    std::uint8_t a = moved(c, m, mv, p);
    if (a != c[p]) return a < c[p] ? -1 : 1;
  }
  return 0;
}

// subtree sizes: level k (0-based) has radix 2 (2n - 2k - 1)
std::vector<std::uint64_t> subtrees(int n) {
  std::vector<std::uint64_t> sub(static_cast<std::size_t>(n) + 1, 1);
  for (int k = n - 1; k >= 0; --k) sub[k] = sub[k + 1] * static_cast<std::uint64_t>(2 * (2 * n - 2 * k - 1));
  return sub;
}

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw OutOfEnvelope("chord codes support 1 <= n <= 16");
  if (n > 10) throw OutOfEnvelope("chord ranks exceed 64 bits beyond n = 10");
}

}  // namespace

std::uint64_t chord_count(int n) {
  check_n(n);
  return subtrees(n)[0];
}

ChordCode chord_from_x(const Perm& x) {
  const int m = static_cast<int>(x.degree());
  if (m % 2 != 0) throw InvalidInput("chord_from_x: odd degree");
  auto xi = x.raw();
  std::vector<std::uint8_t> pos_of_edge(xi.begin(), xi.end());
  ChordCode code{m / 2, std::vector<std::uint8_t>(static_cast<std::size_t>(m))};
  for (int e = 0; e < m; ++e) {
    int p = pos_of_edge[e];
    int mate = pos_of_edge[e ^ 1];
    code.c[p] = static_cast<std::uint8_t>(2 * (((mate - p) % m + m) % m) + (e & 1));
  }
  return code;
}

Perm x_from_chord(const ChordCode& code) {
  const int m = 2 * code.n;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(m));
  int a = 0;
  for (int p = 0; p < m; ++p) {
    if (code.c[p] & 1) continue;  // second ends are placed with their first end
    int mate = (p + code.c[p] / 2) % m;
    x[2 * a] = static_cast<std::uint8_t>(p);
    x[2 * a + 1] = static_cast<std::uint8_t>(mate);
    ++a;
  }
  return Perm::from_zero_based(std::move(x));
}

ChordCode chord_from_z(const Perm& pi) {
  const int m = static_cast<int>(pi.degree());
  auto p = pi.raw();
  // x sends the k-th edge along the curve to point k, so x^-1 beta x = pi
  std::vector<std::uint8_t> x(static_cast<std::size_t>(m));
  int e = 0;
  for (int k = 0; k < m; ++k) {
    x[e] = static_cast<std::uint8_t>(k);
    e = p[e];
  }
  if (e != 0) throw InvalidInput("chord_from_z: pi is not a single cycle");
  return chord_from_x(Perm::from_zero_based(std::move(x)));
}

Perm z_from_chord(const ChordCode& code) {
  Perm x = x_from_chord(code);
  return conjugate(beta_cycle(code.n), inverse(x));
}

ChordCode chord_reflect(const ChordCode& code) {
  const int m = 2 * code.n;
  ChordCode out{code.n, std::vector<std::uint8_t>(static_cast<std::size_t>(m))};
  for (int p = 0; p < m; ++p) out.c[(m - p) % m] = reflect_value(code.c[p], m);
  return out;
}

ChordCode chord_flip(const ChordCode& code) {
  ChordCode out = code;
  for (auto& v : out.c) v ^= 1;
  return out;
}

ChordCode chord_canonical(const ChordCode& code, ChordSymmetry sym, int* stabilizer) {
  const int m = 2 * code.n;
  ChordCode best = code;
  std::vector<std::uint8_t> cand(static_cast<std::size_t>(m));
  for (const auto& mv : moves_of(sym, m)) {
    for (int p = 0; p < m; ++p) cand[p] = moved(code.c.data(), m, mv, p);
    if (cand < best.c) best.c = cand;
  }
  if (stabilizer) {
    int s = 0;
    for (const auto& mv : moves_of(sym, m))
      if (compare_moved(best.c.data(), m, mv) == 0) ++s;
    *stabilizer = s;
  }
  return best;
}

std::uint64_t chord_rank(const ChordCode& code) {
  const int n = code.n;
  check_n(n);
  const int m = 2 * n;
  auto sub = subtrees(n);
  std::uint32_t matched = 0;
  std::uint64_t rank = 0;
  for (int k = 0; k < n; ++k) {
    int p = __builtin_ctz(~matched);
    int q = (p + code.c[p] / 2) % m;
    if (q <= p) throw InvalidInput("chord_rank: malformed code");
    int between = __builtin_popcount(~matched & (((1u << q) - 1) & ~((1u << (p + 1)) - 1)));
    rank += static_cast<std::uint64_t>(2 * between + (code.c[p] & 1)) * sub[k + 1];
    matched |= (1u << p) | (1u << q);
  }
  return rank;
}

ChordCode chord_unrank(int n, std::uint64_t rank) {
  check_n(n);
  const int m = 2 * n;
  auto sub = subtrees(n);
  if (rank >= sub[0]) throw std::out_of_range("chord_unrank");
  ChordCode code{n, std::vector<std::uint8_t>(static_cast<std::size_t>(m))};
  std::uint32_t matched = 0;
  for (int k = 0; k < n; ++k) {
    auto digit = rank / sub[k + 1];
    rank %= sub[k + 1];
    int p = __builtin_ctz(~matched);
    int j = static_cast<int>(digit / 2);
    int o = static_cast<int>(digit % 2);
    int q = p;
    for (int seen = -1; seen < j;) {
      ++q;
      if (!(matched >> q & 1u)) ++seen;
    }
    int d = q - p;
    code.c[p] = static_cast<std::uint8_t>(2 * d + o);
    code.c[q] = static_cast<std::uint8_t>(2 * (m - d) + (1 - o));
    matched |= (1u << p) | (1u << q);
  }
  return code;
}

void for_each_canonical_chord(int n, ChordSymmetry sym, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const std::uint8_t*, int)>& fn) {
  check_n(n);
  const int m = 2 * n;
  const auto sub = subtrees(n);
  end = std::min(end, sub[0]);
  if (begin >= end) return;
  const auto moves = moves_of(sym, m);
  std::array<std::uint8_t, 2 * kMaxN> c{};

  std::function<void(int, std::uint64_t, std::uint32_t)> rec = [&](int k, std::uint64_t base, std::uint32_t matched) {
    if (k == n) {
      int stab = 1;
      for (std::size_t i = 1; i < moves.size(); ++i) {
        int v = compare_moved(c.data(), m, moves[i]);
        if (v < 0) return;
        if (v == 0) ++stab;
      }
      fn(c.data(), stab);
      return;
    }
    const int p = __builtin_ctz(~matched);
    std::uint64_t lo = base;
    const std::uint64_t step = sub[k + 1];
    for (int q = p + 1; q < m; ++q) {
      if (matched >> q & 1u) continue;
      const int d = q - p;
      for (int o = 0; o < 2; ++o, lo += step) {
        if (lo + step <= begin || lo >= end) continue;
        auto vp = static_cast<std::uint8_t>(2 * d + o);
        auto vq = static_cast<std::uint8_t>(2 * (m - d) + (1 - o));
        // a rotation-least code starts with its smallest entry
        if (k > 0 && (vp < c[0] || vq < c[0])) continue;
        if (k == 0 && vq < vp) continue;
        c[p] = vp;
        c[q] = vq;
        rec(k + 1, lo, matched | (1u << p) | (1u << q));
      }
    }
  };
  rec(0, 0, 0);
}

}  // namespace immcensus
