#include <algorithm>

#include "immcensus/detail/kernels.hpp"
#include "immcensus/encodings.hpp"

namespace immcensus {

namespace {

inline int rot(int h, int k) { return (h & ~3) | ((h + k) & 3); }

void check_x(const XCode& c) {
  if (c.n < 1 || c.tau.degree() != static_cast<std::size_t>(4 * c.n))
    throw InvalidInput("XCode: tau must have degree 4n");
  auto t = c.tau.raw();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == i || t[t[i]] != i) throw InvalidInput("XCode: tau is not a fixed-point-free involution");
}

// Relabels breadth-first from root h0 and compares with `target` on the fly.
// Returns -1 if the relabelled map is smaller, 0 if equal, +1 if larger.
// When `out` is given the full relabelled tau is written there.
int relabel_compare(const std::uint8_t* tau, int n, int h0, const std::uint8_t* target, std::uint8_t* out) {
  const int m = 4 * n;
  std::array<std::int8_t, detail::kMaxDegree> lab;
  std::array<std::uint8_t, detail::kMaxDegree> order;
  std::fill(lab.begin(), lab.begin() + m, static_cast<std::int8_t>(-1));
  for (int k = 0; k < 4; ++k) {
    int h = rot(h0, k);
    lab[h] = static_cast<std::int8_t>(k);
    order[k] = static_cast<std::uint8_t>(h);
  }
  int blocks = 1;
  int verdict = 0;
  for (int l = 0; l < m; ++l) {
    int t = tau[order[l]];
    if (lab[t] < 0) {
      for (int k = 0; k < 4; ++k) {
        int h = rot(t, k);
        lab[h] = static_cast<std::int8_t>(4 * blocks + k);
        order[4 * blocks + k] = static_cast<std::uint8_t>(h);
      }
      ++blocks;
    }
    auto v = static_cast<std::uint8_t>(lab[t]);
    if (out) out[l] = v;
    if (verdict == 0 && target) {
      if (v < target[l]) verdict = -1;
      else if (v > target[l]) verdict = 1;
      if (verdict != 0 && !out) return verdict;
    }
  }
  return verdict;
}

}  // namespace

std::optional<int> x_classify(const XCode& c) {
  check_x(c);
  const int n = c.n;
  Perm sigma = x_sigma(n);
  Perm s2t = compose(compose(sigma, sigma), c.tau);
  if (cycle_analysis(s2t).type != CycleType({2 * n, 2 * n})) return std::nullopt;
  int faces = cycle_count(compose(sigma, c.tau));
  int twice_g = n + 2 - faces;
  if (twice_g < 0 || twice_g % 2 != 0) throw std::logic_error("x_classify: genus parity violated");
  return twice_g / 2;
}

XPrimeGenerator::XPrimeGenerator(int n) : n_(n), count_(1), subtree_(static_cast<std::size_t>(2 * n), 1) {
  if (n < 1) throw InvalidInput("XPrimeGenerator needs n >= 1");
  if (n > 8) throw OutOfEnvelope("X' has more than 2^64 elements beyond n = 8");
  // choices at depth r = 1..2n-1 have 4n-2r options
  for (int r = 2 * n - 1; r >= 1; --r) {
    subtree_[static_cast<std::size_t>(r)] = count_;
    count_ *= static_cast<std::uint64_t>(4 * n - 2 * r);
  }
}

XCode XPrimeGenerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("XPrimeGenerator index");
  XCode out;
  for_range(index, index + 1, [&](const std::uint8_t* tau) {
    std::vector<std::uint8_t> img(tau, tau + 4 * n_);
    out = XCode{n_, Perm::from_zero_based(std::move(img))};
  });
  return out;
}

void XPrimeGenerator::for_range(std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const std::uint8_t*)>& fn) const {
  end = std::min(end, count_);
  if (begin >= end) return;
  const int m = 4 * n_;
  std::array<std::uint8_t, detail::kMaxDegree> tau{};
  // start at half-edge 0; its sigma^2 partner 2 closes the chain at the end
  std::function<void(int, std::uint64_t, std::uint64_t, int)> rec = [&](int r, std::uint64_t base,
                                                                        std::uint64_t used, int cur) {
    if (r == 2 * n_) {
      tau[cur] = 2;
      tau[2] = static_cast<std::uint8_t>(cur);
      fn(tau.data());
      return;
    }
    const std::uint64_t sub = subtree_[static_cast<std::size_t>(r)];
    std::uint64_t free = ~used & detail::low_mask(m);
    std::uint64_t lo = base;
    while (free) {
      int i = __builtin_ctzll(free);
      free &= free - 1;
      if (lo + sub > begin && lo < end) {
        tau[cur] = static_cast<std::uint8_t>(i);
        tau[i] = static_cast<std::uint8_t>(cur);
        int next = i ^ 2;
        rec(r + 1, lo, used | (1ull << i) | (1ull << next), next);
      }
      lo += sub;
      if (lo >= end) break;
    }
  };
  rec(1, 0, (1ull << 0) | (1ull << 2), 0);
}

XCanonical x_canonical(const XCode& c) {
  check_x(c);
  const int n = c.n;
  const int m = 4 * n;
  auto tau = c.tau.raw();
  std::array<std::uint8_t, detail::kMaxDegree> best{}, cand{};
  relabel_compare(tau.data(), n, 0, nullptr, best.data());
  int aut = 1;
  for (int h0 = 1; h0 < m; ++h0) {
    int v = relabel_compare(tau.data(), n, h0, best.data(), cand.data());
    if (v < 0) {
      best = cand;
      aut = 1;
    } else if (v == 0) {
      ++aut;
    }
  }
  return {Perm::from_zero_based(std::vector<std::uint8_t>(best.begin(), best.begin() + m)), aut};
}

bool x_is_canonical(const std::uint8_t* tau, int n, int* automorphisms) {
  const int m = 4 * n;
  if (relabel_compare(tau, n, 0, tau, nullptr) != 0) return false;
  int aut = 1;
  for (int h0 = 1; h0 < m; ++h0) {
    int v = relabel_compare(tau, n, h0, tau, nullptr);
    if (v < 0) return false;
    if (v == 0) ++aut;
  }
  if (automorphisms) *automorphisms = aut;
  return true;
}

}  // namespace immcensus
