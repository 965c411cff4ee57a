#include "immcensus/cosetcount.hpp"

#include <functional>
#include <numeric>

namespace immcensus {

namespace {

using Parts = std::vector<int>;
using PartsMap = std::map<Parts, BigCount>;

int euler_phi(int d) {
  int r = 0;
  for (int k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1) ++r;
  return r;
}

std::vector<int> divisors(int q) {
  std::vector<int> out;
  for (int d = 1; d <= q; ++d)
    if (q % d == 0) out.push_back(d);
  return out;
}

// multiplicities m_l of a partition, as (l, m_l) pairs
std::vector<std::pair<int, int>> multiplicities(const CycleType& t) {
  std::vector<std::pair<int, int>> out;
  for (int p : t.parts()) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

PartsMap convolve(const PartsMap& a, const PartsMap& b) {
  PartsMap out;
  for (const auto& [pa, wa] : a) {
    for (const auto& [pb, wb] : b) {
      Parts p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      out[p] += wa * wb;
    }
  }
  return out;
}

// All ways of giving m cycles of length l a product label in Z_q, grouped by
// the resulting cycle structure on the l*q points.
PartsMap wreath_factor(int q, int l, int m) {
  const auto divs = divisors(q);
  PartsMap out;
  std::vector<int> count(divs.size(), 0);
  // enumerate compositions of m over the divisors
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == divs.size()) {
      count[idx] = left;
      BigCount w = factorial(m);
      Parts parts;
      for (std::size_t i = 0; i < divs.size(); ++i) {
        w /= factorial(count[i]);
        w *= pow(BigCount(euler_phi(divs[i])), static_cast<unsigned>(count[i]));
        for (int c = 0; c < count[i] * (q / divs[i]); ++c) parts.push_back(l * divs[i]);
      }
      w *= pow(BigCount(q), static_cast<unsigned>((l - 1) * m));
      out[parts] += w;
      return;
    }
    for (int c = 0; c <= left; ++c) {
      count[idx] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, m);
  return out;
}

void add_to(ClassProfile& prof, Parts parts, const BigCount& w) {
  if (w == 0) return;
  prof.counts[CycleType(std::move(parts))] += w;
}

// semiregular cyclic group: each element of order d acts as d^{m/d}
void add_rotations(ClassProfile& prof, int order, int m) {
  for (int d : divisors(order)) {
    Parts parts(static_cast<std::size_t>(m / d), d);
    add_to(prof, parts, euler_phi(d));
  }
}

ClassProfile diagonal_profile(int n, bool with_coset) {
  ClassProfile prof;
  prof.degree = static_cast<std::size_t>(2 * n);
  for (const auto& lam : partitions_of(n)) {
    BigCount w = factorial(n) / z_lambda(lam);
    Parts doubled;
    for (int p : lam.parts()) {
      doubled.push_back(p);
      doubled.push_back(p);
    }
    add_to(prof, doubled, w);
    if (with_coset) {
      // k*rho: an l-cycle of pairs closes after l flips, so odd l gives one
      // 2l-cycle and even l gives two l-cycles
      Parts c;
      for (int p : lam.parts()) {
        if (p % 2 == 1) {
          c.push_back(2 * p);
        } else {
          c.push_back(p);
          c.push_back(p);
        }
      }
      add_to(prof, c, w);
    }
  }
  return prof;
}

}  // namespace

BigCount ClassProfile::total() const {
  BigCount s = 0;
  for (const auto& [t, c] : counts) s += c;
  return s;
}

ClassProfile cyclic_wreath_profile(int q, int k) {
  ClassProfile prof;
  prof.degree = static_cast<std::size_t>(q * k);
  for (const auto& lam : partitions_of(k)) {
    PartsMap acc{{Parts{}, BigCount(1)}};
    for (auto [l, m] : multiplicities(lam)) acc = convolve(acc, wreath_factor(q, l, m));
    BigCount w = factorial(k) / z_lambda(lam);
    for (auto& [parts, c] : acc) add_to(prof, parts, c * w);
  }
  return prof;
}

ClassProfile profile_of(GroupTag tag, int n) { return profile_of(make_group(tag, n, false)); }

ClassProfile profile_of(const GroupSpec& g) {
  const int n = g.n;
  ClassProfile prof;
  prof.degree = g.degree;
  switch (g.tag) {
    case GroupTag::CSigma: return cyclic_wreath_profile(4, n);
    case GroupTag::CRho: return cyclic_wreath_profile(2, n);
    case GroupTag::CTau: return cyclic_wreath_profile(2, 2 * n);
    case GroupTag::CRhoPrime: return diagonal_profile(n, false);
    case GroupTag::CRhoPrimeExt: return diagonal_profile(n, true);
    case GroupTag::CyclicOnPoints:
      add_rotations(prof, 2 * n, 2 * n);
      return prof;
    case GroupTag::DihedralOnPoints:
      add_rotations(prof, 2 * n, 2 * n);
      if (n >= 2) {
        Parts through_vertices(static_cast<std::size_t>(n - 1), 2);
        through_vertices.push_back(1);
        through_vertices.push_back(1);
        add_to(prof, through_vertices, n);
        add_to(prof, Parts(static_cast<std::size_t>(n), 2), n);
      }
      return prof;
    case GroupTag::CyclicN:
      add_rotations(prof, n, 2 * n);
      return prof;
    case GroupTag::DihedralN:
      add_rotations(prof, n, 2 * n);
      add_to(prof, Parts(static_cast<std::size_t>(n), 2), n);
      return prof;
    case GroupTag::Symmetric:
      for (const auto& t : partitions_of(n)) prof.counts[t] = class_size(t);
      return prof;
  }
  throw InvalidInput("unsupported group tag for profile_of");
}

ClassProfile profile_by_enumeration(const GroupSpec& g) {
  auto elems = g.materialized() ? g.elements : materialize(g);
  ClassProfile prof;
  prof.degree = g.degree;
  for (const auto& e : elems) prof.counts[cycle_analysis(e).type] += 1;
  return prof;
}

}  // namespace immcensus
