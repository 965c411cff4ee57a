#include <algorithm>

#include "immcensus/cosetcount.hpp"

namespace immcensus {

std::vector<DoubleCosetRep> double_coset_representatives(const GroupSpec& h, const GroupSpec& k, const Perm& base) {
  if (h.degree != k.degree || h.degree != base.degree()) throw InvalidInput("double cosets: degree mismatch");
  const std::size_t m = h.degree;
  if (m > 12) throw OutOfEnvelope("generic double-coset sweep supports degree <= 12");
  const auto& he = h.materialized() ? h.elements : materialize(h);
  const auto& ke = k.materialized() ? k.elements : materialize(k);

  std::uint64_t total = 1;
  for (std::size_t i = 2; i <= m; ++i) total *= i;
  std::vector<bool> seen(total, false);
  std::vector<DoubleCosetRep> out;

  std::vector<std::uint8_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(i);
  // rank order, so the first unseen element is the minimum of its double coset
  do {
    Perm x = Perm::from_zero_based(img);
    if (seen[perm_rank(x)]) continue;
    for (const auto& a : he) {
      Perm ax = compose(a, x);
      for (const auto& b : ke) seen[perm_rank(compose(ax, b))] = true;
    }
    out.push_back({x, conjugate(base, inverse(x))});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace immcensus
