#include "immcensus/cosetcount.hpp"

namespace immcensus {

// |H\S_m/K| = sum_mu |H_mu| |K_mu| z_mu / (|H| |K|)
BigCount frobenius_count(const ClassProfile& h, const ClassProfile& k) {
  if (h.degree != k.degree) throw InvalidInput("frobenius_count: degree mismatch");
  const auto& small = h.counts.size() <= k.counts.size() ? h : k;
  const auto& large = &small == &h ? k : h;
  BigCount sum = 0;
  for (const auto& [mu, c] : small.counts) {
    auto it = large.counts.find(mu);
    if (it == large.counts.end()) continue;
    sum += c * it->second * z_lambda(mu);
  }
  BigCount denom = h.total() * k.total();
  if (sum % denom != 0) throw std::logic_error("frobenius_count: non-integral result, profile is wrong");
  return sum / denom;
}

BigCount count_total_immersions(const Kind& kind, int n) {
  if (n < 1) throw InvalidInput("count_total_immersions needs n >= 1");
  if (kind.colour != Colour::None) throw InvalidInput("count_total_immersions covers OO, UO, OU, UU only");
  // unoriented circle: reversal joins on the left; unoriented surface: rho on the right
  auto h = profile_of(kind.circle_oriented ? GroupTag::CyclicOnPoints : GroupTag::DihedralOnPoints, n);
  auto k = profile_of(kind.surface_oriented ? GroupTag::CRhoPrime : GroupTag::CRhoPrimeExt, n);
  return frobenius_count(h, k);
}

BigCount count_x_orbits(int n) {
  return frobenius_count(profile_of(GroupTag::CSigma, n), profile_of(GroupTag::CTau, n));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigCount prime_n_orbit_formula(int n) {
  if (!is_prime(n)) throw InvalidInput("prime_n_orbit_formula needs prime n");
  return BigCount(n - 1) + factorial(2 * n - 1) / factorial(n);
}

}  // namespace immcensus
