#include <algorithm>

#include "immcensus/detail/kernels.hpp"
#include "immcensus/encodings.hpp"

namespace immcensus {

std::optional<int> y_classify(const YCode& c) {
  const int n = c.n;
  if (n < 1 || c.sigma.degree() != static_cast<std::size_t>(2 * n)) throw InvalidInput("YCode: sigma must have degree 2n");
  Perm rho = rho0(n);
  Perm rho_tilde = conjugate(rho, c.sigma);
  if (cycle_analysis(compose(rho_tilde, rho)).type != CycleType({n, n})) return std::nullopt;
  int twice_g = n + 2 - cycle_count(c.sigma) - cycle_count(compose(c.sigma, rho));
  if (twice_g < 0 || twice_g % 2 != 0) throw std::logic_error("y_classify: genus parity violated");
  return twice_g / 2;
}

BigCount y_prime_size(int n) {
  return pow(BigCount(2), static_cast<unsigned>(2 * n - 1)) * factorial(n - 1) * factorial(n);
}

int y_genus_raw(const std::uint8_t* sigma, int n) {
  int faces = detail::cycles(sigma, 2 * n) + detail::cycles_times_rho(sigma, 2 * n);
  return (n + 2 - faces) / 2;
}

Perm UCode::sigma() const { return compose(beta_cycle(n), xi); }

UGenerator::UGenerator(int n) : n_(n), count_(1) {
  if (n < 1) throw InvalidInput("UGenerator needs n >= 1");
  if (n > 16) throw OutOfEnvelope("U is too large beyond n = 16");
  for (int k = 2; k <= n; ++k) count_ *= static_cast<std::uint64_t>(k);
  count_ <<= n;
}

UCode UGenerator::at(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("UGenerator index");
  const int n = n_;
  Perm pairs = perm_unrank(index >> n, static_cast<std::size_t>(n));
  std::uint64_t flips = index & ((1ull << n) - 1);
  std::vector<std::uint8_t> xi(static_cast<std::size_t>(2 * n));
  for (int a = 0; a < n; ++a) {
    int f = static_cast<int>((flips >> a) & 1u);
    int target = pairs.raw()[a];
    xi[2 * a] = static_cast<std::uint8_t>(2 * target + f);
    xi[2 * a + 1] = static_cast<std::uint8_t>(2 * target + (1 - f));
  }
  return UCode{n, Perm::from_zero_based(std::move(xi))};
}

void UGenerator::for_range(std::uint64_t begin, std::uint64_t end,
                           const std::function<void(const std::uint8_t*)>& fn) const {
  end = std::min(end, count_);
  if (begin >= end) return;
  const int n = n_;
  const int m = 2 * n;
  const std::uint64_t flip_count = 1ull << n;
  std::uint64_t prank = begin >> n;
  std::uint64_t flips = begin & (flip_count - 1);
  Perm start = perm_unrank(prank, static_cast<std::size_t>(n));
  std::array<std::uint8_t, 32> p{};
  std::copy(start.raw().begin(), start.raw().end(), p.begin());
  std::array<std::uint8_t, detail::kMaxDegree> sigma{};
  for (std::uint64_t idx = begin; idx < end;) {
    for (; flips < flip_count && idx < end; ++flips, ++idx) {
      for (int a = 0; a < n; ++a) {
        int f = static_cast<int>((flips >> a) & 1u);
        int base = 2 * p[a];
        sigma[2 * a] = static_cast<std::uint8_t>((base + f + 1) % m);
        sigma[2 * a + 1] = static_cast<std::uint8_t>((base + (1 - f) + 1) % m);
      }
      fn(sigma.data());
    }
    flips = 0;
    std::next_permutation(p.begin(), p.begin() + n);
  }
}

UCode gauge_y_to_u(const YCode& c) {
  const int n = c.n;
  if (!y_classify(c)) throw InvalidInput("gauge_y_to_u: not a one-component Y code");
  const Perm rho = rho0(n);
  Perm phi = compose(conjugate(rho, c.sigma), rho);
  auto ph = phi.raw();
  std::vector<std::uint8_t> gamma(static_cast<std::size_t>(2 * n), 0xff);
  int x = 0;
  for (int k = 0; k < n; ++k) {
    gamma[x] = static_cast<std::uint8_t>(2 * k);
    gamma[x ^ 1] = static_cast<std::uint8_t>(2 * k + 1);
    x = ph[x];
  }
  Perm g = Perm::from_zero_based(std::move(gamma));
  Perm s = conjugate(c.sigma, g);
  if (compose(conjugate(rho, s), rho) != alpha0(n)) throw std::logic_error("gauge_y_to_u: gauge fixing failed");
  return UCode{n, compose(inverse(beta_cycle(n)), s)};
}

}  // namespace immcensus
