#include "immcensus/detail/kernels.hpp"
#include "immcensus/encodings.hpp"

namespace immcensus {

namespace {

// psi_pi on 4n labels, 0-based: label i < 2n is the right side of edge i+1,
// label i + 2n its left side.
void build_psi(const std::uint8_t* pi, int n, std::uint8_t* psi) {
  const int m = 2 * n;
  std::array<std::uint8_t, detail::kMaxDegree> pinv{};
  for (int i = 0; i < m; ++i) pinv[pi[i]] = static_cast<std::uint8_t>(i);
  // the formulas are stated with 1-based labels I = i + 1
  for (int i = 0; i < m; ++i) {
    const int I = i + 1;
    if (I % 2 == 1)
      psi[i] = pi[i + 1];                          // pi(I+1)
    else
      psi[i] = static_cast<std::uint8_t>(i - 1 + m);  // I-1+2n
    const int J = pinv[i] + 1;                     // pi^-1(I)
    if (J % 2 == 1)
      psi[i + m] = static_cast<std::uint8_t>(J + m);  // J+1+2n, 0-based
    else
      psi[i + m] = pi[J - 2];                      // pi(J-1)
  }
}

}  // namespace

bool is_single_cycle(const Perm& p) {
  if (p.degree() == 0) return false;
  return cycle_count(p) == 1;
}

Perm psi_of(const ZCode& c) {
  if (c.n < 1 || c.pi.degree() != static_cast<std::size_t>(2 * c.n)) throw InvalidInput("ZCode: pi must have degree 2n");
  if (4 * c.n > detail::kMaxDegree) throw OutOfEnvelope("psi construction supports n <= 16");
  std::vector<std::uint8_t> psi(static_cast<std::size_t>(4 * c.n));
  build_psi(c.pi.raw().data(), c.n, psi.data());
  return Perm::from_zero_based(std::move(psi));
}

int z_genus(const ZCode& c) {
  if (c.pi.degree() != static_cast<std::size_t>(2 * c.n) || !is_single_cycle(c.pi))
    throw InvalidInput("ZCode: pi must be a single 2n-cycle");
  int twice_g = c.n + 2 - cycle_count(psi_of(c));
  if (twice_g < 0 || twice_g % 2 != 0) throw std::logic_error("z_genus: genus parity violated");
  return twice_g / 2;
}

int z_genus_raw(const std::uint8_t* pi, int n) {
  std::array<std::uint8_t, detail::kMaxDegree> psi{};
  build_psi(pi, n, psi.data());
  return (n + 2 - detail::cycles(psi.data(), 4 * n)) / 2;
}

}  // namespace immcensus
