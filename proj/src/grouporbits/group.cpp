#include "immcensus/group.hpp"

#include <algorithm>
#include <unordered_set>

namespace immcensus {

namespace {

struct KeyHash {
  std::size_t operator()(PackedKey k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo * 0x9e3779b97f4a7c15ull ^ hi);
  }
};

Perm from_images(std::vector<std::uint8_t> img) { return Perm::from_zero_based(std::move(img)); }

// Transposition-like block maps on blocks of size b inside degree b*k.
Perm block_swap(int block, int k) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(block * k));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint8_t>(i);
  for (int j = 0; j < block; ++j) std::swap(img[j], img[block + j]);
  return from_images(std::move(img));
}

Perm block_cycle(int block, int k) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(block * k));
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = static_cast<std::uint8_t>((i + block) % img.size());
  return from_images(std::move(img));
}

// Generators for S_k acting on k blocks of the given size (diagonally).
void add_block_symmetric(std::vector<Perm>& gens, int block, int k) {
  if (k >= 2) gens.push_back(block_swap(block, k));
  if (k >= 3) gens.push_back(block_cycle(block, k));
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::string_view group_tag_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::CSigma: return "C_sigma";
    case GroupTag::CTau: return "C_tau";
    case GroupTag::CRho: return "C_rho";
    case GroupTag::CRhoPrime: return "C_rho_prime";
    case GroupTag::CRhoPrimeExt: return "C_rho_prime_ext";
    case GroupTag::DihedralN: return "D_n";
    case GroupTag::CyclicN: return "Z_n";
    case GroupTag::CyclicOnPoints: return "cyclic_on_points";
    case GroupTag::DihedralOnPoints: return "dihedral_on_points";
    case GroupTag::Symmetric: return "symmetric";
  }
  return "?";
}

GroupTag parse_group_tag(std::string_view name) {
  for (auto t : {GroupTag::CSigma, GroupTag::CTau, GroupTag::CRho, GroupTag::CRhoPrime,
                 GroupTag::CRhoPrimeExt, GroupTag::DihedralN, GroupTag::CyclicN,
                 GroupTag::CyclicOnPoints, GroupTag::DihedralOnPoints, GroupTag::Symmetric})
    if (group_tag_name(t) == name) return t;
  throw InvalidInput("unknown group tag '" + std::string(name) + "'");
}

std::string GroupSpec::name() const {
  return std::string(group_tag_name(tag)) + "(n=" + std::to_string(n) + ")";
}

Perm rho0(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint8_t>(i ^ 1u);
  return from_images(std::move(img));
}

Perm beta_cycle(int n) { return block_cycle(1, 2 * n); }

Perm alpha0(int n) {
  // odd labels step +2, even labels step -2
  const int m = 2 * n;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(i % 2 == 0 ? (i + 2) % m : (i - 2 + m) % m);
  return from_images(std::move(img));
}

Perm reversal_r(int n) {
  const int m = 2 * n;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>(m - 1 - i);
  return from_images(std::move(img));
}

Perm sigma_r_points(int n) {
  const int m = 2 * n;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) img[i] = static_cast<std::uint8_t>((m - i) % m);
  return from_images(std::move(img));
}

Perm x_sigma(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(4 * n));
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint8_t>((i & ~3u) | ((i + 1) & 3u));
  return from_images(std::move(img));
}

GroupSpec make_group(GroupTag tag, int n, bool with_elements) {
  if (n < 1) throw InvalidInput("make_group needs n >= 1");
  GroupSpec g;
  g.tag = tag;
  g.n = n;
  switch (tag) {
    case GroupTag::CSigma: {
      g.degree = static_cast<std::size_t>(4 * n);
      std::vector<std::uint8_t> rot(g.degree);
      for (std::size_t i = 0; i < g.degree; ++i) rot[i] = static_cast<std::uint8_t>(i < 4 ? (i + 1) % 4 : i);
      g.generators.push_back(from_images(std::move(rot)));
      add_block_symmetric(g.generators, 4, n);
      g.order = BigCount(pow_u64(4, n)) * factorial(n);
      break;
    }
    case GroupTag::CRho:
    case GroupTag::CTau: {
      const int k = tag == GroupTag::CRho ? n : 2 * n;
      g.degree = static_cast<std::size_t>(2 * k);
      std::vector<std::uint8_t> flip(g.degree);
      for (std::size_t i = 0; i < g.degree; ++i) flip[i] = static_cast<std::uint8_t>(i < 2 ? i ^ 1u : i);
      g.generators.push_back(from_images(std::move(flip)));
      add_block_symmetric(g.generators, 2, k);
      g.order = pow(BigCount(2), static_cast<unsigned>(k)) * factorial(k);
      break;
    }
    case GroupTag::CRhoPrime:
    case GroupTag::CRhoPrimeExt:
      g.degree = static_cast<std::size_t>(2 * n);
      add_block_symmetric(g.generators, 2, n);
      g.order = factorial(n);
      if (tag == GroupTag::CRhoPrimeExt) {
        g.generators.push_back(rho0(n));
        g.order *= 2;
      }
      break;
    case GroupTag::DihedralN:
      g.degree = static_cast<std::size_t>(2 * n);
      if (n >= 2) g.generators.push_back(compose(beta_cycle(n), beta_cycle(n)));
      g.generators.push_back(reversal_r(n));
      g.order = 2 * n;
      break;
    case GroupTag::CyclicN:
      g.degree = static_cast<std::size_t>(2 * n);
      if (n >= 2) g.generators.push_back(compose(beta_cycle(n), beta_cycle(n)));
      g.order = n;
      break;
    case GroupTag::CyclicOnPoints:
      g.degree = static_cast<std::size_t>(2 * n);
      g.generators.push_back(beta_cycle(n));
      g.order = 2 * n;
      break;
    case GroupTag::DihedralOnPoints:
      g.degree = static_cast<std::size_t>(2 * n);
      g.generators.push_back(beta_cycle(n));
      // for n = 1 sigma_r is the identity and the group is just <beta>
      if (n >= 2) g.generators.push_back(sigma_r_points(n));
      g.order = n >= 2 ? 4 * n : 2;
      break;
    case GroupTag::Symmetric:
      g.degree = static_cast<std::size_t>(n);
      add_block_symmetric(g.generators, 1, n);
      g.order = factorial(n);
      break;
  }
  if (with_elements && g.order <= kMaterializeLimit) g.elements = materialize(g);
  return g;
}

std::vector<Perm> materialize(const GroupSpec& g, std::uint64_t limit) {
  if (g.order > limit) throw GroupTooLarge(g.name() + " too large to materialize");
  if (g.degree > 25) throw GroupTooLarge(g.name() + " degree too large to materialize");
  std::vector<Perm> elems{Perm::identity(g.degree)};
  std::unordered_set<PackedKey, KeyHash> seen{pack_key(elems[0].raw())};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : g.generators) {
      Perm next = compose(gen, elems[head]);
      if (seen.insert(pack_key(next.raw())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > limit) throw GroupTooLarge(g.name() + " closure exceeded limit");
      }
    }
  }
  if (BigCount(elems.size()) != g.order) throw std::logic_error(g.name() + ": closure order disagrees with stated order");
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace immcensus
