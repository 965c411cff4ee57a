#include <map>

#include "immcensus/census.hpp"

namespace immcensus {

std::string_view pair_name(PairTag p) {
  switch (p) {
    case PairTag::SM: return "sm";
    case PairTag::SR: return "sr";
    case PairTag::RM: return "rm";
  }
  return "?";
}

std::array<std::uint64_t, 4> SymmetryProfile::quotients() const {
  return {x + 2 * y + 2 * z + 2 * v + 4 * w, x + 2 * y + z + v + 2 * w, x + y + 2 * z + v + 2 * w,
          x + y + z + v + w};
}

namespace {

std::pair<Involution, Involution> pair_of(PairTag p) {
  switch (p) {
    case PairTag::SM: return {Involution::Swap, Involution::Mirror};
    case PairTag::SR: return {Involution::Swap, Involution::Reverse};
    case PairTag::RM: return {Involution::Reverse, Involution::Mirror};
  }
  throw std::logic_error("bad pair tag");
}

}  // namespace

std::vector<SymmetryProfile> symmetry_profile(const ClassSet& cs, PairTag pair, const std::vector<bool>* keep,
                                              bool mod_swap) {
  auto [first, second] = pair_of(pair);
  if (!involution_available(cs.method, first) || !involution_available(cs.method, second))
    throw InvalidInput("pair " + std::string(pair_name(pair)) + " is not available for method " +
                       std::string(method_name(cs.method)));
  if (keep && keep->size() != cs.classes.size()) throw InvalidInput("symmetry_profile: filter size mismatch");
  auto I = involution_map(cs, first);
  auto J = involution_map(cs, second);
  std::vector<std::uint32_t> S;
  if (mod_swap) {
    if (pair != PairTag::RM || !involution_available(cs.method, Involution::Swap))
      throw InvalidInput("mod_swap needs the rm pair on a method with swap");
    // work on swap orbits, each named by its least member
    S = involution_map(cs, Involution::Swap);
    auto lead = [&](std::uint32_t i) { return std::min(i, S[i]); };
    for (std::uint32_t i = 0; i < I.size(); ++i) {
      I[i] = lead(I[i]);
      J[i] = lead(J[i]);
    }
  }
  std::map<int, SymmetryProfile> by_genus;
  for (std::uint32_t o = 0; o < I.size(); ++o) {
    if (keep && !(*keep)[o]) continue;
    if (mod_swap && S[o] < o) continue;
    const std::uint32_t oi = I[o], oj = J[o], oij = I[J[o]];
    if (I[oj] != J[oi]) throw std::logic_error("involutions do not commute on classes");
    if (keep && (!(*keep)[oi] || !(*keep)[oj])) throw InvalidInput("symmetry_profile: filter not closed under involutions");
    // count each <I,J>-orbit once, at its least member
    if (oi < o || oj < o || oij < o) continue;
    auto& p = by_genus[cs.classes[o].genus];
    if (oi == o && oj == o) {
      ++p.x;
    } else if (oi == o) {
      ++p.y;
    } else if (oj == o) {
      ++p.z;
    } else if (oij == o) {
      ++p.v;
    } else {
      ++p.w;
    }
  }
  std::vector<SymmetryProfile> out;
  for (auto& [g, p] : by_genus) {
    p.method = cs.method;
    p.pair = pair;
    p.n = cs.n;
    p.genus = g;
    p.mod_swap = mod_swap;
    out.push_back(p);
  }
  return out;
}

}  // namespace immcensus
