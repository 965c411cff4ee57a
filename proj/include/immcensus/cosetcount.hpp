#pragma once

#include <map>
#include <vector>

#include "immcensus/group.hpp"
#include "immcensus/kind.hpp"

namespace immcensus {

// |H meet G_mu| for every S_m class mu (sparse).
struct ClassProfile {
  std::size_t degree = 0;
  std::map<CycleType, BigCount> counts;

  BigCount total() const;
};

ClassProfile profile_of(const GroupSpec& g);
ClassProfile profile_of(GroupTag tag, int n);
// Direct count over the materialized elements (test oracle).
ClassProfile profile_by_enumeration(const GroupSpec& g);
// Z_q wr S_k with Z_q regular on each block of q points.
ClassProfile cyclic_wreath_profile(int q, int k);

BigCount frobenius_count(const ClassProfile& h, const ClassProfile& k);

// Orbits of one-component maps with n vertices, all genera; colour must be None.
BigCount count_total_immersions(const Kind& kind, int n);
BigCount count_x_orbits(int n);  // C_sigma orbits on all of [2^{2n}]

struct DoubleCosetRep {
  Perm x;          // minimal element of H x K
  Perm orbit_rep;  // conjugate(base, inverse(x))
};

// One entry per double coset, for materialized H, K of degree <= 12.
std::vector<DoubleCosetRep> double_coset_representatives(const GroupSpec& h, const GroupSpec& k, const Perm& base);

BigCount prime_n_orbit_formula(int n);
bool is_prime(int n);

}  // namespace immcensus
