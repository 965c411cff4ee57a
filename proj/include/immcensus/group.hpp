#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "immcensus/perm.hpp"

namespace immcensus {

enum class GroupTag {
  CSigma,            // Z4 wr S_n in S_4n, centralizer of (1,2,3,4)(5,6,7,8)...
  CTau,              // S2 wr S_2n in S_4n, centralizer of (1,2)(3,4)... of degree 4n
  CRho,              // S2 wr S_n in S_2n
  CRhoPrime,         // diagonal S_n in S_2n
  CRhoPrimeExt,      // <C'_rho, rho>
  DihedralN,         // D_n = C_rho meet beta C_rho beta^-1, order 2n
  CyclicN,           // Z_n = <beta^2>
  CyclicOnPoints,    // Z_beta = <beta>
  DihedralOnPoints,  // <beta, sigma_r>
  Symmetric,         // full S_m, m = n
};

std::string_view group_tag_name(GroupTag tag);
GroupTag parse_group_tag(std::string_view name);

struct GroupSpec {
  GroupTag tag = GroupTag::Symmetric;
  int n = 0;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  BigCount order;
  std::vector<Perm> elements;  // empty unless materialized

  bool materialized() const { return !elements.empty(); }
  std::string name() const;
};

// Groups up to this order are materialized by make_group.
inline constexpr std::uint64_t kMaterializeLimit = 1u << 20;

GroupSpec make_group(GroupTag tag, int n, bool with_elements = true);
// Closure of the generators; throws GroupTooLarge above the limit.
std::vector<Perm> materialize(const GroupSpec& g, std::uint64_t limit = kMaterializeLimit);

// Fixed permutations used throughout (all of degree 2n unless stated).
Perm rho0(int n);                // (1,2)(3,4)...
Perm beta_cycle(int n);          // (1,2,...,2n)
Perm alpha0(int n);              // (1,3,...,2n-1)(2,2n,...,4)
Perm reversal_r(int n);          // i -> 2n+1-i
Perm sigma_r_points(int n);      // (2,2n)(3,2n-1)...
Perm x_sigma(int n);             // (1,2,3,4)(5,6,7,8)... degree 4n

}  // namespace immcensus
