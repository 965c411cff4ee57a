#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "immcensus/group.hpp"

namespace immcensus {

// ---- X method: half-edges 1..4n, sigma = (1,2,3,4)(5,6,7,8)... fixed ----

struct XCode {
  int n = 0;
  Perm tau;  // fixed-point-free involution of degree 4n
};

// Genus when sigma^2 tau has two 2n-cycles, nullopt otherwise.
std::optional<int> x_classify(const XCode& c);

// The choice-tree generator for X'.  Index order is the mixed-radix order of
// the successive choices, so any index range can be produced independently.
class XPrimeGenerator {
 public:
  explicit XPrimeGenerator(int n);
  int n() const { return n_; }
  std::uint64_t count() const { return count_; }
  XCode at(std::uint64_t index) const;
  // fn receives tau as 0-based images of degree 4n
  void for_range(std::uint64_t begin, std::uint64_t end, const std::function<void(const std::uint8_t*)>& fn) const;

 private:
  int n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> subtree_;  // subtree_[r] = leaves below a choice at depth r
};

struct XCanonical {
  Perm tau;             // minimal relabelling over all 4n roots
  int automorphisms;    // stabilizer order in C_sigma
};

// Relabels the map breadth-first from each root half-edge (relabellings that
// commute with sigma) and keeps the lexicographically least result.
XCanonical x_canonical(const XCode& c);
// Fast test used by sweeps: is tau already its own canonical form?
bool x_is_canonical(const std::uint8_t* tau, int n, int* automorphisms);

// ---- Y method: edges 1..2n, rho0 = (1,2)(3,4)... fixed ----

struct YCode {
  int n = 0;
  Perm sigma;
};

std::optional<int> y_classify(const YCode& c);
BigCount y_prime_size(int n);  // 2^{2n-1} (n-1)! n!

// ---- U gauge: sigma = beta xi with xi in C_rho ----

struct UCode {
  int n = 0;
  Perm xi;
  Perm sigma() const;
};

class UGenerator {
 public:
  explicit UGenerator(int n);
  int n() const { return n_; }
  std::uint64_t count() const { return count_; }
  UCode at(std::uint64_t index) const;
  // fn receives sigma = beta xi as 0-based images of degree 2n
  void for_range(std::uint64_t begin, std::uint64_t end, const std::function<void(const std::uint8_t*)>& fn) const;

 private:
  int n_;
  std::uint64_t count_;
};

// Genus of a U/Y code from 0-based images, no validity check.
int y_genus_raw(const std::uint8_t* sigma, int n);

// Conjugates a valid Y code by an element of C_rho into U.
UCode gauge_y_to_u(const YCode& c);

// ---- Z method: pi a single 2n-cycle ----

struct ZCode {
  int n = 0;
  Perm pi;
};

bool is_single_cycle(const Perm& p);
Perm psi_of(const ZCode& c);
int z_genus(const ZCode& c);
int z_genus_raw(const std::uint8_t* pi, int n);

// ---- diagrams ----

struct DiagramCode {
  int n = 0;
  // per vertex: incoming edge labels in1, in2 and outgoing out1, out2, with
  // in1 continuing into out1; counterclockwise order is in1, in2, out1, out2
  std::vector<std::array<int, 4>> vertices;
  std::vector<int> closure;  // edge labels in curve order starting from 1
  int genus = 0;
  // Drawing a genus g diagram in the plane needs at least g virtual crossings.
  int virtual_crossings_lower_bound = 0;
  bool one_component = false;
};

DiagramCode diagram_from_z(const ZCode& c);
ZCode z_from_diagram(const DiagramCode& d);
std::string diagram_to_json(const DiagramCode& d);
DiagramCode diagram_from_json(const std::string& text);

// ---- conversions ----

YCode convert_x_to_y(const XCode& c);  // throws NotBicolourable
YCode convert_u_to_y(const UCode& c);
ZCode convert_u_to_z(const UCode& c);
ZCode convert_y_to_z(const YCode& c);

}  // namespace immcensus
