#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "immcensus/encodings.hpp"
#include "immcensus/kind.hpp"
#include "immcensus/orbits.hpp"

namespace immcensus {

enum class Method { X, Y, UDihedral, UCyclic, Z };

std::string_view method_name(Method m);  // "X", "Y", "U-dihedral", "U-cyclic", "Z"
Method parse_method(std::string_view text);

struct CensusOptions {
  SweepOptions sweep;
  bool allow_slow = false;
};

// Largest n enumerate_classes accepts (without / with allow_slow).
int envelope_limit(Method m, bool allow_slow, bool genus_filtered);

struct ImmersionClass {
  Method method = Method::Z;
  int n = 0;
  int genus = 0;
  Perm rep;
  std::uint64_t orbit_length = 0;
  std::uint64_t stabilizer_order = 0;
};

// Canonical key of any valid element (equal keys <=> same class).
std::uint64_t class_key(Method m, int n, const Perm& x);

struct ClassSet {
  Method method = Method::Z;
  int n = 0;
  std::optional<int> genus;  // set when only one genus was enumerated
  std::vector<ImmersionClass> classes;  // sorted by key
  std::vector<std::uint64_t> keys;

  // involution maps, filled on first use (see involution_map)
  struct InvolutionCache {
    std::mutex mu;
    std::array<std::shared_ptr<const std::vector<std::uint32_t>>, 3> maps;
  };
  std::shared_ptr<InvolutionCache> involution_cache = std::make_shared<InvolutionCache>();

  std::optional<std::size_t> find(std::uint64_t key) const;
  std::size_t index_of(const Perm& x) const;  // throws if the class is missing
  std::uint64_t universe_size() const;        // sum of orbit lengths
};

ClassSet enumerate_classes(Method m, int n, std::optional<int> genus = std::nullopt, const CensusOptions& opt = {});
// Same, memoised for the lifetime of the process.
std::shared_ptr<const ClassSet> cached_classes(Method m, int n, std::optional<int> genus, const CensusOptions& opt);

// ---- involutions ----

enum class Involution { Swap, Mirror, Reverse };

bool involution_available(Method m, Involution which);
Perm apply_involution(Method m, Involution which, const Perm& x);
// Composite such as "s", "sm", "rm", "swap", "mirror,reverse"; applied left to right.
Perm apply_involution(Method m, std::string_view which, const Perm& x);
std::vector<std::uint32_t> involution_map(const ClassSet& cs, Involution which);

// ---- symmetry profiles ----

enum class PairTag { SM, SR, RM };
std::string_view pair_name(PairTag p);

struct SymmetryProfile {
  Method method = Method::Z;
  PairTag pair = PairTag::SM;
  int n = 0;
  int genus = 0;
  bool mod_swap = false;  // computed on swap orbits (bicolourable curves)
  std::uint64_t x = 0, y = 0, z = 0, v = 0, w = 0;

  std::uint64_t r_first() const { return x + 2 * y; }       // classes fixed by the first involution
  std::uint64_t s_first() const { return z + v + 2 * w; }   // pairs it swaps
  std::array<std::uint64_t, 4> quotients() const;  // base, base/I, base/J, base/<I,J>
  auto operator<=>(const SymmetryProfile&) const = default;
};

// One profile per genus present.  `keep` restricts to a subset of classes,
// which must be closed under both involutions.  With mod_swap the pair acts
// on swap orbits instead of classes (U-cyclic only).
std::vector<SymmetryProfile> symmetry_profile(const ClassSet& cs, PairTag pair,
                                              const std::vector<bool>* keep = nullptr, bool mod_swap = false);

// ---- count tables ----

struct CountTable {
  std::map<std::tuple<Kind, int, int>, BigCount> rows;  // (kind, n, g)

  std::optional<BigCount> get(const Kind& k, int n, int g) const;
  void set(const Kind& k, int n, int g, const BigCount& value);  // throws on conflicting values
  std::string to_csv() const;
};

// Fills the kinds each profile determines.  With spherical_general, genus-0
// general counts are taken from the bicolourable ones (every spherical
// curve is bicolourable).
CountTable derive_counts(const std::vector<SymmetryProfile>& profiles, bool spherical_general = true);

struct StructureReport {
  int checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> observations;
  bool ok() const { return violations.empty(); }
};

StructureReport check_structure_theorems(const CountTable& table, const std::vector<SymmetryProfile>& profiles);

// ---- filters ----

struct PrimeFlags {
  bool irreducible = false;
  bool indecomposable = false;
  bool prime() const { return irreducible && indecomposable; }
};

struct CurveGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 2n edges between crossings
};

CurveGraph curve_graph(Method m, int n, const Perm& rep);
bool has_cut_vertex(const CurveGraph& g);
bool has_separating_edge_pair(const CurveGraph& g);

bool filter_kink_free(const ImmersionClass& c);
PrimeFlags filter_prime(const ImmersionClass& c);

// Genus histogram of U (long curves); index = genus.
std::vector<std::uint64_t> long_curve_table(int n, unsigned jobs = 1);

// ---- counts for a (n, genus) cell ----

struct Filters {
  bool kink_free = false;
  bool prime = false;
  bool any() const { return kink_free || prime; }
};

// keep[i] is true when class i passes the filters.
std::vector<bool> filter_mask(const ClassSet& cs, const Filters& f);

// Profiles needed for all 12 kinds at n (and genus if given), restricted by filters.
std::vector<SymmetryProfile> census_profiles(int n, std::optional<int> genus, const Filters& f, bool need_general,
                                             const CensusOptions& opt);

// ---- kind catalogues (classes of one immersion type) ----

struct KindClass {
  int genus = 0;
  std::vector<std::uint32_t> members;  // indices into the base class set; members[0] is the least
};

struct KindCatalog {
  Kind kind;
  int n = 0;
  std::shared_ptr<const ClassSet> base;
  std::vector<KindClass> classes;
};

KindCatalog kind_catalog(const Kind& kind, int n, std::optional<int> genus, const Filters& f, const CensusOptions& opt);

}  // namespace immcensus
