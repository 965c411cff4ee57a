#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "immcensus/group.hpp"

namespace immcensus {

struct OrbitSummary {
  Perm representative;  // minimal perm_rank member
  std::uint64_t length = 0;
  std::uint64_t stabilizer_order = 0;
};

struct Orbit {
  OrbitSummary summary;
  std::vector<Perm> members;  // BFS order
};

// Enumerable set of permutations indexed by [0, index_count).  for_range
// visits the members whose index lies in [begin, end); indices may be
// sparse (filtered universes simply skip).
struct Universe {
  std::size_t degree = 0;
  std::uint64_t index_count = 0;
  std::uint64_t expected_size = 0;  // used for memory planning
  std::function<void(std::uint64_t, std::uint64_t, const std::function<void(const Perm&)>&)> for_range;
};

struct SweepOptions {
  std::size_t memory_mb = 2048;
  unsigned jobs = 1;
};

Orbit orbit_of(const Perm& x, const GroupSpec& g, std::uint64_t cap = 0);
std::uint64_t stabilizer_order(const Perm& x, const GroupSpec& g);
// Minimal conjugate of x over a materialized group.
Perm canonical_under(const Perm& x, const GroupSpec& g);

std::vector<OrbitSummary> transversal_sweep(const Universe& u, const GroupSpec& g, const SweepOptions& opt);

// Splits [0, total) into `jobs` contiguous ranges and runs fn(shard, begin, end)
// on worker threads; returns after all finish.
void run_sharded(std::uint64_t total, unsigned jobs,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace immcensus
