#include "immcensus/orbits.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <thread>
#include <unordered_set>

namespace immcensus {

namespace {

struct KeyHash {
  std::size_t operator()(PackedKey k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    return static_cast<std::size_t>((lo ^ (hi * 0xff51afd7ed558ccdull)) * 0x9e3779b97f4a7c15ull);
  }
};

class Visited {
 public:
  virtual ~Visited() = default;
  virtual bool insert(const Perm& p) = 0;  // true when newly inserted
};

class RankBitmap final : public Visited {
 public:
  explicit RankBitmap(std::uint64_t size) : bits_((size + 63) / 64, 0) {}
  bool insert(const Perm& p) override {
    auto r = perm_rank(p);
    auto& word = bits_[r >> 6];
    std::uint64_t mask = 1ull << (r & 63);
    if (word & mask) return false;
    word |= mask;
    return true;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

class KeySet final : public Visited {
 public:
  explicit KeySet(std::uint64_t expected) { set_.reserve(expected); }
  bool insert(const Perm& p) override { return set_.insert(pack_key(p.raw())).second; }

 private:
  std::unordered_set<PackedKey, KeyHash> set_;
};

constexpr std::uint64_t kHashBytesPerEntry = 64;

std::uint64_t group_order_u64(const GroupSpec& g) {
  if (g.order > std::numeric_limits<std::uint64_t>::max()) throw GroupTooLarge(g.name() + " order exceeds 64 bits");
  return static_cast<std::uint64_t>(g.order);
}

// BFS from x, feeding each new member through `mark` (which reports novelty).
template <class Mark>
OrbitSummary bfs_orbit(const Perm& x, const GroupSpec& g, std::uint64_t cap, Mark&& mark,
                       std::vector<Perm>* members_out) {
  std::vector<Perm> members{x};
  mark(x);
  Perm best = x;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& gen : g.generators) {
      Perm y = conjugate(members[head], gen);
      if (!mark(y)) continue;
      if (y < best) best = y;
      members.push_back(std::move(y));
      if (members.size() > cap) throw OrbitOverflow("orbit exceeds cap for " + g.name());
    }
  }
  OrbitSummary s;
  s.representative = best;
  s.length = members.size();
  auto order = group_order_u64(g);
  if (order % s.length != 0) throw OrbitOverflow("orbit length does not divide group order");
  s.stabilizer_order = order / s.length;
  if (members_out) *members_out = std::move(members);
  return s;
}

}  // namespace

void run_sharded(std::uint64_t total, unsigned jobs,
                 const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  if (jobs <= 1 || total < 2) {
    fn(0, 0, total);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned s = 0; s < jobs; ++s) {
    std::uint64_t b = total * s / jobs;
    std::uint64_t e = total * (s + 1) / jobs;
    workers.emplace_back([&, s, b, e] {
      try {
        fn(s, b, e);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

Orbit orbit_of(const Perm& x, const GroupSpec& g, std::uint64_t cap) {
  if (x.degree() != g.degree) throw InvalidInput("degree mismatch between element and group");
  auto order = group_order_u64(g);
  if (cap == 0 || cap > order) cap = order;
  std::unordered_set<PackedKey, KeyHash> seen;
  Orbit o;
  o.summary = bfs_orbit(x, g, cap, [&](const Perm& p) { return seen.insert(pack_key(p.raw())).second; },
                        &o.members);
  return o;
}

std::uint64_t stabilizer_order(const Perm& x, const GroupSpec& g) {
  if (x.degree() != g.degree) throw InvalidInput("degree mismatch between element and group");
  if (!g.materialized()) throw GroupTooLarge(g.name() + " not materialized; derive the stabilizer from orbit length");
  std::uint64_t count = 0;
  for (const auto& k : g.elements)
    if (conjugate(x, k) == x) ++count;
  return count;
}

Perm canonical_under(const Perm& x, const GroupSpec& g) {
  if (!g.materialized()) throw GroupTooLarge(g.name() + " not materialized");
  Perm best = x;
  for (const auto& k : g.elements) {
    Perm y = conjugate(x, k);
    if (y < best) best = std::move(y);
  }
  return best;
}

std::vector<OrbitSummary> transversal_sweep(const Universe& u, const GroupSpec& g, const SweepOptions& opt) {
  if (u.degree != g.degree) throw InvalidInput("degree mismatch between universe and group");
  const unsigned jobs = std::max(1u, opt.jobs);
  const std::uint64_t budget = static_cast<std::uint64_t>(opt.memory_mb) << 20;
  const auto order = group_order_u64(g);

  bool use_bitmap = u.degree <= 12;
  std::uint64_t bitmap_size = 1;
  for (std::size_t k = 2; k <= u.degree && use_bitmap; ++k) bitmap_size *= k;
  std::uint64_t per_shard = use_bitmap ? bitmap_size / 8 : u.expected_size * kHashBytesPerEntry;
  if (per_shard * jobs > budget) {
    throw MemoryBudgetExceeded("visited set needs ~" + std::to_string((per_shard * jobs) >> 20) +
                               " MB, budget is " + std::to_string(opt.memory_mb) +
                               " MB; shard the universe or raise --memory-mb");
  }

  std::vector<std::vector<OrbitSummary>> found(jobs);
  run_sharded(u.index_count, jobs, [&](unsigned shard, std::uint64_t b, std::uint64_t e) {
    std::unique_ptr<Visited> visited;
    if (use_bitmap)
      visited = std::make_unique<RankBitmap>(bitmap_size);
    else
      visited = std::make_unique<KeySet>(u.expected_size / jobs + 16);
    auto& out = found[shard];
    u.for_range(b, e, [&](const Perm& x) {
      if (!visited->insert(x)) return;
      // x is already marked; BFS marks the rest
      bool first = true;
      out.push_back(bfs_orbit(x, g, order,
                              [&](const Perm& p) {
                                if (first) {
                                  first = false;
                                  return true;
                                }
                                return visited->insert(p);
                              },
                              nullptr));
    });
  });

  // merge: shards may rediscover an orbit that started in another range
  std::vector<OrbitSummary> all;
  for (auto& f : found)
    for (auto& s : f) all.push_back(std::move(s));
  std::sort(all.begin(), all.end(),
            [](const OrbitSummary& a, const OrbitSummary& b) { return a.representative < b.representative; });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const OrbitSummary& a, const OrbitSummary& b) {
                          return a.representative == b.representative;
                        }),
            all.end());
  return all;
}

}  // namespace immcensus
