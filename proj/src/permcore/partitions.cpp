#include "immcensus/perm.hpp"

namespace immcensus {

namespace {

void extend(int remaining, int max_part, std::vector<int>& cur, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    extend(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// Reverse lexicographic order, starting from [m].
std::vector<CycleType> partitions_of(int m) {
  if (m < 0) throw InvalidInput("partitions_of needs m >= 0");
  std::vector<CycleType> out;
  std::vector<int> cur;
  extend(m, m, cur, out);
  return out;
}

}  // namespace immcensus
