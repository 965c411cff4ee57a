#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "immcensus/perm.hpp"

using namespace immcensus;

namespace {

Perm random_perm(std::mt19937& rng, int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm::from_one_line(v);
}

}  // namespace

TEST_CASE("compose follows the right-to-left convention") {
  Perm p = Perm::from_cycles("(1,2)(3,4)", 4);
  Perm q = Perm::from_cycles("(1,3)(2,4)", 4);
  CHECK(compose(Perm::identity(4), p) == p);
  CHECK(compose(p, q) == Perm::from_cycles("(1,4)(2,3)", 4));
  // i -> p(q(i)) on a non-commuting pair
  Perm a = Perm::from_one_line({2, 3, 1});
  Perm b = Perm::from_one_line({1, 3, 2});
  Perm ab = compose(a, b);
  for (int i = 1; i <= 3; ++i) CHECK(ab(i) == a(b(i)));
  CHECK_THROWS_AS(compose(p, Perm::identity(5)), InvalidInput);
}

TEST_CASE("sigma squared tau of the first X example has type [8,8]") {
  Perm sigma = Perm::from_cycles("(1,2,3,4)(5,6,7,8)(9,10,11,12)(13,14,15,16)", 16);
  Perm tau = Perm::from_cycles("(1,13)(2,5)(3,6)(4,16)(7,8)(9,12)(10,15)(11,14)", 16);
  Perm s2t = compose(compose(sigma, sigma), tau);
  CHECK(cycle_analysis(s2t).type == CycleType({8, 8}));
  CHECK(s2t == Perm::from_cycles("(1,15,12,11,16,2,7,6)(3,8,5,4,14,9,10,13)", 16));
  auto st = cycle_analysis(compose(sigma, tau));
  CHECK(st.cycle_count == 6);
  Perm tau2 = Perm::from_cycles("(1,8)(2,3)(4,16)(5,13)(6,12)(7,14)(9,15)(10,11)", 16);
  CHECK(cycle_count(compose(sigma, tau2)) == 4);
}

TEST_CASE("inverse and conjugate") {
  Perm pi = Perm::from_cycles("(1,2,7,8,3,5,6,9,10,4)", 10);
  CHECK(inverse(pi) == Perm::from_cycles("(1,4,10,9,6,5,3,8,7,2)", 10));
  Perm rho = Perm::from_cycles("(1,2)(3,4)(5,6)", 6);
  CHECK(inverse(rho) == rho);
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Perm p = random_perm(rng, 8), g = random_perm(rng, 8), h = random_perm(rng, 8);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    CHECK(compose(compose(p, g), h) == compose(p, compose(g, h)));
    CHECK(cycle_analysis(conjugate(p, g)).type == cycle_analysis(p).type);
    CHECK(conjugate(p, g) == compose(g, compose(p, inverse(g))));
  }
  CHECK(conjugate(pi, Perm::identity(10)) == pi);
}

TEST_CASE("cycle analysis counts singletons") {
  auto a = cycle_analysis(Perm::identity(6));
  CHECK(a.cycle_count == 6);
  CHECK(a.type == CycleType({1, 1, 1, 1, 1, 1}));
  Perm s = Perm::from_one_line({3, 5, 7, 1, 2, 6, 4, 8});
  CHECK(s.to_cycle_string() == "(1,3,7,4)(2,5)");
  CHECK(cycle_analysis(s).type == CycleType({4, 2, 1, 1}));
}

TEST_CASE("parsing and printing") {
  Perm p = Perm::parse("[3,5,7,1,2,6,4,8]");
  CHECK(p == Perm::parse("(1,3,7,4)(2,5)", 8));
  CHECK(p.to_one_line_string() == "[3,5,7,1,2,6,4,8]");
  CHECK(Perm::parse(p.to_cycle_string(), 8) == p);
  CHECK_THROWS_AS(Perm::parse("[1,1,2]"), InvalidInput);
  CHECK_THROWS_AS(Perm::parse("(1,2)"), InvalidInput);  // cycle form needs a degree
  CHECK_THROWS_AS(Perm::from_cycles("(1,9)", 4), InvalidInput);
  CHECK_THROWS_AS(Perm::from_cycles("(1,2)(2,3)", 4), InvalidInput);
}

TEST_CASE("perm_rank is lexicographic and inverts perm_unrank") {
  for (int m = 1; m <= 7; ++m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t expect = 0;
    do {
      Perm p = Perm::from_one_line(v);
      REQUIRE(perm_rank(p) == expect);
      REQUIRE(perm_unrank(expect, static_cast<std::size_t>(m)) == p);
      ++expect;
    } while (std::next_permutation(v.begin(), v.end()));
  }
  std::vector<int> rev{6, 5, 4, 3, 2, 1};
  CHECK(perm_rank(Perm::from_one_line(rev)) == 719);
  CHECK(perm_rank(Perm::identity(20)) == 0);
  CHECK_THROWS_AS(perm_unrank(24, 4), std::out_of_range);
}

TEST_CASE("class sizes and partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(40).size() == 37338);
  CHECK(class_size(CycleType({1, 1, 1, 1})) == 1);
  CHECK(class_size(CycleType({2, 2})) == 3);
  for (int m = 1; m <= 12; ++m) {
    BigCount sum = 0;
    for (const auto& t : partitions_of(m)) {
      CHECK(t.degree() == m);
      sum += class_size(t);
    }
    CHECK(sum == factorial(m));
  }
  // brute-force oracle on S_6
  std::map<CycleType, int> seen;
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  do {
    ++seen[cycle_analysis(Perm::from_one_line(v)).type];
  } while (std::next_permutation(v.begin(), v.end()));
  for (const auto& [t, c] : seen) CHECK(class_size(t) == c);
  CHECK(seen.size() == partitions_of(6).size());
}
