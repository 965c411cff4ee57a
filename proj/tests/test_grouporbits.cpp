#include <doctest.h>

#include <set>

#include "immcensus/census.hpp"
#include "immcensus/orbits.hpp"

using namespace immcensus;

namespace {

std::uint64_t fact(int k) { return k <= 1 ? 1 : k * fact(k - 1); }

// all of S_m as a universe
Universe symmetric_universe(int m) {
  Universe u;
  u.degree = static_cast<std::size_t>(m);
  u.index_count = fact(m);
  u.expected_size = u.index_count;
  u.for_range = [m](std::uint64_t b, std::uint64_t e, const std::function<void(const Perm&)>& fn) {
    for (std::uint64_t i = b; i < e; ++i) fn(perm_unrank(i, static_cast<std::size_t>(m)));
  };
  return u;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(make_group(GroupTag::CSigma, 4).order == 6144);
  CHECK(make_group(GroupTag::CRho, 7, false).order == 645120);
  CHECK(make_group(GroupTag::CRho, 3).elements.size() == 48);
  CHECK(make_group(GroupTag::CRhoPrime, 4).order == 24);
  CHECK(make_group(GroupTag::CRhoPrimeExt, 4).order == 48);
  CHECK(make_group(GroupTag::DihedralN, 5).order == 10);
  CHECK(make_group(GroupTag::DihedralN, 1).order == 2);
  CHECK(make_group(GroupTag::CyclicN, 6).order == 6);
  CHECK(make_group(GroupTag::CyclicOnPoints, 3).order == 6);
  CHECK(make_group(GroupTag::DihedralOnPoints, 3).order == 12);
  CHECK(make_group(GroupTag::DihedralOnPoints, 1).order == 2);
  CHECK(make_group(GroupTag::CTau, 2).order == 384);
  CHECK(make_group(GroupTag::Symmetric, 5).order == 120);
  for (auto tag : {GroupTag::CSigma, GroupTag::CRho, GroupTag::DihedralN, GroupTag::CRhoPrimeExt}) {
    auto g = make_group(tag, 3);
    CHECK(BigCount(g.elements.size()) == g.order);
    CHECK(parse_group_tag(group_tag_name(tag)) == tag);
  }
  CHECK_THROWS(parse_group_tag("nope"));
}

TEST_CASE("the dihedral group is C_rho meet its beta conjugate") {
  for (int n = 1; n <= 4; ++n) {
    auto crho = make_group(GroupTag::CRho, n);
    auto d = make_group(GroupTag::DihedralN, n);
    Perm b = beta_cycle(n);
    std::set<Perm> inter;
    std::set<Perm> conj;
    for (const auto& h : crho.elements) conj.insert(conjugate(h, b));
    for (const auto& h : crho.elements)
      if (conj.count(h)) inter.insert(h);
    std::set<Perm> dn(d.elements.begin(), d.elements.end());
    CHECK(inter == dn);
  }
}

TEST_CASE("orbit of sigma squared under C_sigma") {
  auto g = make_group(GroupTag::CSigma, 2);
  Perm s = x_sigma(2);
  Perm s2 = compose(s, s);
  auto o = orbit_of(s2, g);
  CHECK(o.summary.length == 1);
  CHECK(o.summary.stabilizer_order == 32);
  CHECK(stabilizer_order(s2, g) == 32);
  // a transposition has a nontrivial orbit
  Perm t = Perm::from_cycles("(1,5)", 8);
  auto ot = orbit_of(t, g);
  CHECK(ot.summary.length * ot.summary.stabilizer_order == 32);
  CHECK(ot.members.size() == ot.summary.length);
  CHECK(canonical_under(t, g) == ot.summary.representative);
  for (const auto& m : ot.members) CHECK(perm_rank(ot.summary.representative) <= perm_rank(m));
}

TEST_CASE("transversal sweep on S_4 under conjugation recovers the classes") {
  auto g = make_group(GroupTag::Symmetric, 4);
  auto orbits = transversal_sweep(symmetric_universe(4), g, {});
  CHECK(orbits.size() == 5);
  std::uint64_t total = 0;
  for (const auto& o : orbits) {
    total += o.length;
    CHECK(o.length * o.stabilizer_order == 24);
  }
  CHECK(total == 24);
  SweepOptions two;
  two.jobs = 2;
  auto again = transversal_sweep(symmetric_universe(4), g, two);
  REQUIRE(again.size() == orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) CHECK(again[i].representative == orbits[i].representative);
}

TEST_CASE("orbit-stabilizer on Z' for n=2 under C'_rho") {
  // single 2n-cycles up to relabelling by the diagonal S_n
  auto g = make_group(GroupTag::CRhoPrime, 2);
  Universe u = symmetric_universe(4);
  auto inner = u.for_range;
  u.for_range = [inner](std::uint64_t b, std::uint64_t e, const std::function<void(const Perm&)>& fn) {
    inner(b, e, [&](const Perm& p) {
      if (is_single_cycle(p)) fn(p);
    });
  };
  u.expected_size = 6;
  auto orbits = transversal_sweep(u, g, {});
  std::uint64_t total = 0;
  for (const auto& o : orbits) total += o.length;
  CHECK(total == 6);
  CHECK(orbits.size() == 4);
}

TEST_CASE("U under D_5 has 420 orbits") {
  auto cs = enumerate_classes(Method::UDihedral, 5);
  CHECK(cs.classes.size() == 420);
  CHECK(cs.universe_size() == 32 * 120);
  auto cyc = enumerate_classes(Method::UCyclic, 5);
  CHECK(cyc.classes.size() == 364 + 340 + 72);
}

TEST_CASE("C_rho and D_n stabilizers agree through the gauge") {
  for (int n = 1; n <= 5; ++n) {
    auto crho = make_group(GroupTag::CRho, n, n <= 4);
    auto dn = make_group(GroupTag::DihedralN, n);
    auto ys = enumerate_classes(Method::Y, n);
    for (const auto& c : ys.classes) {
      UCode u = gauge_y_to_u(YCode{n, c.rep});
      CHECK(stabilizer_order(u.sigma(), dn) == c.stabilizer_order);
      if (n <= 4) CHECK(stabilizer_order(c.rep, crho) == c.stabilizer_order);
    }
  }
}

TEST_CASE("run_sharded covers the range once") {
  std::vector<int> hit(1000);
  run_sharded(1000, 3, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto i = b; i < e; ++i) ++hit[i];
  });
  for (int h : hit) CHECK(h == 1);
}
