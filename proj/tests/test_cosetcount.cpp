#include <doctest.h>

#include <set>

#include "immcensus/cosetcount.hpp"
#include "immcensus/encodings.hpp"

using namespace immcensus;

namespace {

BigCount big(const char* s) { return BigCount(s); }

}  // namespace

TEST_CASE("closed-form profiles agree with enumeration") {
  for (auto tag : {GroupTag::CSigma, GroupTag::CTau, GroupTag::CRho, GroupTag::CRhoPrime, GroupTag::CRhoPrimeExt,
                   GroupTag::DihedralN, GroupTag::CyclicN, GroupTag::CyclicOnPoints, GroupTag::DihedralOnPoints,
                   GroupTag::Symmetric}) {
    for (int n = 1; n <= 4; ++n) {
      if (tag == GroupTag::CTau && n > 3) continue;
      CAPTURE(group_tag_name(tag));
      CAPTURE(n);
      auto g = make_group(tag, n);
      auto closed = profile_of(tag, n);
      auto direct = profile_by_enumeration(g);
      CHECK(closed.degree == direct.degree);
      CHECK(closed.counts == direct.counts);
      CHECK(closed.total() == g.order);
    }
  }
}

TEST_CASE("C'_rho profile at n=3") {
  // the diagonal S_3 acts on pairs, so each S_3 class doubles its cycles
  auto p = profile_of(GroupTag::CRhoPrime, 3);
  CHECK(p.counts.size() == 3);
  CHECK(p.counts.at(CycleType({1, 1, 1, 1, 1, 1})) == 1);
  CHECK(p.counts.at(CycleType({2, 2, 1, 1})) == 3);
  CHECK(p.counts.at(CycleType({3, 3})) == 2);
  CHECK(profile_of(GroupTag::CRho, 4).total() == 384);
}

TEST_CASE("wreath profile of Z_2 wr S_2") {
  auto p = cyclic_wreath_profile(2, 2);
  CHECK(p.total() == 8);
  CHECK(p.counts == profile_of(GroupTag::CRho, 2).counts);
}

TEST_CASE("Frobenius counts") {
  SUBCASE("C_sigma orbits on X") {
    const std::uint64_t expect[] = {2, 10, 54, 491, 6430, 119475, 2775582, 76733201, 2439149685};
    for (int n = 1; n <= 9; ++n) CHECK(count_x_orbits(n) == expect[n - 1]);
  }
  SUBCASE("OO totals") {
    const char* expect[] = {"1",
                            "4",
                            "22",
                            "218",
                            "3028",
                            "55540",
                            "1235526",
                            "32434108",
                            "980179566",
                            "33522177088",
                            "1279935820810",
                            "53970628896500",
                            "2490952020480012",
                            "124903451391713412",
                            "6761440164391403896",
                            "393008709559373134184",
                            "24412776311194951680016",
                            "1613955767240361647220648",
                            "113146793787569865523200018",
                            "8384177419658944198600637096"};
    for (int n = 1; n <= 20; ++n) CHECK(count_total_immersions(parse_kind("OO"), n) == big(expect[n - 1]));
  }
  SUBCASE("other kinds") {
    CHECK(count_total_immersions(parse_kind("UO"), 5) == 1538);
    CHECK(count_total_immersions(parse_kind("UO"), 4) == 121);
    CHECK(count_total_immersions(parse_kind("UU"), 6) == 14715);
    CHECK_THROWS_AS(count_total_immersions(parse_kind("OOb"), 3), InvalidInput);
  }
  SUBCASE("prime n") {
    for (int n : {2, 3, 5, 7, 11, 13})
      CHECK(prime_n_orbit_formula(n) == count_total_immersions(parse_kind("OO"), n));
    CHECK(prime_n_orbit_formula(2) == 4);
    CHECK_THROWS_AS(prime_n_orbit_formula(9), InvalidInput);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
  }
}

TEST_CASE("double coset representatives") {
  // <beta> \ S_2n / C'_rho for the Z method
  for (int n = 2; n <= 3; ++n) {
    auto h = make_group(GroupTag::CyclicOnPoints, n);
    auto k = make_group(GroupTag::CRhoPrime, n);
    auto reps = double_coset_representatives(h, k, beta_cycle(n));
    CHECK(BigCount(reps.size()) == count_total_immersions(parse_kind("OO"), n));
    std::set<Perm> orbit_reps;
    for (const auto& r : reps) {
      CHECK(is_single_cycle(r.orbit_rep));
      CHECK(r.orbit_rep == conjugate(beta_cycle(n), inverse(r.x)));
      orbit_reps.insert(r.orbit_rep);
    }
    CHECK(orbit_reps.size() == reps.size());
  }
  auto big_h = make_group(GroupTag::CyclicOnPoints, 7, false);
  CHECK_THROWS(double_coset_representatives(big_h, big_h, beta_cycle(7)));
}
