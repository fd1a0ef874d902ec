#include <doctest.h>

#include <array>
#include <utility>
#include <vector>

#include "bz.hpp"

using namespace hivemv;

namespace {

BZDatum make_bz(int n, const std::vector<std::pair<std::vector<int>, Int>>& vals) {
  BZDatum m;
  m.n = n;
  m.m.assign(SubsetTable::get(n).masks.size(), 0);
  for (const auto& [elems, v] : vals) m.set(mask_from_elements(elems, n), v);
  return m;
}

// M_gamma = <mu, gamma>: linear data satisfy every relation with equality.
BZDatum linear_bz(const Coweight& mu) {
  BZDatum m;
  m.n = mu.size();
  const auto& t = SubsetTable::get(mu.size());
  m.m.resize(t.masks.size());
  for (size_t s = 0; s < t.masks.size(); ++s)
    m.m[s] = subset_sum(mu, t.masks[s]);
  return m;
}

}  // namespace

TEST_CASE("tropical plucker checks") {
  // n=2 has no adjacent pair (i, i+1), so any table passes vacuously.
  BZDatum any = make_bz(2, {{{1}, 7}, {{2}, -3}, {{1, 2}, 100}});
  CHECK(check_tropical_plucker(any).empty());
  CHECK(tropical_plucker_instances(2) == 0);
  CHECK(tropical_plucker_instances(3) == 1);

  CHECK(check_tropical_plucker(linear_bz(Coweight{2, 0, -1})).empty());

  // Breaking the single n=3 instance: perturb one non-interval value of a
  // linear table.
  BZDatum broken = linear_bz(Coweight{2, 0, -1});
  broken.set(mask_from_elements({1, 3}, 3), broken.value(mask_from_elements({1, 3}, 3)) + 5);
  CHECK_FALSE(check_tropical_plucker(broken).empty());
}

TEST_CASE("edge inequalities on the frozen GL_2 tables") {
  BZDatum good = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  CHECK(check_edge_inequalities(good).empty());

  BZDatum bad = make_bz(2, {{{1}, 0}, {{2}, 1}, {{1, 2}, 0}});
  auto viols = check_edge_inequalities(bad);
  REQUIRE_FALSE(viols.empty());
  bool at_identity = false;
  for (const auto& v : viols)
    if (v.w == Perm::identity(2) && v.i == 1 && v.amount == 1) at_identity = true;
  CHECK(at_identity);

  CHECK(check_edge_inequalities(linear_bz(Coweight{3, 1, 0, -2})).empty());
}

TEST_CASE("vertices recover the coweights") {
  BZDatum m = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  GGMSDatum g = vertices(m);
  REQUIRE(g.perms.size() == 2);
  for (size_t w = 0; w < g.perms.size(); ++w)
    CHECK(g.mu[w] == Coweight{1, 0});
  auto [lo, hi] = bz_coweight(m);
  CHECK(lo == Coweight{1, 0});
  CHECK(hi == Coweight{1, 0});

  Coweight mu{2, 0, -1};
  GGMSDatum lin = vertices(linear_bz(mu));
  for (size_t w = 0; w < lin.perms.size(); ++w) {
    CHECK(lin.mu[w] == mu);
    // Defining property: the vertex pairs to the table value at every
    // chamber weight of its permutation.
    for (int i = 1; i < mu.size(); ++i) {
      SubsetMask s = lin.perms[w].prefix_image(i);
      CHECK(pairing(lin.mu[w], s) == linear_bz(mu).value(s));
    }
  }
}

TEST_CASE("polytope containment") {
  BZDatum m = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  CHECK(polytope_contained(m, Coweight{1, 0}));
  CHECK_FALSE(polytope_contained(m, Coweight{0, 0}));
  CHECK(polytope_contained(m, Coweight{1, 0}, Coweight{1, 1}));
}

TEST_CASE("monotonicity along subset dominance") {
  BZDatum good = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  CHECK(check_monotone(good).empty());

  BZDatum bad = make_bz(2, {{{1}, 0}, {{2}, 1}, {{1, 2}, 1}});
  auto viols = check_monotone(bad);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].gamma == mask_from_elements({1}, 2));
  CHECK(viols[0].delta == mask_from_elements({2}, 2));

  CHECK(check_monotone(linear_bz(Coweight{2, 1, -1})).empty());
}

TEST_CASE("enumerate_mv frozen examples") {
  auto one = enumerate_mv(Coweight{1, 0}, Coweight{1, 0}, Coweight{2, 0});
  REQUIRE(one.size() == 1);
  CHECK(one[0].value(mask_from_elements({1}, 2)) == 1);
  CHECK(one[0].value(mask_from_elements({2}, 2)) == 0);
  CHECK(one[0].value(0) == 0);
  CHECK(one[0].value(full_mask(2)) == 1);  // fixed total = sum of la

  CHECK(enumerate_mv(Coweight{2, 1, 0}, Coweight{2, 1, 0}, Coweight{3, 2, 1}).size() == 2);
  CHECK(enumerate_mv(Coweight{1, 0}, Coweight{1, 0}, Coweight{5, 0}).empty());
}

TEST_CASE("enumerated data satisfy every defining condition") {
  Coweight la{2, 1, 0}, mu{2, 1, 0}, nu{3, 2, 1};
  auto data = enumerate_mv(la, mu, nu);
  REQUIRE(data.size() == 2);
  CHECK(data[0] < data[1]);
  for (const auto& m : data) {
    CHECK(check_tropical_plucker(m).empty());
    CHECK(check_edge_inequalities(m).empty());
    CHECK(check_monotone(m).empty());
    CHECK(polytope_contained(m, la));
    CHECK(polytope_contained(m, mu, nu));
    auto [lo, hi] = bz_coweight(m);
    CHECK(lo == nu - mu);
    CHECK(hi == la);
  }
}

TEST_CASE("brute force search agrees with the hive route") {
  std::vector<std::array<Coweight, 3>> triples = {
      {Coweight{1, 0}, Coweight{1, 0}, Coweight{2, 0}},
      {Coweight{1, 0}, Coweight{1, 0}, Coweight{1, 1}},
      {Coweight{2, 0}, Coweight{1, 1}, Coweight{2, 1}},
      {Coweight{1, 0, 0}, Coweight{1, 0, 0}, Coweight{1, 1, 0}},
      {Coweight{1, 1, 0}, Coweight{1, 0, 0}, Coweight{1, 1, 1}},
      {Coweight{1, 0, 0}, Coweight{1, 1, 0}, Coweight{2, 1, 0}}};
  for (const auto& [la, mu, nu] : triples) {
    auto fast = enumerate_mv(la, mu, nu);
    auto slow = enumerate_mv_bruteforce(la, mu, nu);
    CHECK(fast == slow);
  }
}
