#include <doctest.h>

#include <vector>

#include "phi.hpp"

using namespace hivemv;

namespace {

BZDatum make_bz(int n, const std::vector<std::pair<std::vector<int>, Int>>& vals) {
  BZDatum m;
  m.n = n;
  m.m.assign(SubsetTable::get(n).masks.size(), 0);
  for (const auto& [elems, v] : vals) m.set(mask_from_elements(elems, n), v);
  return m;
}

}  // namespace

TEST_CASE("table to hive on the frozen GL_2 datum") {
  BZDatum m = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  Hive f = bz_to_hive(m, Coweight{2, 0});
  CHECK(f.at(0, 0) == 0);
  CHECK(f.at(1, 0) == 0);
  CHECK(f.at(2, 0) == 1);
  CHECK(f.at(0, 1) == 0);
  CHECK(f.at(0, 2) == 2);
  CHECK(f.at(1, 1) == 1);
  auto b = hive_boundary(f);
  CHECK(b.la == Coweight{1, 0});
  CHECK(b.mu == Coweight{1, 0});
  CHECK(b.nu == Coweight{2, 0});
}

TEST_CASE("zero datum gives the constant hive") {
  BZDatum z = make_bz(3, {});
  Hive f = bz_to_hive(z, Coweight::zero(3));
  for (Int v : f.values) CHECK(v == 0);
}

TEST_CASE("left edge of the output is the nu tail sum") {
  Coweight la{2, 1, 0}, mu{2, 1, 0}, nu{3, 2, 1};
  for (const auto& m : enumerate_mv(la, mu, nu)) {
    Hive f = bz_to_hive(m, nu);
    for (int k = 0; k <= 3; ++k) {
      Int tail = 0;
      for (int t = k + 1; t <= 3; ++t) tail += nu[t - 1];
      CHECK(f.at(0, 3 - k) == tail);
    }
  }
}

TEST_CASE("invalid datum is rejected") {
  BZDatum m = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  m.set(mask_from_elements({1, 2}, 2), -9);
  CHECK_THROWS(bz_to_hive(m, Coweight{2, 0}));
}

TEST_CASE("hive to table needs no propagation at n=2") {
  auto hs = enumerate_hives(Coweight{1, 0}, Coweight{1, 0}, Coweight{2, 0});
  REQUIRE(hs.size() == 1);
  BZDatum m = hive_to_bz(hs[0]);
  CHECK(m.value(mask_from_elements({1}, 2)) == 1);
  CHECK(m.value(mask_from_elements({2}, 2)) == 0);
}

TEST_CASE("round trip and validation at n=3") {
  Coweight la{2, 1, 0}, mu{2, 1, 0}, nu{3, 2, 1};
  for (const auto& h : enumerate_hives(la, mu, nu)) {
    BZDatum m = hive_to_bz(h);
    CHECK(check_tropical_plucker(m).empty());
    CHECK(check_edge_inequalities(m).empty());
    CHECK(bz_to_hive(m, nu) == h);
  }
}

TEST_CASE("propagation result is traversal-order independent") {
  // A boundary with several n=4 hives so the word graph actually runs.
  auto hs = enumerate_hives(Coweight{2, 1, 1, 0}, Coweight{2, 1, 0, 0},
                            Coweight{3, 2, 1, 1});
  REQUIRE_FALSE(hs.empty());
  for (const auto& h : hs) {
    BZDatum base = hive_to_bz(h);
    for (std::uint64_t seed : {1ull, 7ull, 20260815ull})
      CHECK(hive_to_bz(h, seed) == base);
  }
}

TEST_CASE("min formula frozen examples") {
  BZDatum m = make_bz(2, {{{1}, 1}, {{2}, 0}, {{1, 2}, 1}});
  Coweight nu{2, 0};
  CHECK(min_formula(m, nu, 1, 1, 0) == 1);
  CHECK(min_formula(m, nu, 2, 0, 0) == m.value(full_mask(2)));
  CHECK(min_formula(m, nu, 0, 2, 0) == nu.sum());
}

TEST_CASE("min formula reproduces every hive value") {
  Coweight la{2, 1, 0}, mu{1, 1, 0}, nu{3, 1, 1};
  for (const auto& m : enumerate_mv(la, mu, nu)) {
    Hive f = bz_to_hive(m, nu);
    const auto& g = HiveGrid::get(3);
    for (const auto& p : g.points)
      CHECK(min_formula(m, nu, p.i, p.j, p.k) == f.at(p.i, p.j));
  }
}

TEST_CASE("bijection reports") {
  PhiReport r = verify_phi_bijection(Coweight{2, 1, 0}, Coweight{2, 1, 0},
                                     Coweight{3, 2, 1});
  CHECK(r.pass);
  CHECK(r.mv_count == 2);
  CHECK(r.hive_count == 2);
  CHECK(r.failure.empty());

  PhiReport v = verify_phi_bijection(Coweight{1, 0}, Coweight{1, 0}, Coweight{5, 0});
  CHECK(v.pass);
  CHECK(v.mv_count == 0);
}
