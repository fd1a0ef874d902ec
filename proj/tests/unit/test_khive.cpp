#include <doctest.h>

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khive.hpp"
#include "lr.hpp"

using namespace hivemv;

namespace {

KHive constant_khive(int n, int k) {
  KHive f;
  f.n = n;
  f.k = k;
  f.values.assign(static_cast<size_t>(KHiveGrid::get(n, k).size()), 0);
  return f;
}

}  // namespace

TEST_CASE("grid anchors and octahedra") {
  const auto& g = KHiveGrid::get(2, 4);
  CHECK(g.size() == 10);
  std::vector<int> anchor = {0, 0, 0, 2};
  CHECK(g.index(anchor) == 0);
  CHECK(g.octahedra.size() == 1);
  CHECK_THROWS_AS(g.index(std::vector<int>{3, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("octahedron relation on flat, linear and bumped labellings") {
  CHECK(check_octahedron(constant_khive(2, 4)).empty());
  CHECK(check_octahedron(constant_khive(3, 4)).empty());

  // Linear labellings meet every relation with equality.
  const auto& g = KHiveGrid::get(3, 4);
  KHive lin = constant_khive(3, 4);
  std::vector<Int> c = {5, -2, 3, 1};
  for (int idx = 0; idx < g.size(); ++idx) {
    Int v = 0;
    for (int a = 0; a < 4; ++a)
      v += c[static_cast<size_t>(a)] * g.points[static_cast<size_t>(idx)][static_cast<size_t>(a)];
    lin.values[static_cast<size_t>(idx)] = v;
  }
  CHECK(check_octahedron(lin).empty());

  KHive bump = constant_khive(2, 4);
  bump.values[static_cast<size_t>(KHiveGrid::get(2, 4).index({1, 1, 0, 0}))] = -1;
  auto viols = check_octahedron(bump);
  REQUIRE(viols.size() == 1);
  CHECK(viols[0].lhs != viols[0].rhs);
}

TEST_CASE("a three-axis tetrahedron is its own face") {
  Coweight la{1, 0}, mu{1, 0}, nu{2, 0};
  auto ks = enumerate_khives({la, mu, dual(nu)});
  REQUIRE(ks.size() == 1);
  auto hs = enumerate_hives(la, mu, nu);
  REQUIRE(hs.size() == 1);
  CHECK(face(ks[0], 1, 2, 3) == hs[0]);
  auto b = boundary_k(ks[0]);
  CHECK(b[0] == la);
  CHECK(b[1] == mu);
  CHECK(b[2] == dual(nu));
}

TEST_CASE("four-factor enumeration against frozen counts") {
  std::vector<Coweight> w = {Coweight{1, 0}, Coweight{1, 0}, Coweight{0, -1},
                             Coweight{0, -1}};
  auto ks = enumerate_khives(w);
  CHECK(ks.size() == 2);
  for (const auto& f : ks) {
    CHECK(is_valid_khive(f));
    CHECK(boundary_k(f) == w);
  }

  auto zero = enumerate_khives(
      {Coweight::zero(2), Coweight::zero(2), Coweight::zero(2), Coweight::zero(2)});
  REQUIRE(zero.size() == 1);
  for (Int v : zero[0].values) CHECK(v == 0);

  CHECK(enumerate_khives({Coweight{1, 0}, Coweight{1, 0}, Coweight{1, 0},
                          Coweight{1, 0}})
            .empty());
}

TEST_CASE("every face of an enumerated tetrahedron is a hive") {
  auto ks = enumerate_khives({Coweight{1, 0}, Coweight{1, 0}, Coweight{0, -1},
                              Coweight{0, -1}});
  REQUIRE(ks.size() == 2);
  for (const auto& f : ks) {
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        for (int c = b + 1; c <= 4; ++c)
          CHECK(check_hive(face(f, a, b, c)).empty());
  }
}

TEST_CASE("completion reconstructs the tetrahedron from two faces") {
  for (const auto& f : enumerate_khives({Coweight{1, 0}, Coweight{1, 0},
                                         Coweight{0, -1}, Coweight{0, -1}})) {
    Hive p = face(f, 1, 3, 4);
    Hive q = face_ordered(f, {2, 3, 1});
    CHECK(complete_tetrahedron(p, q) == f);
  }
}

TEST_CASE("completion rejects a shared-edge mismatch") {
  auto ps = enumerate_hives(Coweight{1, 0}, Coweight{1, 1}, Coweight{2, 1});
  auto qs = enumerate_hives(Coweight{1, 0}, Coweight{0, 0}, Coweight{1, 0});
  REQUIRE_FALSE(ps.empty());
  REQUIRE_FALSE(qs.empty());
  // Handshake requires mu of the first face to equal nu of the second;
  // (1,1) vs (1,0) differ.
  CHECK_THROWS_AS(complete_tetrahedron(ps[0], qs[0]), std::invalid_argument);
}

TEST_CASE("zero boundaries associate to constant faces") {
  Hive z;
  z.n = 2;
  z.values.assign(6, 0);
  auto [r, s] = associator(z, z);
  CHECK(r == z);
  CHECK(s == z);
}

TEST_CASE("associator lands in the right union and is injective") {
  std::vector<Coweight> w = {Coweight{1, 0}, Coweight{1, 0}, Coweight{0, -1},
                             Coweight{0, -1}};
  int n = 2;
  std::set<std::pair<Hive, Hive>> images;
  int pairs = 0;
  for (const auto& d : dominant_range(n, -1, 1, 0)) {
    auto qs = enumerate_hives(w[1], w[2], d);
    auto ps = enumerate_hives(w[0], d, dual(w[3]));
    for (const auto& p : ps)
      for (const auto& q : qs) {
        ++pairs;
        auto [r, s] = associator(p, q);
        auto rb = hive_boundary(r);
        auto sb = hive_boundary(s);
        CHECK(rb.la == w[0]);
        CHECK(rb.mu == w[1]);
        CHECK(sb.la == rb.nu);
        CHECK(sb.mu == w[2]);
        CHECK(sb.nu == dual(w[3]));
        images.insert({r, s});
      }
  }
  CHECK(pairs == 2);
  CHECK(images.size() == 2);
}

// Feeding the rotated outputs back recovers the inputs with the face roles
// swapped; this is the bijectivity of the correspondence stated pointwise.
TEST_CASE("double application returns the original pair") {
  std::vector<std::vector<Coweight>> systems = {
      {{1, 0}, {1, 0}, {0, -1}, {0, -1}},
      {{2, 1}, {1, 0}, {0, -1}, {-1, -2}},
      {{1, 0, 0}, {1, 0, 0}, {0, 0, -1}, {0, 0, -1}}};
  for (const auto& w : systems) {
    int n = w[0].size();
    Int lo = w[1][n - 1] + w[2][n - 1];
    Int hi = w[1][0] + w[2][0];
    for (const auto& d : dominant_range(n, lo, hi, w[1].sum() + w[2].sum())) {
      auto qs = enumerate_hives(w[1], w[2], d);
      if (qs.empty()) continue;
      auto ps = enumerate_hives(w[0], d, dual(w[3]));
      for (const auto& p : ps)
        for (const auto& q : qs) {
          auto [r, s] = associator(p, q);
          auto [x, y] = associator(rotate_hive(r), rotate_hive(s));
          CHECK(x == q);
          CHECK(y == rotate_hive(p));
        }
    }
  }
}
