#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lr.hpp"

using namespace hivemv;

TEST_CASE("skew tableau counts") {
  CHECK(lr_coefficient(Coweight{1}, Coweight{1}, Coweight{2}) == 1);
  CHECK(lr_coefficient(Coweight{2, 1}, Coweight{2, 1}, Coweight{3, 2, 1}) == 2);
  CHECK(lr_coefficient(Coweight{1}, Coweight{1}, Coweight{3}) == 0);
  CHECK(lr_coefficient(Coweight{2}, Coweight{1}, Coweight{1, 1, 1}) == 0);  // la not inside nu
  CHECK(lr_coefficient(Coweight{0}, Coweight{2, 1}, Coweight{2, 1}) == 1);
}

TEST_CASE("lr is symmetric in the first two arguments") {
  std::vector<Coweight> parts = {{0}, {1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2, 1}};
  for (const auto& la : parts)
    for (const auto& mu : parts)
      for (const auto& nu : parts)
        CHECK(lr_coefficient(la, mu, nu) == lr_coefficient(mu, la, nu));
}

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(Coweight{1, 0}) == 2);
  CHECK(weyl_dim(Coweight{1, 1}) == 1);
  CHECK(weyl_dim(Coweight{2, 0}) == 3);
  CHECK(weyl_dim(Coweight{1, 0, 0}) == 3);
  CHECK(weyl_dim(Coweight{1, 1, 0}) == 3);
  CHECK(weyl_dim(Coweight{2, 1, 0}) == 8);
  CHECK(weyl_dim(Coweight{0, -1}) == 2);  // dual of the vector rep
}

// dim(V_la (x) V_mu) must be recovered by the decomposition the LR numbers
// describe; ties the tableau rule to the dimension formula.
TEST_CASE("tensor dimension identity") {
  std::vector<std::pair<Coweight, Coweight>> pairs = {
      {Coweight{1, 0}, Coweight{1, 0}},
      {Coweight{2, 1}, Coweight{1, 0}},
      {Coweight{1, 0, 0}, Coweight{1, 1, 0}},
      {Coweight{2, 1, 0}, Coweight{2, 1, 0}}};
  for (const auto& [la, mu] : pairs) {
    int n = la.size();
    Int want = weyl_dim(la) * weyl_dim(mu);
    Int got = 0;
    for (const auto& nu :
         dominant_range(n, la[n - 1] + mu[n - 1], la[0] + mu[0], la.sum() + mu.sum()))
      got += triple_invariant_dim(la, mu, dual(nu)) * weyl_dim(nu);
    CHECK(got == want);
  }
}

TEST_CASE("triple invariant dimension") {
  CHECK(triple_invariant_dim(Coweight{1, 0}, Coweight{1, 0}, Coweight{-1, -1}) == 1);
  CHECK(triple_invariant_dim(Coweight{2, 1, 0}, Coweight{2, 1, 0},
                             dual(Coweight{3, 2, 1})) == 2);
  CHECK(triple_invariant_dim(Coweight{1, 0}, Coweight{1, 0}, Coweight{0, 0}) == 0);
  CHECK_THROWS_AS(triple_invariant_dim(Coweight{1, 0}, Coweight{1}, Coweight{0, 0}),
                  std::invalid_argument);
}

TEST_CASE("triple invariant dimension symmetry and determinant shifts") {
  std::vector<Coweight> doms;
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= a; ++b) doms.push_back(Coweight{a, b});
  for (const auto& la : doms)
    for (const auto& mu : doms)
      for (const auto& chi : doms) {
        Int d = triple_invariant_dim(la, mu, chi);
        CHECK(d == triple_invariant_dim(mu, la, chi));
        CHECK(d == triple_invariant_dim(chi, mu, la));
        CHECK(d == triple_invariant_dim(la, chi, mu));
        Coweight one{1, 1};
        CHECK(d == triple_invariant_dim(la + one, mu + one,
                                        chi - one - one));
      }
}

TEST_CASE("multi-factor invariant dimension") {
  CHECK(multi_invariant_dim({Coweight{1, 0}, Coweight{1, 0}, Coweight{0, -1},
                             Coweight{0, -1}}) == 2);
  CHECK(multi_invariant_dim({Coweight{1, 0}, Coweight{1, 0}, Coweight{1, 0},
                             Coweight{1, 0}}) == 0);
  for (const auto& la :
       {Coweight{1, 0}, Coweight{2, 1}, Coweight{2, 1, 0}, Coweight{3, 1, -1}})
    CHECK(multi_invariant_dim({la, dual(la)}) == 1);
  CHECK_THROWS_AS(multi_invariant_dim({Coweight{1, 0}, Coweight{1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("multi invariant dimension is cyclically invariant") {
  std::vector<std::vector<Coweight>> quads = {
      {{1, 0}, {1, 0}, {0, -1}, {0, -1}},
      {{2, 0}, {1, 1}, {0, -1}, {-1, -2}},
      {{1, 0, 0}, {1, 0, 0}, {0, 0, -1}, {0, 0, -1}},
      {{2, 1, 0}, {1, 0, 0}, {0, -1, -1}, {0, -1, -2}}};
  for (auto q : quads) {
    Int d = multi_invariant_dim(q);
    std::rotate(q.begin(), q.begin() + 1, q.end());
    CHECK(multi_invariant_dim(q) == d);
    std::rotate(q.begin(), q.begin() + 1, q.end());
    CHECK(multi_invariant_dim(q) == d);
  }
}

TEST_CASE("dominant range enumerates what it says") {
  auto r = dominant_range(2, 0, 2, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Coweight{1, 1});
  CHECK(r[1] == Coweight{2, 0});
  for (const auto& w : dominant_range(3, -1, 2, 1)) {
    CHECK(w.is_dominant());
    CHECK(w.sum() == 1);
    CHECK(w[0] <= 2);
    CHECK(w[2] >= -1);
  }
  CHECK(dominant_range(2, 0, 1, 5).empty());
}
