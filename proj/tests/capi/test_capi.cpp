#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <json.hpp>
#include <string>

#include "hivemv.h"

using nlohmann::json;

namespace {

// Takes ownership of a C buffer and parses it.
json take(char* buf) {
  REQUIRE(buf != nullptr);
  json j = json::parse(std::string(buf));
  hm_free(buf);
  return j;
}

}  // namespace

TEST_CASE("hive enumeration over the C surface") {
  const int64_t la[] = {2, 1, 0};
  const int64_t mu[] = {2, 1, 0};
  const int64_t nu[] = {3, 2, 1};
  char* out = nullptr;
  REQUIRE(hm_hive_enumerate(la, mu, nu, 3, 0, &out) == HM_OK);
  json hives = take(out);
  REQUIRE(hives.is_array());
  CHECK(hives.size() == 2);
  CHECK(hives[0]["n"] == 3);

  // The reversed orientation rejects the forced GL_2 example.
  const int64_t a[] = {1, 0};
  const int64_t b[] = {1, 1};
  char* std_out = nullptr;
  char* rev_out = nullptr;
  REQUIRE(hm_hive_enumerate(a, a, b, 2, 0, &std_out) == HM_OK);
  REQUIRE(hm_hive_enumerate(a, a, b, 2, 1, &rev_out) == HM_OK);
  CHECK(take(std_out).size() == 1);
  CHECK(take(rev_out).empty());
}

TEST_CASE("invalid input surfaces as EINVAL with a message") {
  const int64_t bad[] = {1, 0, 2};
  const int64_t nu[] = {3, 2, 1};
  char* out = nullptr;
  CHECK(hm_hive_enumerate(bad, bad, nu, 3, 0, &out) == HM_EINVAL);
  CHECK(out == nullptr);
  const char* msg = hm_last_error();
  REQUIRE(msg != nullptr);
  CHECK(std::strlen(msg) > 0);
}

TEST_CASE("malformed JSON surfaces as EPARSE") {
  char* out = nullptr;
  CHECK(hm_hive_check("this is not json", 0, &out) == HM_EPARSE);
  CHECK(hm_hive_check("{\"n\": 2}", 0, &out) == HM_EPARSE);
  CHECK(hm_bz_check("[1,2,3]", &out) == HM_EPARSE);
}

TEST_CASE("hive check reports violations") {
  const int64_t la[] = {1, 0};
  const int64_t nu[] = {2, 0};
  char* out = nullptr;
  REQUIRE(hm_hive_enumerate(la, la, nu, 2, 0, &out) == HM_OK);
  json hives = take(out);
  REQUIRE(hives.size() == 1);
  std::string one = hives[0].dump();

  char* rep = nullptr;
  REQUIRE(hm_hive_check(one.c_str(), 0, &rep) == HM_OK);
  CHECK(take(rep).empty());

  json broken = hives[0];
  for (auto& e : broken["values"])
    if (e["i"] == 1 && e["j"] == 1) e["v"] = 9;
  char* rep2 = nullptr;
  REQUIRE(hm_hive_check(broken.dump().c_str(), 0, &rep2) == HM_OK);
  CHECK_FALSE(take(rep2).empty());
}

TEST_CASE("oracles over the C surface") {
  const int64_t la[] = {1, 0};
  const int64_t mu[] = {1, 0};
  const int64_t nu[] = {2, 0};
  int64_t d = -1;
  REQUIRE(hm_lr_coefficient(la, mu, nu, 2, &d) == HM_OK);
  CHECK(d == 1);

  const int64_t chi[] = {-1, -1};
  REQUIRE(hm_triple_invariant_dim(la, mu, chi, 2, &d) == HM_OK);
  CHECK(d == 1);

  const int64_t quad[] = {1, 0, 1, 0, 0, -1, 0, -1};
  REQUIRE(hm_multi_invariant_dim(quad, 4, 2, &d) == HM_OK);
  CHECK(d == 2);
}

TEST_CASE("bz enumeration and checking") {
  const int64_t la[] = {2, 1, 0};
  const int64_t nu[] = {3, 2, 1};
  char* out = nullptr;
  REQUIRE(hm_bz_enumerate(la, la, nu, 3, &out) == HM_OK);
  json data = take(out);
  REQUIRE(data.size() == 2);

  char* rep = nullptr;
  REQUIRE(hm_bz_check(data[0].dump().c_str(), &rep) == HM_OK);
  json r = take(rep);
  CHECK(r["pass"] == true);
  CHECK(r["plucker"].empty());
  CHECK(r["edge"].empty());
  CHECK(r["monotone"].empty());
}

TEST_CASE("phi round trip over the C surface") {
  const int64_t la[] = {2, 1, 0};
  const int64_t nu[] = {3, 2, 1};
  char* data = nullptr;
  REQUIRE(hm_bz_enumerate(la, la, nu, 3, &data) == HM_OK);
  json bz = take(data);

  char* hive = nullptr;
  REQUIRE(hm_phi_forward(bz[0].dump().c_str(), nu, 3, &hive) == HM_OK);
  json h = take(hive);

  char* back = nullptr;
  REQUIRE(hm_phi_inverse(h.dump().c_str(), 0, 0, &back) == HM_OK);
  CHECK(take(back) == bz[0]);

  char* seeded = nullptr;
  REQUIRE(hm_phi_inverse(h.dump().c_str(), 1, 12345, &seeded) == HM_OK);
  CHECK(take(seeded) == bz[0]);

  char* rep = nullptr;
  REQUIRE(hm_phi_verify(la, la, nu, 3, &rep) == HM_OK);
  json r = take(rep);
  CHECK(r["pass"] == true);
  CHECK(r["mv_count"] == 2);
}

TEST_CASE("khive enumeration and association") {
  const int64_t weights[] = {1, 0, 1, 0, 0, -1, 0, -1};
  char* out = nullptr;
  REQUIRE(hm_khive_enumerate(weights, 4, 2, &out) == HM_OK);
  CHECK(take(out).size() == 2);

  const int64_t la[] = {1, 0};
  const int64_t zero[] = {0, 0};
  const int64_t dchi[] = {1, 0};
  char* ps = nullptr;
  char* qs = nullptr;
  REQUIRE(hm_hive_enumerate(la, zero, dchi, 2, 0, &ps) == HM_OK);
  const int64_t mu2[] = {0, -1};
  REQUIRE(hm_hive_enumerate(la, mu2, zero, 2, 0, &qs) == HM_OK);
  json p = take(ps);
  json q = take(qs);
  REQUIRE(p.size() == 1);
  REQUIRE(q.size() == 1);

  char* assoc = nullptr;
  REQUIRE(hm_khive_associate(p[0].dump().c_str(), q[0].dump().c_str(), &assoc) ==
          HM_OK);
  json res = take(assoc);
  CHECK(res.contains("tetrahedron"));
  CHECK(res.contains("r"));
  CHECK(res.contains("s"));
}

TEST_CASE("evaluators over the C surface") {
  const char* diag =
      "{\"n\": 2, \"entries\": [[[[3,1,1]],[]],[[],[[1,1,1]]]]}";
  const int32_t one[] = {1};
  int64_t v = 0;
  REQUIRE(hm_eval_dgamma(diag, one, 1, &v) == HM_OK);
  CHECK(v == 3);

  const char* id2 = "{\"n\": 2, \"entries\": [[[[0,1,1]],[]],[[],[[0,1,1]]]]}";
  std::string triple = std::string("[") + id2 + "," + id2 + "," + id2 + "]";
  const int32_t sizes[] = {1, 1, 0};
  REQUIRE(hm_eval_h(triple.c_str(), sizes, 3, &v) == HM_OK);
  CHECK(v == 0);

  int32_t finite = 0;
  REQUIRE(hm_eval_speyer(id2, id2, id2, 1, 1, 0, &finite, &v) == HM_OK);
  CHECK(finite == 1);
  CHECK(v == 0);

  CHECK(hm_eval_dgamma("{bad", one, 1, &v) == HM_EPARSE);
}

TEST_CASE("random matrices are reproducible") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(hm_random_matrix(3, 555, -1, 2, 9, &a) == HM_OK);
  REQUIRE(hm_random_matrix(3, 555, -1, 2, 9, &b) == HM_OK);
  std::string sa(a), sb(b);
  hm_free(a);
  hm_free(b);
  CHECK(sa == sb);
}

TEST_CASE("sweeps over the C surface") {
  char* rep = nullptr;
  REQUIRE(hm_eval_plucker_sweep(3, 20, 77, &rep) == HM_OK);
  json r = take(rep);
  CHECK(r["matrices"] == 20);
  CHECK(r["total"] == 20);  // one relation instance per 3x3 matrix
  CHECK(r["holding"] == 20);

  char* all = nullptr;
  REQUIRE(hm_sweep_verify_all(2, 1, 20260815, &all) == HM_OK);
  json crits = take(all);
  REQUIRE(crits.size() == 9);
  for (const auto& c : crits) {
    CHECK(c["pass"] == true);
    CHECK_FALSE(c["name"].get<std::string>().empty());
  }
}
