#include "hivemv.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "affgr.hpp"
#include "bz.hpp"
#include "hive.hpp"
#include "json_io.hpp"
#include "khive.hpp"
#include "lr.hpp"
#include "phi.hpp"
#include "sweep.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_error;

// Schema problems must surface as HM_EPARSE even though the readers throw
// std::invalid_argument, which is otherwise the HM_EINVAL signal.
struct schema_error {
  std::string what;
};

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hm_status fail(hm_status code, const std::string& what) {
  g_error = what;
  return code;
}

template <typename F>
hm_status guarded(F&& f) {
  try {
    f();
    return HM_OK;
  } catch (const schema_error& e) {
    return fail(HM_EPARSE, e.what);
  } catch (const json::exception& e) {
    return fail(HM_EPARSE, e.what());
  } catch (const hivemv::tropical_plucker_inconsistency& e) {
    return fail(HM_EVERIFY, e.what());
  } catch (const hivemv::completion_error& e) {
    return fail(HM_EVERIFY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HM_EINVAL, e.what());
  } catch (const std::exception& e) {
    return fail(HM_EINTERNAL, e.what());
  }
}

hivemv::Coweight read_weight(const int64_t* w, int32_t n) {
  if (!w || n <= 0) throw std::invalid_argument("missing coweight");
  return hivemv::Coweight(std::vector<hivemv::Int>(w, w + n));
}

void emit(char** out, const json& j) {
  if (!out) throw std::invalid_argument("missing output pointer");
  char* s = dup_string(j.dump());
  if (!s) throw std::runtime_error("out of memory");
  *out = s;
}

void emit_int(int64_t* out, hivemv::Int v) {
  if (!out) throw std::invalid_argument("missing output pointer");
  *out = v;
}

json parse_text(const char* s) {
  if (!s) throw std::invalid_argument("missing JSON input");
  return json::parse(s);
}

template <typename Fn>
auto read_schema(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw schema_error{e.what()};
  }
}

json perm_json(const hivemv::Perm& w) {
  json a = json::array();
  for (int i = 1; i <= w.n(); ++i) a.push_back(w(i));
  return a;
}

json subset_json(hivemv::SubsetMask m) {
  json a = json::array();
  for (int e : hivemv::subset_elements(m)) a.push_back(e);
  return a;
}

}  // namespace

extern "C" {

const char* hm_last_error(void) { return g_error.c_str(); }

void hm_free(char* buf) { std::free(buf); }

hm_status hm_hive_enumerate(const int64_t* la, const int64_t* mu, const int64_t* nu,
                            int32_t n, int32_t reversed, char** out) {
  return guarded([&] {
    auto orient = reversed ? hivemv::RhombusOrientation::Reversed
                           : hivemv::RhombusOrientation::Standard;
    json a = json::array();
    for (const hivemv::Hive& h : hivemv::enumerate_hives(
             read_weight(la, n), read_weight(mu, n), read_weight(nu, n), orient))
      a.push_back(hivemv::hive_to_json(h));
    emit(out, a);
  });
}

hm_status hm_hive_check(const char* hive_json, int32_t reversed, char** out) {
  return guarded([&] {
    hivemv::Hive h = read_schema([&] { return hivemv::hive_from_json(parse_text(hive_json)); });
    auto orient = reversed ? hivemv::RhombusOrientation::Reversed
                           : hivemv::RhombusOrientation::Standard;
    json a = json::array();
    for (const hivemv::RhombusViolation& v : hivemv::check_hive(h, orient))
      a.push_back({{"type", v.type},
                   {"i", v.base.i},
                   {"j", v.base.j},
                   {"k", v.base.k},
                   {"lhs", v.lhs},
                   {"rhs", v.rhs}});
    emit(out, a);
  });
}

hm_status hm_bz_enumerate(const int64_t* la, const int64_t* mu, const int64_t* nu,
                          int32_t n, char** out) {
  return guarded([&] {
    json a = json::array();
    for (const hivemv::BZDatum& m :
         hivemv::enumerate_mv(read_weight(la, n), read_weight(mu, n), read_weight(nu, n)))
      a.push_back(hivemv::bz_to_json(m));
    emit(out, a);
  });
}

hm_status hm_bz_check(const char* bz_json, char** out) {
  return guarded([&] {
    hivemv::BZDatum m = read_schema([&] { return hivemv::bz_from_json(parse_text(bz_json)); });
    json plucker = json::array();
    for (const auto& v : hivemv::check_tropical_plucker(m))
      plucker.push_back(
          {{"w", perm_json(v.w)}, {"i", v.i}, {"j", v.j}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    json edge = json::array();
    for (const auto& v : hivemv::check_edge_inequalities(m))
      edge.push_back({{"w", perm_json(v.w)}, {"i", v.i}, {"amount", v.amount}});
    json monotone = json::array();
    for (const auto& v : hivemv::check_monotone(m))
      monotone.push_back({{"gamma", subset_json(v.gamma)}, {"delta", subset_json(v.delta)}});
    bool pass = plucker.empty() && edge.empty() && monotone.empty();
    emit(out, json{{"pass", pass},
                   {"plucker", plucker},
                   {"edge", edge},
                   {"monotone", monotone}});
  });
}

hm_status hm_khive_enumerate(const int64_t* weights, int32_t k, int32_t n, char** out) {
  return guarded([&] {
    if (!weights || k < 2) throw std::invalid_argument("need at least two weights");
    std::vector<hivemv::Coweight> ws;
    for (int32_t m = 0; m < k; ++m) ws.push_back(read_weight(weights + m * n, n));
    json a = json::array();
    for (const hivemv::KHive& f : hivemv::enumerate_khives(ws))
      a.push_back(hivemv::khive_to_json(f));
    emit(out, a);
  });
}

hm_status hm_khive_associate(const char* p_hive_json, const char* q_hive_json, char** out) {
  return guarded([&] {
    hivemv::Hive p = read_schema([&] { return hivemv::hive_from_json(parse_text(p_hive_json)); });
    hivemv::Hive q = read_schema([&] { return hivemv::hive_from_json(parse_text(q_hive_json)); });
    hivemv::KHive f = hivemv::complete_tetrahedron(p, q);
    auto [r, s] = hivemv::associator(p, q);
    emit(out, json{{"tetrahedron", hivemv::khive_to_json(f)},
                   {"r", hivemv::hive_to_json(r)},
                   {"s", hivemv::hive_to_json(s)}});
  });
}

hm_status hm_lr_coefficient(const int64_t* la, const int64_t* mu, const int64_t* nu,
                            int32_t n, int64_t* out) {
  return guarded([&] {
    emit_int(out, hivemv::lr_coefficient(read_weight(la, n), read_weight(mu, n),
                                         read_weight(nu, n)));
  });
}

hm_status hm_triple_invariant_dim(const int64_t* la, const int64_t* mu, const int64_t* chi,
                                  int32_t n, int64_t* out) {
  return guarded([&] {
    emit_int(out, hivemv::triple_invariant_dim(read_weight(la, n), read_weight(mu, n),
                                               read_weight(chi, n)));
  });
}

hm_status hm_multi_invariant_dim(const int64_t* weights, int32_t k, int32_t n, int64_t* out) {
  return guarded([&] {
    if (!weights || k < 2) throw std::invalid_argument("need at least two weights");
    std::vector<hivemv::Coweight> ws;
    for (int32_t m = 0; m < k; ++m) ws.push_back(read_weight(weights + m * n, n));
    emit_int(out, hivemv::multi_invariant_dim(ws));
  });
}

hm_status hm_phi_forward(const char* bz_json, const int64_t* nu, int32_t n, char** out) {
  return guarded([&] {
    hivemv::BZDatum m = read_schema([&] { return hivemv::bz_from_json(parse_text(bz_json)); });
    emit(out, hivemv::hive_to_json(hivemv::bz_to_hive(m, read_weight(nu, n))));
  });
}

hm_status hm_phi_inverse(const char* hive_json, int32_t has_seed, uint64_t seed, char** out) {
  return guarded([&] {
    hivemv::Hive h = read_schema([&] { return hivemv::hive_from_json(parse_text(hive_json)); });
    std::optional<std::uint64_t> s;
    if (has_seed) s = seed;
    emit(out, hivemv::bz_to_json(hivemv::hive_to_bz(h, s)));
  });
}

hm_status hm_phi_verify(const int64_t* la, const int64_t* mu, const int64_t* nu,
                        int32_t n, char** out) {
  return guarded([&] {
    hivemv::PhiReport r = hivemv::verify_phi_bijection(read_weight(la, n), read_weight(mu, n),
                                                       read_weight(nu, n));
    emit(out, json{{"pass", r.pass},
                   {"mv_count", r.mv_count},
                   {"hive_count", r.hive_count},
                   {"failure", r.failure}});
  });
}

hm_status hm_eval_dgamma(const char* matrix_json, const int32_t* subset,
                         int32_t subset_len, int64_t* out) {
  return guarded([&] {
    hivemv::LaurentMatrix g =
        read_schema([&] { return hivemv::matrix_from_json(parse_text(matrix_json)); });
    if (subset_len < 0 || (subset_len > 0 && !subset))
      throw std::invalid_argument("missing subset");
    std::vector<int> elems(subset, subset + subset_len);
    emit_int(out, hivemv::d_gamma(g, hivemv::mask_from_elements(elems, g.n)));
  });
}

hm_status hm_eval_h(const char* matrices_json, const int32_t* sizes, int32_t k,
                    int64_t* out) {
  return guarded([&] {
    json arr = parse_text(matrices_json);
    if (!arr.is_array()) throw schema_error{"expected a JSON array of matrices"};
    std::vector<hivemv::LaurentMatrix> gs;
    for (const json& j : arr)
      gs.push_back(read_schema([&] { return hivemv::matrix_from_json(j); }));
    if (!sizes || k != static_cast<int32_t>(gs.size()))
      throw std::invalid_argument("size list does not match the matrix count");
    emit_int(out, hivemv::h_function(gs, std::vector<int>(sizes, sizes + k)));
  });
}

hm_status hm_eval_speyer(const char* g1_json, const char* g2_json, const char* g3_json,
                         int32_t i, int32_t j, int32_t k, int32_t* finite, int64_t* out) {
  return guarded([&] {
    auto read = [&](const char* s) {
      return read_schema([&] { return hivemv::matrix_from_json(parse_text(s)); });
    };
    if (!finite) throw std::invalid_argument("missing output pointer");
    std::optional<hivemv::Int> v = hivemv::speyer_s(read(g1_json), read(g2_json),
                                                    read(g3_json), i, j, k);
    *finite = v.has_value() ? 1 : 0;
    if (v) emit_int(out, *v);
  });
}

hm_status hm_random_matrix(int32_t n, uint64_t seed, int64_t exp_lo, int64_t exp_hi,
                           int64_t coeff_bound, char** out) {
  return guarded([&] {
    std::mt19937_64 rng(seed);
    emit(out, hivemv::matrix_to_json(
                  hivemv::random_laurent_matrix(n, rng, exp_lo, exp_hi, coeff_bound)));
  });
}

hm_status hm_eval_plucker_sweep(int32_t n, int32_t count, uint64_t seed, char** out) {
  return guarded([&] {
    if (count < 0) throw std::invalid_argument("negative matrix count");
    std::mt19937_64 rng(seed);
    long long total = 0, holding = 0;
    json failures = json::array();
    for (int32_t s = 0; s < count; ++s) {
      hivemv::LaurentMatrix g = hivemv::random_laurent_matrix(n, rng);
      hivemv::GenericPluckerReport r = hivemv::check_generic_plucker(g);
      total += r.total;
      holding += r.holding;
      if (r.holding < r.total)
        failures.push_back({{"index", s}, {"matrix", hivemv::matrix_to_json(g)}});
    }
    double rate = total == 0 ? 1.0 : static_cast<double>(holding) / static_cast<double>(total);
    emit(out, json{{"matrices", count},
                   {"total", total},
                   {"holding", holding},
                   {"rate", rate},
                   {"seed", seed},
                   {"failures", failures}});
  });
}

hm_status hm_sweep_verify_all(int32_t n_max, int64_t entry_bound, uint64_t seed, char** out) {
  return guarded([&] {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    if (entry_bound < 0) throw std::invalid_argument("entry bound must be nonnegative");
    hivemv::SweepOptions opts;
    opts.n_max = n_max;
    opts.entry_bound = entry_bound;
    opts.seed = seed;
    json a = json::array();
    for (const hivemv::CriterionResult& r : hivemv::run_acceptance(opts))
      a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    emit(out, a);
  });
}

}  // extern "C"
