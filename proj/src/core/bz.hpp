#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coweight.hpp"
#include "perm.hpp"

namespace hivemv {

// Integer table over all subsets of {1..n}, stored in canonical subset
// order.  M_emptyset is always 0 for data produced here; the full-set value
// plays the role of the fixed total.
struct BZDatum {
  int n = 0;
  std::vector<Int> m;  // indexed by SubsetTable::get(n) order

  Int value(SubsetMask s) const { return m[static_cast<size_t>(SubsetTable::get(n).index(s))]; }
  void set(SubsetMask s, Int v) { m[static_cast<size_t>(SubsetTable::get(n).index(s))] = v; }

  bool operator==(const BZDatum&) const = default;
  bool operator<(const BZDatum& o) const { return m < o.m; }
};

struct TropicalPluckerViolation {
  Perm w;
  int i = 0, j = 0;
  Int lhs = 0, rhs = 0;  // rhs = min of the two crossing terms
};

// Checks M_{ws_i.L_i} + M_{ws_j.L_j} = min(M_{w.L_i} + M_{ws_is_j.L_j},
// M_{ws_js_i.L_i} + M_{w.L_j}) at every w and adjacent pair i, j = i+1 with
// ws_i > w and ws_j > w.
std::vector<TropicalPluckerViolation> check_tropical_plucker(const BZDatum& M);

// Number of (w, i, i+1) instances the check above covers.
int tropical_plucker_instances(int n);

struct EdgeInequalityViolation {
  Perm w;
  int i = 0;
  Int amount = 0;  // positive excess of the (nonpositive) edge expression
};

// Checks M_{ws_i.L_i} + M_{w.L_i} - M_{w.L_{i-1}} - M_{w.L_{i+1}} <= 0 at
// every (w, i), with L_0 read as the empty set and L_n as the full set.
std::vector<EdgeInequalityViolation> check_edge_inequalities(const BZDatum& M);

// Vertex family of the polytope: (mu_w)_{w(i)} = M_{w.L_i} - M_{w.L_{i-1}}.
struct GGMSDatum {
  int n = 0;
  std::vector<Perm> perms;    // all of S_n, lexicographic
  std::vector<Coweight> mu;   // parallel to perms
};

GGMSDatum vertices(const BZDatum& M);

// (mu_e, mu_{w_0}).
std::pair<Coweight, Coweight> bz_coweight(const BZDatum& M);

// Without shift: every vertex lies in conv(W.la).  With shift nu: every
// nu - mu_w lies in conv(W.la).
bool polytope_contained(const BZDatum& M, const Coweight& la,
                        const std::optional<Coweight>& shift = std::nullopt);

struct MonotonicityViolation {
  SubsetMask gamma = 0, delta = 0;
};

// gamma >= delta must force M_gamma >= M_delta.
std::vector<MonotonicityViolation> check_monotone(const BZDatum& M);

// All BZ data of the polytopes with highest vertex la and lowest vertex
// nu - mu, lexicographically sorted on the value table.  Computed from the
// hive enumeration through the hive<->BZ bijection; every datum is
// re-verified against the defining conditions.
std::vector<BZDatum> enumerate_mv(const Coweight& la, const Coweight& mu,
                                  const Coweight& nu);

// Independent search over all bounded tables, n <= 3 only.  Values range
// over [-B, B] with B the total absolute boundary mass; the search asserts
// no returned value sits on the bound.
std::vector<BZDatum> enumerate_mv_bruteforce(const Coweight& la, const Coweight& mu,
                                             const Coweight& nu);

}  // namespace hivemv
