#include "bz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "hive.hpp"
#include "phi.hpp"

namespace hivemv {

std::vector<TropicalPluckerViolation> check_tropical_plucker(const BZDatum& M) {
  int n = M.n;
  if (M.m.size() != (size_t{1} << n))
    throw std::invalid_argument("tropical plucker check: incomplete table");
  std::vector<TropicalPluckerViolation> out;
  for (const Perm& w : all_perms(n)) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      int j = i + 1;
      if (w(i) > w(i + 1) || w(j) > w(j + 1)) continue;  // need ws_i > w, ws_j > w
      Perm wsi = w.times_simple(i), wsj = w.times_simple(j);
      Int lhs = M.value(wsi.prefix_image(i)) + M.value(wsj.prefix_image(j));
      Int c1 = M.value(w.prefix_image(i)) + M.value(wsi.times_simple(j).prefix_image(j));
      Int c2 = M.value(wsj.times_simple(i).prefix_image(i)) + M.value(w.prefix_image(j));
      Int rhs = std::min(c1, c2);
      if (lhs != rhs) out.push_back({w, i, j, lhs, rhs});
    }
  }
  return out;
}

int tropical_plucker_instances(int n) {
  int count = 0;
  for (const Perm& w : all_perms(n))
    for (int i = 1; i + 1 <= n - 1; ++i)
      if (w(i) < w(i + 1) && w(i + 1) < w(i + 2)) ++count;
  return count;
}

std::vector<EdgeInequalityViolation> check_edge_inequalities(const BZDatum& M) {
  int n = M.n;
  if (M.m.size() != (size_t{1} << n))
    throw std::invalid_argument("edge inequality check: incomplete table");
  std::vector<EdgeInequalityViolation> out;
  for (const Perm& w : all_perms(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      Int expr = M.value(w.times_simple(i).prefix_image(i)) + M.value(w.prefix_image(i)) -
                 M.value(w.prefix_image(i - 1)) - M.value(w.prefix_image(i + 1));
      if (expr > 0) out.push_back({w, i, expr});
    }
  }
  return out;
}

GGMSDatum vertices(const BZDatum& M) {
  GGMSDatum g;
  g.n = M.n;
  g.perms = all_perms(M.n);
  g.mu.reserve(g.perms.size());
  for (const Perm& w : g.perms) {
    Coweight v = Coweight::zero(M.n);
    for (int i = 1; i <= M.n; ++i)
      v[w(i) - 1] = M.value(w.prefix_image(i)) - M.value(w.prefix_image(i - 1));
    g.mu.push_back(std::move(v));
  }
  return g;
}

std::pair<Coweight, Coweight> bz_coweight(const BZDatum& M) {
  Perm e = Perm::identity(M.n), w0 = Perm::longest(M.n);
  auto vertex = [&](const Perm& w) {
    Coweight v = Coweight::zero(M.n);
    for (int i = 1; i <= M.n; ++i)
      v[w(i) - 1] = M.value(w.prefix_image(i)) - M.value(w.prefix_image(i - 1));
    return v;
  };
  return {vertex(e), vertex(w0)};
}

bool polytope_contained(const BZDatum& M, const Coweight& la,
                        const std::optional<Coweight>& shift) {
  GGMSDatum g = vertices(M);
  for (const Coweight& v : g.mu) {
    Coweight probe = shift ? *shift - v : v;
    if (!in_weyl_polytope(probe, la)) return false;
  }
  return true;
}

std::vector<MonotonicityViolation> check_monotone(const BZDatum& M) {
  const SubsetTable& tbl = SubsetTable::get(M.n);
  std::vector<MonotonicityViolation> out;
  for (SubsetMask g : tbl.masks) {
    int sz = mask_size(g);
    if (sz == 0 || sz == M.n) continue;
    for (SubsetMask d : tbl.masks) {
      if (mask_size(d) != sz || d == g) continue;
      if (subset_ge(g, d) && M.value(g) < M.value(d)) out.push_back({g, d});
    }
  }
  return out;
}

std::vector<BZDatum> enumerate_mv(const Coweight& la, const Coweight& mu,
                                  const Coweight& nu) {
  int n = la.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("enumerate_mv: ranks differ");
  std::vector<BZDatum> out;
  for (const Hive& h : enumerate_hives(la, mu, nu)) {
    BZDatum M = hive_to_bz(h);
    // Every propagated datum must satisfy the polytope axioms; a failure
    // here is a bug, not a data condition.
    if (!check_tropical_plucker(M).empty())
      throw std::logic_error("enumerate_mv: propagated datum fails tropical Plucker");
    if (!check_edge_inequalities(M).empty())
      throw std::logic_error("enumerate_mv: propagated datum fails edge inequalities");
    auto [lo, hi] = bz_coweight(M);
    if (!(hi == la) || !(lo == nu - mu))
      throw std::logic_error("enumerate_mv: wrong coweight pair");
    if (!polytope_contained(M, la) || !polytope_contained(M, mu, nu))
      throw std::logic_error("enumerate_mv: containment fails");
    out.push_back(std::move(M));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BZDatum> enumerate_mv_bruteforce(const Coweight& la, const Coweight& mu,
                                             const Coweight& nu) {
  int n = la.size();
  if (n > 3) throw std::invalid_argument("enumerate_mv_bruteforce: n <= 3 only");
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("enumerate_mv_bruteforce: ranks differ");
  if (!la.is_dominant() || !mu.is_dominant() || !nu.is_dominant())
    throw std::invalid_argument("enumerate_mv_bruteforce: not dominant");
  std::vector<BZDatum> out;
  if (la.sum() + mu.sum() != nu.sum()) return out;

  const SubsetTable& tbl = SubsetTable::get(n);
  std::vector<std::optional<Int>> fixed(tbl.masks.size());
  auto pin = [&](SubsetMask s, Int v) -> bool {
    auto& slot = fixed[static_cast<size_t>(tbl.index(s))];
    if (slot && *slot != v) return false;
    slot = v;
    return true;
  };

  bool consistent = pin(0, 0);
  for (int i = 1; i <= n && consistent; ++i) {
    // Highest-vertex condition along suffix intervals, lowest along prefixes.
    consistent = pin(interval_mask(n - i + 1, n), subset_sum(la, interval_mask(n - i + 1, n))) &&
                 pin(interval_mask(1, i), subset_sum(nu - mu, interval_mask(1, i)));
  }
  if (!consistent) return out;

  Int bound = 0;
  for (int r = 0; r < n; ++r)
    bound += std::abs(la[r]) + std::abs(mu[r]) + std::abs(nu[r]);

  std::vector<int> free_slots;
  for (size_t s = 0; s < tbl.masks.size(); ++s)
    if (!fixed[s]) free_slots.push_back(static_cast<int>(s));

  BZDatum M;
  M.n = n;
  M.m.assign(tbl.masks.size(), 0);
  for (size_t s = 0; s < tbl.masks.size(); ++s)
    if (fixed[s]) M.m[s] = *fixed[s];

  auto admissible = [&](const BZDatum& cand) {
    return check_tropical_plucker(cand).empty() && check_edge_inequalities(cand).empty() &&
           polytope_contained(cand, la) && polytope_contained(cand, mu, nu);
  };

  // Depth-first scan of the free slots.
  std::function<void(size_t)> scan = [&](size_t t) {
    if (t == free_slots.size()) {
      if (admissible(M)) out.push_back(M);
      return;
    }
    size_t slot = static_cast<size_t>(free_slots[t]);
    for (Int v = -bound; v <= bound; ++v) {
      M.m[slot] = v;
      scan(t + 1);
    }
  };
  scan(0);

  if (bound > 0)
    for (const BZDatum& d : out)
      for (int s : free_slots)
        if (std::abs(d.m[static_cast<size_t>(s)]) >= bound)
          throw std::logic_error("enumerate_mv_bruteforce: search bound touched");

  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hivemv
