#include "phi.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace hivemv {

namespace {

Int nu_tail(const Coweight& nu, int from) {  // nu_from + ... + nu_n, 1-based
  Int s = 0;
  for (int a = from; a <= nu.size(); ++a) s += nu[a - 1];
  return s;
}

}  // namespace

Hive bz_to_hive(const BZDatum& M, const Coweight& nu) {
  int n = M.n;
  if (nu.size() != n) throw std::invalid_argument("bz_to_hive: rank mismatch");
  const HiveGrid& g = HiveGrid::get(n);
  Hive F;
  F.n = n;
  F.values.resize(g.points.size());
  for (int idx = 0; idx < g.size(); ++idx) {
    const TrianglePoint& p = g.points[static_cast<size_t>(idx)];
    F.values[static_cast<size_t>(idx)] =
        M.value(interval_mask(p.k + 1, p.k + p.i)) + nu_tail(nu, p.k + p.i + 1);
  }
  if (!check_hive(F).empty())
    throw std::invalid_argument("bz_to_hive: datum does not produce a hive");
  return F;
}

BZDatum hive_to_bz(const Hive& F, std::optional<std::uint64_t> shuffle_seed) {
  int n = F.n;
  if (!check_hive(F).empty()) throw std::invalid_argument("hive_to_bz: input is not a hive");
  const SubsetTable& tbl = SubsetTable::get(n);
  Coweight nu = hive_boundary(F).nu;

  std::vector<std::optional<Int>> assigned(tbl.masks.size());
  size_t remaining = tbl.masks.size();
  auto assign = [&](SubsetMask s, Int v) {
    auto& slot = assigned[static_cast<size_t>(tbl.index(s))];
    if (slot) {
      if (*slot != v)
        throw tropical_plucker_inconsistency("chamber weight " + subset_str(s) +
                                             " rederived with a different value");
      return;
    }
    slot = v;
    --remaining;
  };

  assign(0, 0);
  const HiveGrid& g = HiveGrid::get(n);
  for (const TrianglePoint& p : g.points)
    if (p.i >= 1)
      assign(interval_mask(p.k + 1, p.k + p.i),
             F.values[static_cast<size_t>(g.index(p.i, p.j))] - nu_tail(nu, p.k + p.i + 1));

  // The staircase word must expose exactly the intervals; everything else
  // is reached by braid moves.
  Word start = staircase_word(n);
  for (SubsetMask s : chamber_set_of_word(start, n))
    if (!assigned[static_cast<size_t>(tbl.index(s))])
      throw std::logic_error("hive_to_bz: initial word exposes a non-interval subset");

  std::mt19937_64 rng(shuffle_seed.value_or(0));
  std::set<Word> seen{start};
  std::vector<Word> frontier{start};
  while (remaining > 0 && !frontier.empty()) {
    size_t pick = 0;
    if (shuffle_seed)
      pick = std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng);
    Word w = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<long>(pick));

    for (auto& [v, move] : braid_neighbors(w, n)) {
      if (move.kind == 3) {
        size_t at = static_cast<size_t>(move.pos) - 1;
        int a = w[at];
        int b = w[at + 1];
        Perm pre = word_to_perm(Word(w.begin(), w.begin() + static_cast<long>(at)), n);
        auto val = [&](const Perm& x, int fund) {
          auto& slot = assigned[static_cast<size_t>(tbl.index(x.prefix_image(fund)))];
          if (!slot) throw std::logic_error("hive_to_bz: expected chamber weight missing");
          return *slot;
        };
        // Tropical Plucker relation at (pre, a, b): the (pre s_b).L_b weight
        // is the only one not already guaranteed present.
        Int lhs_known = val(pre.times_simple(a), a);
        Int c1 = val(pre, a) + val(pre.times_simple(a).times_simple(b), b);
        Int c2 = val(pre.times_simple(b).times_simple(a), a) + val(pre, b);
        assign(pre.times_simple(b).prefix_image(b), std::min(c1, c2) - lhs_known);
      }
      if (seen.insert(v).second) frontier.push_back(v);
    }
  }

  BZDatum M;
  M.n = n;
  M.m.resize(tbl.masks.size());
  for (size_t s = 0; s < tbl.masks.size(); ++s) {
    if (!assigned[s]) throw std::logic_error("hive_to_bz: subset never derived");
    M.m[s] = *assigned[s];
  }
  return M;
}

Int min_formula(const BZDatum& M, const Coweight& nu, int i, int j, int k) {
  int n = M.n;
  if (i < 0 || j < 0 || k < 0 || i + j + k != n)
    throw std::invalid_argument("min_formula: bad point");
  if (nu.size() != n) throw std::invalid_argument("min_formula: rank mismatch");
  std::optional<Int> best;
  SubsetMask full = full_mask(n);
  for (SubsetMask alpha = 0;; ++alpha) {
    if (mask_size(alpha) == i) {
      SubsetMask rest = full & ~alpha;
      // Walk the subsets of the complement.
      SubsetMask beta = rest;
      while (true) {
        if (mask_size(beta) == j) {
          Int cand = M.value(alpha) + subset_sum(nu, beta);
          if (!best || cand < *best) best = cand;
        }
        if (beta == 0) break;
        beta = (beta - 1) & rest;
      }
    }
    if (alpha == full) break;
  }
  return *best;
}

PhiReport verify_phi_bijection(const Coweight& la, const Coweight& mu, const Coweight& nu) {
  PhiReport rep;
  std::vector<BZDatum> data = enumerate_mv(la, mu, nu);
  std::vector<Hive> hives = enumerate_hives(la, mu, nu);
  rep.mv_count = static_cast<Int>(data.size());
  rep.hive_count = static_cast<Int>(hives.size());

  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    if (rep.failure.empty()) rep.failure = msg;
  };

  std::vector<Hive> images;
  for (const BZDatum& M : data) images.push_back(bz_to_hive(M, nu));
  std::vector<Hive> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) != sorted_images.end())
    fail("two BZ data map to the same hive");
  if (sorted_images != hives) fail("image of the BZ enumeration is not the hive set");

  for (size_t d = 0; d < data.size(); ++d) {
    if (!(hive_to_bz(images[d]) == data[d])) {
      fail("round trip differs on datum " + std::to_string(d));
      break;
    }
  }

  const HiveGrid& g = HiveGrid::get(la.size());
  for (size_t d = 0; d < data.size() && rep.pass; ++d) {
    for (const TrianglePoint& p : g.points) {
      Int direct = images[d].values[static_cast<size_t>(g.index(p.i, p.j))];
      Int minimum = min_formula(data[d], nu, p.i, p.j, p.k);
      if (direct != minimum) {
        std::ostringstream os;
        os << "min formula mismatch at datum " << d << " point (" << p.i << "," << p.j
           << "," << p.k << "): " << minimum << " vs " << direct;
        fail(os.str());
        break;
      }
    }
  }
  return rep;
}

}  // namespace hivemv
