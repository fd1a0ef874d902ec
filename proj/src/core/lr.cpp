#include "lr.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace hivemv {

namespace {

bool is_partition(const Coweight& p) {
  if (!p.is_dominant()) return false;
  return p.entries.empty() || p.entries.back() >= 0;
}

Int part(const Coweight& p, int r) {  // 1-based, 0 past the end
  return r <= p.size() ? p[r - 1] : 0;
}

// Skew tableau filler.  Cells are visited in reverse reading order (rows
// top to bottom, right to left), so the right neighbor and the cell above
// are always already placed.
struct LRCounter {
  const Coweight& la;
  const Coweight& mu;
  int vals;
  std::vector<std::pair<int, int>> cells;  // (row, col), 1-based, fill order
  std::vector<std::vector<Int>> cell;      // cell[r-1][c-1], 0 = hole/unset
  std::vector<Int> used;                   // used[m-1] = multiplicity of m so far
  Int count = 0;

  LRCounter(const Coweight& l, const Coweight& m, const Coweight& s)
      : la(l), mu(m), vals(m.size()) {
    for (int r = 1; r <= s.size(); ++r)
      for (Int c = part(s, r); c > part(la, r); --c)
        cells.push_back({r, static_cast<int>(c)});
    cell.assign(static_cast<size_t>(s.size()),
                std::vector<Int>(static_cast<size_t>(part(s, 1)), 0));
    used.assign(static_cast<size_t>(vals), 0);
  }

  Int at(int r, int c) const { return cell[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)]; }

  void fill(size_t t) {
    if (t == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[t];
    bool has_right = t > 0 && cells[t - 1].first == r;  // cell (r, c+1)
    bool has_above = r > 1 && c > part(la, r - 1);      // cell (r-1, c)
    for (int m = 1; m <= vals; ++m) {
      if (used[static_cast<size_t>(m - 1)] >= part(mu, m)) continue;
      if (m > 1 && used[static_cast<size_t>(m - 2)] <= used[static_cast<size_t>(m - 1)])
        continue;  // lattice condition
      if (has_right && m > at(r, c + 1)) continue;   // rows weakly increase
      if (has_above && m <= at(r - 1, c)) continue;  // columns strictly increase
      cell[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = m;
      ++used[static_cast<size_t>(m - 1)];
      fill(t + 1);
      --used[static_cast<size_t>(m - 1)];
      cell[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = 0;
    }
  }
};

}  // namespace

Int lr_coefficient(const Coweight& la, const Coweight& mu, const Coweight& nu) {
  if (!is_partition(la) || !is_partition(mu) || !is_partition(nu))
    throw std::invalid_argument("lr_coefficient expects partitions");
  if (la.sum() + mu.sum() != nu.sum()) return 0;
  for (int r = 1; r <= std::max(la.size(), nu.size()); ++r)
    if (part(la, r) > part(nu, r)) return 0;
  LRCounter counter(la, mu, nu);
  counter.fill(0);
  return counter.count;
}

Int weyl_dim(const Coweight& la) {
  if (!la.is_dominant()) throw std::invalid_argument("weyl_dim: not dominant");
  int n = la.size();
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= la[i - 1] - la[j - 1] + j - i;
      den *= j - i;
    }
  boost::multiprecision::cpp_int d = num / den;
  return static_cast<Int>(d);
}

Int triple_invariant_dim(const Coweight& la, const Coweight& mu, const Coweight& chi) {
  int n = la.size();
  if (mu.size() != n || chi.size() != n)
    throw std::invalid_argument("triple_invariant_dim: ranks differ");
  if (!la.is_dominant() || !mu.is_dominant() || !chi.is_dominant())
    throw std::invalid_argument("triple_invariant_dim: not dominant");
  if (la.sum() + mu.sum() + chi.sum() != 0) return 0;
  // Twist by powers of det to land in partition range; the invariant
  // dimension is unchanged when the target absorbs the same twist.
  Int a = std::max<Int>(0, -la[n - 1]);
  Int b = std::max<Int>(0, -mu[n - 1]);
  Coweight las = la, mus = mu, target = dual(chi);
  for (int r = 0; r < n; ++r) {
    las[r] += a;
    mus[r] += b;
    target[r] += a + b;
  }
  if (target[n - 1] < 0) return 0;
  return lr_coefficient(las, mus, target);
}

namespace {

void dominant_between(int pos, int n, Int lo, Int hi, Int remaining, Coweight& acc,
                      std::vector<Coweight>& out) {
  if (pos == n) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  Int cap = std::min(hi, pos > 0 ? acc[pos - 1] : hi);
  for (Int v = lo; v <= cap; ++v) {
    // Remaining positions are bounded by [lo, v] each.
    Int rest = remaining - v;
    Int slots = n - pos - 1;
    if (rest < slots * lo || rest > slots * v) continue;
    acc[pos] = v;
    dominant_between(pos + 1, n, lo, hi, rest, acc, out);
  }
}

}  // namespace

std::vector<Coweight> dominant_range(int n, Int lo, Int hi, Int total) {
  std::vector<Coweight> out;
  if (n < 1 || lo > hi) return out;
  Coweight acc = Coweight::zero(n);
  dominant_between(0, n, lo, hi, total, acc, out);
  return out;
}

Int multi_invariant_dim(const std::vector<Coweight>& weights) {
  if (weights.size() < 2) throw std::invalid_argument("multi_invariant_dim: need k >= 2");
  int n = weights[0].size();
  for (const Coweight& w : weights) {
    if (w.size() != n) throw std::invalid_argument("multi_invariant_dim: ranks differ");
    if (!w.is_dominant()) throw std::invalid_argument("multi_invariant_dim: not dominant");
  }
  if (weights.size() == 2) return weights[1] == dual(weights[0]) ? 1 : 0;

  // Decompose the first two factors; every constituent gamma obeys the
  // top/bottom entry bounds of the tensor product.
  Int lo = weights[0][n - 1] + weights[1][n - 1];
  Int hi = weights[0][0] + weights[1][0];
  Int total = weights[0].sum() + weights[1].sum();
  std::vector<Coweight> gammas = dominant_range(n, lo, hi, total);

  Int dim = 0;
  for (const Coweight& gamma : gammas) {
    Int mult = triple_invariant_dim(weights[0], weights[1], dual(gamma));
    if (mult == 0) continue;
    std::vector<Coweight> rest;
    rest.push_back(gamma);
    rest.insert(rest.end(), weights.begin() + 2, weights.end());
    dim += mult * multi_invariant_dim(rest);
  }
  return dim;
}

}  // namespace hivemv
