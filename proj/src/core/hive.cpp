#include "hive.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hivemv {

int HiveGrid::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > n) throw std::invalid_argument("triangle point out of range");
  // Row j holds i = n-j .. 0; rows 0..j-1 hold n+1, n, ... points.
  int row_start = j * (n + 1) - j * (j - 1) / 2;
  return row_start + (n - j - i);
}

const HiveGrid& HiveGrid::get(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("hive grid: n out of range");
  static std::map<int, HiveGrid> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  HiveGrid g;
  g.n = n;
  for (int j = 0; j <= n; ++j)
    for (int i = n - j; i >= 0; --i) g.points.push_back({i, j, n - i - j});

  auto add = [&](int type, int i, int j, int k, int ai, int aj, int bi, int bj, int ci,
                 int cj, int di, int dj) {
    Rhombus r;
    r.type = type;
    r.base = {i, j, k};
    r.a = g.index(ai, aj);
    r.b = g.index(bi, bj);
    r.c = g.index(ci, cj);
    r.d = g.index(di, dj);
    r.last = std::max({r.a, r.b, r.c, r.d});
    g.rhombi.push_back(r);
  };

  for (const TrianglePoint& p : g.points) {
    int i = p.i, j = p.j, k = p.k;
    // F(i,j,k) + F(i,j+1,k-1) <= F(i+1,j,k-1) + F(i-1,j+1,k)
    if (i >= 1 && k >= 1) add(1, i, j, k, i, j, i, j + 1, i + 1, j, i - 1, j + 1);
    // F(i,j,k) + F(i+1,j-1,k) <= F(i+1,j,k-1) + F(i,j-1,k+1)
    if (j >= 1 && k >= 1) add(2, i, j, k, i, j, i + 1, j - 1, i + 1, j, i, j - 1);
    // F(i,j,k) + F(i+1,j,k-1) <= F(i,j+1,k-1) + F(i+1,j-1,k)
    if (j >= 1 && k >= 1) add(3, i, j, k, i, j, i + 1, j, i, j + 1, i + 1, j - 1);
  }

  g.completed_at.resize(g.points.size());
  for (size_t r = 0; r < g.rhombi.size(); ++r)
    g.completed_at[static_cast<size_t>(g.rhombi[r].last)].push_back(static_cast<int>(r));

  return cache.emplace(n, std::move(g)).first->second;
}

Hive normalize_hive(const Hive& h) {
  const HiveGrid& g = HiveGrid::get(h.n);
  Hive out = h;
  Int base = h.values[static_cast<size_t>(g.index(0, 0))];
  for (Int& v : out.values) v -= base;
  return out;
}

namespace {

bool rhombus_ok(const HiveGrid::Rhombus& r, const std::vector<Int>& v,
                RhombusOrientation o) {
  Int lhs = v[static_cast<size_t>(r.a)] + v[static_cast<size_t>(r.b)];
  Int rhs = v[static_cast<size_t>(r.c)] + v[static_cast<size_t>(r.d)];
  return o == RhombusOrientation::Standard ? lhs <= rhs : lhs >= rhs;
}

}  // namespace

std::vector<RhombusViolation> check_hive(const Hive& h, RhombusOrientation orientation) {
  const HiveGrid& g = HiveGrid::get(h.n);
  if (h.values.size() != g.points.size())
    throw std::invalid_argument("hive value count does not match grid");
  std::vector<RhombusViolation> out;
  for (const auto& r : g.rhombi) {
    if (!rhombus_ok(r, h.values, orientation)) {
      RhombusViolation v;
      v.type = r.type;
      v.base = r.base;
      v.lhs = h.values[static_cast<size_t>(r.a)] + h.values[static_cast<size_t>(r.b)];
      v.rhs = h.values[static_cast<size_t>(r.c)] + h.values[static_cast<size_t>(r.d)];
      out.push_back(v);
    }
  }
  return out;
}

HiveBoundary hive_boundary(const Hive& h) {
  int n = h.n;
  HiveBoundary b;
  b.la.entries.resize(static_cast<size_t>(n));
  b.mu.entries.resize(static_cast<size_t>(n));
  b.nu.entries.resize(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m) {
    b.la[m - 1] = h.at(n - m + 1, 0) - h.at(n - m, 0);
    b.mu[m - 1] = h.at(m - 1, n - m + 1) - h.at(m, n - m);
    b.nu[m - 1] = h.at(0, n - m + 1) - h.at(0, n - m);
  }
  return b;
}

std::array<Coweight, 3> symmetric_boundary(const Coweight& la, const Coweight& mu,
                                           const Coweight& nu) {
  return {la, mu, dual(nu)};
}

namespace {

struct HiveSearch {
  const HiveGrid& g;
  RhombusOrientation orientation;
  std::vector<Int> values;
  std::vector<bool> boundary;  // per canonical index: value fixed in advance
  std::vector<Hive>* out;

  bool checks_pass(int idx) const {
    for (int r : g.completed_at[static_cast<size_t>(idx)])
      if (!rhombus_ok(g.rhombi[static_cast<size_t>(r)], values, orientation)) return false;
    return true;
  }

  void fill(int idx) {
    if (idx == g.size()) {
      out->push_back(Hive{g.n, values});
      return;
    }
    const TrianglePoint& p = g.points[static_cast<size_t>(idx)];
    if (boundary[static_cast<size_t>(idx)]) {
      if (checks_pass(idx)) fill(idx + 1);
      return;
    }
    // Interior point: 1 <= i <= n-j-1, j >= 1.  Two already-filled rhombi
    // bracket the value; the remaining conditions are re-checked per rhombus.
    Int across = values[static_cast<size_t>(g.index(p.i + 1, p.j))];
    Int below = values[static_cast<size_t>(g.index(p.i, p.j - 1))];
    Int below_r = values[static_cast<size_t>(g.index(p.i + 1, p.j - 1))];
    Int below_rr = values[static_cast<size_t>(g.index(p.i + 2, p.j - 1))];
    Int lo = below_r + across - below_rr;
    Int hi = across + below - below_r;
    if (orientation == RhombusOrientation::Reversed) std::swap(lo, hi);
    for (Int v = lo; v <= hi; ++v) {
      values[static_cast<size_t>(idx)] = v;
      if (checks_pass(idx)) fill(idx + 1);
    }
  }
};

}  // namespace

std::vector<Hive> enumerate_hives(const Coweight& la, const Coweight& mu,
                                  const Coweight& nu, RhombusOrientation orientation) {
  int n = la.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("enumerate_hives: boundary ranks differ");
  if (!la.is_dominant() || !mu.is_dominant() || !nu.is_dominant())
    throw std::invalid_argument("enumerate_hives: boundary not dominant");
  std::vector<Hive> out;
  if (la.sum() + mu.sum() != nu.sum()) return out;

  const HiveGrid& g = HiveGrid::get(n);
  HiveSearch s{g, orientation, std::vector<Int>(g.points.size(), 0),
               std::vector<bool>(g.points.size(), false), &out};

  auto set_point = [&](int i, int j, Int v) {
    int idx = g.index(i, j);
    s.values[static_cast<size_t>(idx)] = v;
    s.boundary[static_cast<size_t>(idx)] = true;
  };

  // Edge values of the normalized hive, anchored at F(0,0,n) = 0.
  Int acc = 0;
  set_point(0, 0, 0);
  for (int i = 1; i <= n; ++i) {  // bottom edge: partial sums of la, reversed
    acc += la[n - i];
    set_point(i, 0, acc);
  }
  acc = 0;
  for (int j = 1; j <= n; ++j) {  // left edge: partial sums of nu, reversed
    acc += nu[n - j];
    set_point(0, j, acc);
  }
  Int nu_total = nu.sum();
  acc = 0;
  for (int i = 1; i < n; ++i) {  // hypotenuse: nu total minus mu prefix sums
    acc += mu[i - 1];
    set_point(i, n - i, nu_total - acc);
  }
  // The (n,0,0) corner is shared: bottom edge gave sum(la), the hypotenuse
  // reading gives sum(nu)-sum(mu); these agree by the sum check above.

  s.fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

Hive rotate_hive(const Hive& h) {
  const HiveGrid& g = HiveGrid::get(h.n);
  Hive out;
  out.n = h.n;
  out.values.resize(h.values.size());
  for (const TrianglePoint& p : g.points)
    out.values[static_cast<size_t>(g.index(p.i, p.j))] =
        h.values[static_cast<size_t>(g.index(p.k, p.i))];
  return normalize_hive(out);
}

}  // namespace hivemv
