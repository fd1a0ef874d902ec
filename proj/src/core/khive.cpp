#include "khive.hpp"

#include <algorithm>
#include <mutex>

#include "lr.hpp"

namespace hivemv {

namespace {

void tuples_with_sum(int k, int total, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == k - 1) {
    acc.push_back(total);
    out.push_back(acc);
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    acc.push_back(v);
    tuples_with_sum(k, total - v, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> all_tuples(int k, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  tuples_with_sum(k, total, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int KHiveGrid::index(const std::vector<int>& t) const {
  auto it = index_of.find(t);
  if (it == index_of.end()) throw std::invalid_argument("point not in grid");
  return it->second;
}

const KHiveGrid& KHiveGrid::get(int n, int k) {
  if (n < 1 || k < 2 || k > 8) throw std::invalid_argument("khive grid: bad (n, k)");
  static std::map<std::pair<int, int>, KHiveGrid> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  KHiveGrid g;
  g.n = n;
  g.k = k;
  g.points = all_tuples(k, n);
  for (size_t idx = 0; idx < g.points.size(); ++idx)
    g.index_of[g.points[idx]] = static_cast<int>(idx);

  if (k >= 4 && n >= 2) {
    std::array<int, 4> axes{};
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        for (int c = b + 1; c <= k; ++c)
          for (int d = c + 1; d <= k; ++d) {
            axes = {a, b, c, d};
            for (const auto& v : all_tuples(k, n - 2)) {
              auto shifted = [&](int x, int y) {
                std::vector<int> t = v;
                ++t[static_cast<size_t>(x - 1)];
                ++t[static_cast<size_t>(y - 1)];
                return g.index_of.at(t);
              };
              Octahedron o;
              o.base = v;
              o.axes = axes;
              o.ad = shifted(a, d);
              o.bc = shifted(b, c);
              o.ab = shifted(a, b);
              o.cd = shifted(c, d);
              o.ac = shifted(a, c);
              o.bd = shifted(b, d);
              g.octahedra.push_back(std::move(o));
            }
          }
  }

  return cache.emplace(std::make_pair(n, k), std::move(g)).first->second;
}

Int KHive::at(const std::vector<int>& t) const {
  const KHiveGrid& g = KHiveGrid::get(n, k);
  return values[static_cast<size_t>(g.index(t))];
}

std::vector<OctahedronViolation> check_octahedron(const KHive& f) {
  const KHiveGrid& g = KHiveGrid::get(f.n, f.k);
  if (f.values.size() != g.points.size())
    throw std::invalid_argument("khive value count does not match grid");
  std::vector<OctahedronViolation> out;
  for (const auto& o : g.octahedra) {
    auto v = [&](int idx) { return f.values[static_cast<size_t>(idx)]; };
    Int lhs = std::min(v(o.ad) + v(o.bc), v(o.ab) + v(o.cd));
    Int rhs = v(o.ac) + v(o.bd);
    if (lhs != rhs) out.push_back({o.base, o.axes, lhs, rhs});
  }
  return out;
}

Hive face_ordered(const KHive& f, const std::array<int, 3>& axes) {
  for (int a : axes)
    if (a < 1 || a > f.k) throw std::invalid_argument("face axis out of range");
  if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
    throw std::invalid_argument("face axes must be distinct");
  const HiveGrid& hg = HiveGrid::get(f.n);
  Hive h;
  h.n = f.n;
  h.values.resize(hg.points.size());
  for (const TrianglePoint& p : hg.points) {
    std::vector<int> t(static_cast<size_t>(f.k), 0);
    t[static_cast<size_t>(axes[0] - 1)] = p.i;
    t[static_cast<size_t>(axes[1] - 1)] = p.j;
    t[static_cast<size_t>(axes[2] - 1)] = p.k;
    h.values[static_cast<size_t>(hg.index(p.i, p.j))] = f.at(t);
  }
  return normalize_hive(h);
}

Hive face(const KHive& f, int a, int b, int c) {
  if (!(a < b && b < c)) throw std::invalid_argument("face expects ascending axes");
  return face_ordered(f, {a, b, c});
}

std::vector<Coweight> boundary_k(const KHive& f) {
  std::vector<Coweight> out;
  for (int i = 1; i <= f.k; ++i) {
    int prev = (i == 1) ? f.k : i - 1;
    Coweight w = Coweight::zero(f.n);
    for (int j = 1; j <= f.n; ++j) {
      std::vector<int> a(static_cast<size_t>(f.k), 0);
      std::vector<int> b(static_cast<size_t>(f.k), 0);
      a[static_cast<size_t>(prev - 1)] = j - 1;
      a[static_cast<size_t>(i - 1)] = f.n - j + 1;
      b[static_cast<size_t>(prev - 1)] = j;
      b[static_cast<size_t>(i - 1)] = f.n - j;
      w[j - 1] = f.at(a) - f.at(b);
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool is_valid_khive(const KHive& f) {
  const KHiveGrid& g = KHiveGrid::get(f.n, f.k);
  if (f.values.size() != g.points.size()) return false;
  for (int a = 1; a <= f.k; ++a)
    for (int b = a + 1; b <= f.k; ++b)
      for (int c = b + 1; c <= f.k; ++c)
        if (!check_hive(face(f, a, b, c)).empty()) return false;
  return check_octahedron(f).empty();
}

KHive complete_tetrahedron(const Hive& p_in, const Hive& q_in) {
  Hive p = normalize_hive(p_in);
  Hive q = normalize_hive(q_in);
  if (p.n != q.n) throw std::invalid_argument("complete_tetrahedron: ranks differ");
  if (!check_hive(p).empty() || !check_hive(q).empty())
    throw std::invalid_argument("complete_tetrahedron: input is not a hive");
  if (!(hive_boundary(p).mu == hive_boundary(q).nu))
    throw std::invalid_argument("complete_tetrahedron: shared edge mismatch");

  int n = p.n;
  const KHiveGrid& g = KHiveGrid::get(n, 4);
  KHive f;
  f.n = n;
  f.k = 4;
  f.values.assign(g.points.size(), 0);
  std::vector<bool> set(g.points.size(), false);

  auto put = [&](const std::vector<int>& t, Int v) {
    int idx = g.index(t);
    f.values[static_cast<size_t>(idx)] = v;
    set[static_cast<size_t>(idx)] = true;
  };
  auto val = [&](int x1, int x2, int x3, int x4) {
    int idx = g.index({x1, x2, x3, x4});
    if (!set[static_cast<size_t>(idx)]) throw std::logic_error("completion order broken");
    return f.values[static_cast<size_t>(idx)];
  };

  // Wall x2 = 0 carries P on coordinates (x1, x3, x4); layer x4 = 0 carries
  // Q on coordinates (x2, x3, x1), shifted so the shared anchor n*e_1 agrees
  // with P's reading there.
  Int shift = p.at(n, 0);
  for (const auto& t : g.points) {
    if (t[1] == 0) put(t, p.at(t[0], t[2]));
    if (t[3] == 0) {
      Int v = q.at(t[1], t[2]) + shift;
      if (t[1] == 0 && f.at(t) != v)
        throw std::logic_error("face readings disagree on the shared edge");
      if (t[1] != 0) put(t, v);
    }
  }

  // Fill layer by layer in x4; within a layer, ascending x2.  The unique
  // unknown of each octahedron relation sits at base + e_2 + e_4.
  for (int m = 1; m <= n; ++m) {
    for (int x2 = 1; x2 <= n - m; ++x2) {
      for (int x1 = 0; x1 + x2 + m <= n; ++x1) {
        int x3 = n - x1 - x2 - m;
        Int p1 = val(x1 + 1, x2 - 1, x3, m);
        Int p3 = val(x1, x2 - 1, x3 + 1, m);
        Int q23 = val(x1, x2, x3 + 1, m - 1);
        Int q12 = val(x1 + 1, x2, x3, m - 1);
        Int q13 = val(x1 + 1, x2 - 1, x3 + 1, m - 1);
        put({x1, x2, x3, m}, std::min(p1 + q23, q12 + p3) - q13);
      }
    }
  }

  for (bool b : set)
    if (!b) throw std::logic_error("completion left a point unset");
  if (!check_octahedron(f).empty())
    throw std::logic_error("completed tetrahedron violates an octahedron relation");
  if (!check_hive(face(f, 1, 3, 4)).empty() || !check_hive(face(f, 1, 2, 3)).empty())
    throw std::logic_error("input face lost the rhombus conditions");
  if (!check_hive(face(f, 1, 2, 4)).empty() || !check_hive(face(f, 2, 3, 4)).empty())
    throw completion_error("completed face violates the rhombus conditions");
  return f;
}

std::pair<Hive, Hive> associator(const Hive& p, const Hive& q) {
  KHive f = complete_tetrahedron(p, q);
  return {face(f, 1, 2, 4), face(f, 2, 3, 4)};
}

std::vector<KHive> enumerate_khives(const std::vector<Coweight>& weights) {
  int k = static_cast<int>(weights.size());
  if (k < 2 || k > 4) throw std::invalid_argument("enumerate_khives: k must be 2..4");
  int n = weights[0].size();
  Int total = 0;
  for (const Coweight& w : weights) {
    if (w.size() != n) throw std::invalid_argument("enumerate_khives: ranks differ");
    if (!w.is_dominant()) throw std::invalid_argument("enumerate_khives: not dominant");
    total += w.sum();
  }
  std::vector<KHive> out;
  if (total != 0) return out;

  const KHiveGrid& g = KHiveGrid::get(n, k);

  if (k == 2) {
    if (!(weights[1] == dual(weights[0]))) return out;
    KHive f;
    f.n = n;
    f.k = 2;
    f.values.assign(g.points.size(), 0);
    for (const auto& t : g.points) {
      Int acc = 0;  // sum of the last t[0] entries of weights[0]
      for (int m = 0; m < t[0]; ++m) acc += weights[0][n - 1 - m];
      f.values[static_cast<size_t>(g.index_of.at(t))] = acc;
    }
    out.push_back(std::move(f));
    return out;
  }

  if (k == 3) {
    for (const Hive& h : enumerate_hives(weights[0], weights[1], dual(weights[2]))) {
      KHive f;
      f.n = n;
      f.k = 3;
      f.values.resize(g.points.size());
      for (const auto& t : g.points)
        f.values[static_cast<size_t>(g.index_of.at(t))] = h.at(t[0], t[1]);
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // k = 4: split along the edge shared by faces {1,3,4} and {1,2,3}.  The
  // candidate coweights there are constituents of the middle tensor square,
  // bounded entrywise by its extreme weights.
  const Coweight& la = weights[0];
  const Coweight& mu = weights[1];
  const Coweight& nu = weights[2];
  const Coweight& chi = weights[3];
  for (const Coweight& delta :
       dominant_range(n, mu[n - 1] + nu[n - 1], mu[0] + nu[0], mu.sum() + nu.sum())) {
    std::vector<Hive> qs = enumerate_hives(mu, nu, delta);
    if (qs.empty()) continue;
    std::vector<Hive> ps = enumerate_hives(la, delta, dual(chi));
    for (const Hive& p : ps)
      for (const Hive& q : qs) {
        KHive f = complete_tetrahedron(p, q);
        if (!(boundary_k(f) == weights))
          throw std::logic_error("completed tetrahedron has wrong boundary");
        out.push_back(std::move(f));
      }
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i].values == out[i - 1].values)
      throw std::logic_error("distinct face pairs completed to the same tetrahedron");
  return out;
}

}  // namespace hivemv
