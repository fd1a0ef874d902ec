#include "affgr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hivemv {

LaurentMatrix LaurentMatrix::zero(int n) {
  if (n < 1) throw std::invalid_argument("matrix rank must be positive");
  LaurentMatrix m;
  m.n = n;
  m.e.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  return m;
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m = zero(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

LaurentMatrix LaurentMatrix::t_power(const Coweight& mu) {
  LaurentMatrix m = zero(mu.size());
  for (int i = 1; i <= m.n; ++i) m.at(i, i) = LaurentPoly::term(mu[i - 1], 1);
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix product: ranks differ");
  LaurentMatrix c = LaurentMatrix::zero(a.n);
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j)
      for (int l = 1; l <= a.n; ++l) c.at(i, j) += a.at(i, l) * b.at(l, j);
  return c;
}

namespace {

int list_sign(const std::vector<int>& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

LaurentPoly minor_det(const LaurentMatrix& g, SubsetMask rows, SubsetMask cols) {
  std::vector<int> r = subset_elements(rows);
  std::vector<int> c = subset_elements(cols);
  if (r.size() != c.size()) throw std::invalid_argument("minor_det: sizes differ");
  for (int x : r)
    if (x > g.n) throw std::invalid_argument("minor_det: row out of range");
  for (int x : c)
    if (x > g.n) throw std::invalid_argument("minor_det: column out of range");
  LaurentPoly out = LaurentPoly::constant(1);
  if (r.empty()) return out;
  out = LaurentPoly();
  std::vector<int> order(r.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    LaurentPoly prod = LaurentPoly::constant(list_sign(order));
    for (size_t m = 0; m < c.size(); ++m)
      prod = prod * g.at(r[static_cast<size_t>(order[m])], c[m]);
    out += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

LaurentPoly full_det(const LaurentMatrix& g) {
  SubsetMask all = full_mask(g.n);
  return minor_det(g, all, all);
}

Int d_gamma(const LaurentMatrix& g, SubsetMask gamma) {
  if (gamma & ~full_mask(g.n)) throw std::invalid_argument("d_gamma: subset out of range");
  if (full_det(g).is_zero()) throw std::invalid_argument("d_gamma: singular matrix");
  std::optional<Int> best;
  int r = mask_size(gamma);
  for (SubsetMask rows = 0; rows < (SubsetMask{1} << g.n); ++rows) {
    if (mask_size(rows) != r) continue;
    auto v = minor_det(g, rows, gamma).valuation();
    if (v && (!best || *v < *best)) best = *v;
  }
  if (!best) throw std::logic_error("d_gamma: no nonzero minor on an invertible matrix");
  return *best;
}

int partition_sign(const std::vector<SubsetMask>& blocks, int n) {
  SubsetMask seen = 0;
  int count = 0;
  std::vector<int> word;
  for (SubsetMask b : blocks) {
    if (b & seen) return 0;
    seen |= b;
    count += mask_size(b);
    for (int x : subset_elements(b)) word.push_back(x);
  }
  if (count != n || seen != full_mask(n)) return 0;
  return list_sign(word);
}

namespace {

void ordered_partitions(int pos, int n, const std::vector<int>& sizes, SubsetMask used,
                        std::vector<SubsetMask>& acc,
                        std::vector<std::vector<SubsetMask>>& out) {
  if (pos == static_cast<int>(sizes.size())) {
    out.push_back(acc);
    return;
  }
  SubsetMask rest = full_mask(n) & ~used;
  // Walk all submasks of the complement with the required cardinality.
  SubsetMask sub = rest;
  while (true) {
    if (mask_size(sub) == sizes[static_cast<size_t>(pos)]) {
      acc.push_back(sub);
      ordered_partitions(pos + 1, n, sizes, used | sub, acc, out);
      acc.pop_back();
    }
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

std::vector<SubsetMask> masks_of_size(int n, int r) {
  std::vector<SubsetMask> out;
  for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
    if (mask_size(m) == r) out.push_back(m);
  return out;
}

}  // namespace

std::vector<XiTerm> xi_terms(int n, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("xi_terms: negative block size");
    total += s;
  }
  if (total != n) throw std::invalid_argument("xi_terms: sizes must sum to n");
  std::vector<std::vector<SubsetMask>> parts;
  std::vector<SubsetMask> acc;
  ordered_partitions(0, n, sizes, 0, acc, parts);
  std::sort(parts.begin(), parts.end());
  std::vector<XiTerm> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    int s = partition_sign(p, n);
    out.push_back({std::move(p), s});
  }
  return out;
}

Int h_function(const std::vector<LaurentMatrix>& gs, const std::vector<int>& sizes) {
  if (gs.empty() || gs.size() != sizes.size())
    throw std::invalid_argument("h_function: matrix and size counts differ");
  int n = gs[0].n;
  for (const LaurentMatrix& g : gs) {
    if (g.n != n) throw std::invalid_argument("h_function: ranks differ");
    if (full_det(g).is_zero()) throw std::invalid_argument("h_function: singular matrix");
  }
  std::vector<XiTerm> terms = xi_terms(n, sizes);

  size_t k = gs.size();
  // Minor tables per factor: rows x columns over subsets of the block size.
  std::vector<std::map<std::pair<SubsetMask, SubsetMask>, LaurentPoly>> minors(k);
  std::vector<std::vector<SubsetMask>> row_sets(k);
  for (size_t m = 0; m < k; ++m) {
    row_sets[m] = masks_of_size(n, sizes[m]);
    for (SubsetMask rows : row_sets[m])
      for (SubsetMask cols : row_sets[m])
        minors[m][{rows, cols}] = minor_det(gs[m], rows, cols);
  }

  // Image coefficient at a tuple of row sets: signed sum over partitions of
  // the per-factor minor products.
  std::optional<Int> best;
  std::vector<size_t> beta(k, 0);
  while (true) {
    LaurentPoly coeff;
    for (const XiTerm& t : terms) {
      LaurentPoly prod = LaurentPoly::constant(t.sign);
      for (size_t m = 0; m < k && !prod.is_zero(); ++m)
        prod = prod * minors[m].at({row_sets[m][beta[m]], t.blocks[m]});
      coeff += prod;
    }
    auto v = coeff.valuation();
    if (v && (!best || *v < *best)) best = *v;

    size_t m = 0;
    while (m < k && ++beta[m] == row_sets[m].size()) beta[m++] = 0;
    if (m == k) break;
  }
  if (!best) throw std::logic_error("h_function: zero image of an invertible tuple");
  return *best;
}

std::optional<Int> speyer_s(const LaurentMatrix& g1, const LaurentMatrix& g2,
                            const LaurentMatrix& g3, int i, int j, int k) {
  int n = g1.n;
  if (g2.n != n || g3.n != n) throw std::invalid_argument("speyer_s: ranks differ");
  if (i < 0 || j < 0 || k < 0 || i + j + k != n)
    throw std::invalid_argument("speyer_s: exponents must be a point of the triangle");
  if (n > 7) throw std::invalid_argument("speyer_s: rank too large for expansion");

  // Trivariate polynomial keyed by (deg_x, deg_y); deg_z is implied by
  // homogeneity of degree n.
  using Tri = std::map<std::pair<int, int>, LaurentPoly>;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Tri det;
  do {
    Tri prod;
    prod[{0, 0}] = LaurentPoly::constant(list_sign(order));
    for (int col = 1; col <= n; ++col) {
      int row = order[static_cast<size_t>(col - 1)] + 1;
      Tri next;
      for (const auto& [deg, c] : prod) {
        auto add = [&](int dx, int dy, const LaurentPoly& f) {
          if (f.is_zero()) return;
          auto [it, inserted] = next.try_emplace({deg.first + dx, deg.second + dy}, c * f);
          if (!inserted) it->second += c * f;
        };
        add(1, 0, g1.at(row, col));
        add(0, 1, g2.at(row, col));
        add(0, 0, g3.at(row, col));
      }
      prod = std::move(next);
    }
    for (auto& [deg, c] : prod) {
      auto [it, inserted] = det.try_emplace(deg, c);
      if (!inserted) it->second += c;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  auto it = det.find({i, j});
  if (it == det.end()) return std::nullopt;
  return it->second.valuation();
}

GenericPluckerReport check_generic_plucker(const LaurentMatrix& g) {
  int n = g.n;
  const SubsetTable& tbl = SubsetTable::get(n);
  GenericPluckerReport rep;
  rep.m.n = n;
  rep.m.m.resize(tbl.count());
  for (SubsetMask s : tbl.masks) rep.m.set(s, d_gamma(g, s));
  rep.violations = check_tropical_plucker(rep.m);
  rep.total = tropical_plucker_instances(n);
  rep.holding = rep.total - static_cast<int>(rep.violations.size());
  return rep;
}

namespace {

Rational uniform_int(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(rng));
}

}  // namespace

LaurentMatrix random_laurent_matrix(int n, std::mt19937_64& rng, Int exp_lo, Int exp_hi,
                                    int coeff_bound) {
  if (exp_lo > exp_hi) throw std::invalid_argument("random matrix: empty exponent range");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LaurentMatrix g = LaurentMatrix::zero(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (Int e = exp_lo; e <= exp_hi; ++e)
          g.at(i, j) += LaurentPoly::term(e, uniform_int(rng, -coeff_bound, coeff_bound));
    if (!full_det(g).is_zero()) return g;
  }
  throw std::runtime_error("random matrix: no invertible sample found");
}

LaurentMatrix random_go_element(int n, std::mt19937_64& rng) {
  LaurentMatrix lower = LaurentMatrix::identity(n);
  LaurentMatrix upper = LaurentMatrix::zero(n);
  auto series = [&](bool unit_head) {
    LaurentPoly p;
    Rational head = unit_head ? uniform_int(rng, 1, 5) : uniform_int(rng, -3, 3);
    if (unit_head && uniform_int(rng, 0, 1) == 1) head = -head;
    p += LaurentPoly::term(0, head);
    for (Int e = 1; e <= 2; ++e) p += LaurentPoly::term(e, uniform_int(rng, -3, 3));
    return p;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) lower.at(i, j) = series(false);
  for (int i = 1; i <= n; ++i) {
    upper.at(i, i) = series(true);
    for (int j = i + 1; j <= n; ++j) upper.at(i, j) = series(false);
  }
  return lower * upper;
}

LaurentMatrix random_constant_matrix(int n, std::mt19937_64& rng, int bound) {
  LaurentMatrix g = LaurentMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      g.at(i, j) = LaurentPoly::constant(uniform_int(rng, -bound, bound));
  return g;
}

}  // namespace hivemv
