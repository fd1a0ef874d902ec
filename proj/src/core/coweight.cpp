#include "coweight.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hivemv {

Int Coweight::sum() const {
  Int s = 0;
  for (Int e : entries) s += e;
  return s;
}

bool Coweight::is_dominant() const {
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i - 1] < entries[i]) return false;
  return true;
}

bool Coweight::is_zero() const {
  for (Int e : entries)
    if (e != 0) return false;
  return true;
}

Coweight Coweight::operator+(const Coweight& o) const {
  if (o.size() != size()) throw std::invalid_argument("coweight size mismatch");
  Coweight r = *this;
  for (int i = 0; i < size(); ++i) r[i] += o[i];
  return r;
}

Coweight Coweight::operator-(const Coweight& o) const {
  if (o.size() != size()) throw std::invalid_argument("coweight size mismatch");
  Coweight r = *this;
  for (int i = 0; i < size(); ++i) r[i] -= o[i];
  return r;
}

std::string Coweight::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

Coweight dual(const Coweight& la) {
  Coweight r = la;
  std::reverse(r.entries.begin(), r.entries.end());
  for (Int& e : r.entries) e = -e;
  return r;
}

std::vector<int> subset_elements(SubsetMask m) {
  std::vector<int> out;
  for (int a = 1; m; ++a, m >>= 1)
    if (m & 1u) out.push_back(a);
  return out;
}

SubsetMask mask_from_elements(const std::vector<int>& elems, int n) {
  SubsetMask m = 0;
  for (int a : elems) {
    if (a < 1 || a > n) throw std::invalid_argument("subset element out of range");
    SubsetMask bit = SubsetMask{1} << (a - 1);
    if (m & bit) throw std::invalid_argument("repeated subset element");
    m |= bit;
  }
  return m;
}

SubsetMask interval_mask(int lo, int hi) {
  if (hi < lo) return 0;
  SubsetMask m = 0;
  for (int a = lo; a <= hi; ++a) m |= SubsetMask{1} << (a - 1);
  return m;
}

SubsetMask full_mask(int n) {
  return n == 0 ? 0 : (SubsetMask{1} << n) - 1;
}

int mask_size(SubsetMask m) { return std::popcount(m); }

std::string subset_str(SubsetMask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int a : subset_elements(m)) {
    if (!first) os << ',';
    os << a;
    first = false;
  }
  os << '}';
  return os.str();
}

bool subset_canonical_less(SubsetMask a, SubsetMask b) {
  int ca = mask_size(a), cb = mask_size(b);
  if (ca != cb) return ca < cb;
  // Equal sizes: lexicographic on ascending element lists.  The lowest set
  // bits decide, so compare element by element.
  SubsetMask x = a, y = b;
  while (x && y) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return false;
}

const SubsetTable& SubsetTable::get(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("subset table: n out of range");
  static std::map<int, SubsetTable> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SubsetTable t;
  t.n = n;
  size_t total = size_t{1} << n;
  t.masks.resize(total);
  for (size_t m = 0; m < total; ++m) t.masks[m] = static_cast<SubsetMask>(m);
  std::sort(t.masks.begin(), t.masks.end(), subset_canonical_less);
  t.index_of.assign(total, -1);
  for (size_t i = 0; i < total; ++i) t.index_of[t.masks[i]] = static_cast<int>(i);
  return cache.emplace(n, std::move(t)).first->second;
}

Int subset_sum(const Coweight& mu, SubsetMask gamma) {
  Int s = 0;
  for (int a : subset_elements(gamma)) {
    if (a > mu.size()) throw std::invalid_argument("subset exceeds rank");
    s += mu[a - 1];
  }
  return s;
}

Int pairing(const Coweight& mu, SubsetMask gamma) {
  if (gamma == 0 || gamma == full_mask(mu.size()))
    throw std::invalid_argument("pairing: chamber weights are proper nonempty subsets");
  return subset_sum(mu, gamma);
}

bool subset_ge(SubsetMask gamma, SubsetMask delta) {
  if (mask_size(gamma) != mask_size(delta))
    throw std::invalid_argument("subset_ge: cardinalities differ");
  std::vector<int> a = subset_elements(gamma & ~delta);
  std::vector<int> b = subset_elements(delta & ~gamma);
  for (size_t m = 0; m < a.size(); ++m)
    if (a[m] >= b[m]) return false;
  return true;
}

bool in_weyl_polytope(const Coweight& x, const Coweight& lambda) {
  if (x.size() != lambda.size())
    throw std::invalid_argument("in_weyl_polytope: size mismatch");
  if (!lambda.is_dominant())
    throw std::invalid_argument("in_weyl_polytope: lambda not dominant");
  if (x.sum() != lambda.sum()) return false;
  std::vector<Int> xs = x.entries;
  std::sort(xs.begin(), xs.end(), std::greater<Int>());
  Int px = 0, pl = 0;
  for (int r = 0; r + 1 <= x.size(); ++r) {
    px += xs[static_cast<size_t>(r)];
    pl += lambda[r];
    if (px > pl) return false;
  }
  return true;
}

Coweight parse_coweight(const std::string& csv) {
  Coweight w;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad coweight entry: " + tok);
    w.entries.push_back(v);
  }
  if (w.entries.empty()) throw std::invalid_argument("empty coweight");
  return w;
}

}  // namespace hivemv
