#include "json_io.hpp"

#include <limits>
#include <set>

namespace hivemv {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

int get_rank(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    bad("expected an object with integer field n");
  int n = j["n"].get<int>();
  if (n < 1 || n > 20) bad("rank n out of range");
  return n;
}

}  // namespace

json coweight_to_json(const Coweight& w) {
  json j = json::array();
  for (Int v : w.entries) j.push_back(v);
  return j;
}

Coweight coweight_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("coweight: expected a nonempty array");
  Coweight w;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad("coweight: entries must be integers");
    w.entries.push_back(v.get<Int>());
  }
  return w;
}

json hive_to_json(const Hive& h) {
  const HiveGrid& g = HiveGrid::get(h.n);
  json values = json::array();
  for (const TrianglePoint& p : g.points)
    values.push_back({{"i", p.i},
                      {"j", p.j},
                      {"k", p.k},
                      {"v", h.values[static_cast<size_t>(g.index(p.i, p.j))]}});
  return {{"n", h.n}, {"values", values}};
}

Hive hive_from_json(const json& j) {
  int n = get_rank(j);
  const HiveGrid& g = HiveGrid::get(n);
  if (!j.contains("values") || !j["values"].is_array()) bad("hive: missing values array");
  Hive h;
  h.n = n;
  h.values.assign(g.points.size(), 0);
  std::vector<bool> seen(g.points.size(), false);
  for (const auto& e : j["values"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("v"))
      bad("hive: each value needs fields i, j, v");
    int i = e["i"].get<int>(), jj = e["j"].get<int>();
    if (i < 0 || jj < 0 || i + jj > n) bad("hive: point outside the triangle");
    if (e.contains("k") && e["k"].get<int>() != n - i - jj)
      bad("hive: inconsistent k coordinate");
    int idx = g.index(i, jj);
    if (seen[static_cast<size_t>(idx)]) bad("hive: duplicate point");
    seen[static_cast<size_t>(idx)] = true;
    h.values[static_cast<size_t>(idx)] = e["v"].get<Int>();
  }
  for (bool b : seen)
    if (!b) bad("hive: incomplete labelling");
  return h;
}

json bz_to_json(const BZDatum& m) {
  const SubsetTable& tbl = SubsetTable::get(m.n);
  json table = json::array();
  for (SubsetMask s : tbl.masks) {
    json subset = json::array();
    for (int x : subset_elements(s)) subset.push_back(x);
    table.push_back({{"subset", subset}, {"v", m.value(s)}});
  }
  return {{"n", m.n}, {"M", table}};
}

BZDatum bz_from_json(const json& j) {
  int n = get_rank(j);
  const SubsetTable& tbl = SubsetTable::get(n);
  if (!j.contains("M") || !j["M"].is_array()) bad("bz datum: missing M array");
  BZDatum m;
  m.n = n;
  m.m.assign(static_cast<size_t>(tbl.count()), 0);
  std::vector<bool> seen(static_cast<size_t>(tbl.count()), false);
  for (const auto& e : j["M"]) {
    if (!e.is_object() || !e.contains("subset") || !e.contains("v"))
      bad("bz datum: each entry needs fields subset, v");
    std::vector<int> elems;
    for (const auto& x : e["subset"]) {
      int a = x.get<int>();
      if (a < 1 || a > n) bad("bz datum: subset element out of range");
      elems.push_back(a);
    }
    std::set<int> uniq(elems.begin(), elems.end());
    if (uniq.size() != elems.size()) bad("bz datum: repeated subset element");
    SubsetMask s = mask_from_elements(elems, n);
    size_t idx = static_cast<size_t>(tbl.index(s));
    if (seen[idx]) bad("bz datum: duplicate subset");
    seen[idx] = true;
    m.m[idx] = e["v"].get<Int>();
  }
  for (bool b : seen)
    if (!b) bad("bz datum: incomplete table");
  return m;
}

json khive_to_json(const KHive& f) {
  const KHiveGrid& g = KHiveGrid::get(f.n, f.k);
  json values = json::array();
  for (size_t t = 0; t < g.points.size(); ++t) {
    json idx = json::array();
    for (int x : g.points[t]) idx.push_back(x);
    values.push_back({{"idx", idx}, {"v", f.values[t]}});
  }
  return {{"n", f.n}, {"k", f.k}, {"values", values}};
}

KHive khive_from_json(const json& j) {
  int n = get_rank(j);
  if (!j.contains("k") || !j["k"].is_number_integer()) bad("khive: missing integer k");
  int k = j["k"].get<int>();
  if (k < 2 || k > 8) bad("khive: k out of range");
  const KHiveGrid& g = KHiveGrid::get(n, k);
  if (!j.contains("values") || !j["values"].is_array()) bad("khive: missing values array");
  KHive f;
  f.n = n;
  f.k = k;
  f.values.assign(g.points.size(), 0);
  std::vector<bool> seen(g.points.size(), false);
  for (const auto& e : j["values"]) {
    if (!e.is_object() || !e.contains("idx") || !e.contains("v"))
      bad("khive: each value needs fields idx, v");
    std::vector<int> t;
    for (const auto& x : e["idx"]) t.push_back(x.get<int>());
    auto it = g.index_of.find(t);
    if (it == g.index_of.end()) bad("khive: index tuple outside the grid");
    size_t idx = static_cast<size_t>(it->second);
    if (seen[idx]) bad("khive: duplicate point");
    seen[idx] = true;
    f.values[idx] = e["v"].get<Int>();
  }
  for (bool b : seen)
    if (!b) bad("khive: incomplete labelling");
  return f;
}

json matrix_to_json(const LaurentMatrix& g) {
  json rows = json::array();
  for (int i = 1; i <= g.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= g.n; ++j) {
      json entry = json::array();
      for (const auto& [e, c] : g.at(i, j).terms) {
        boost::multiprecision::cpp_int num = boost::multiprecision::numerator(c);
        boost::multiprecision::cpp_int den = boost::multiprecision::denominator(c);
        if (num < std::numeric_limits<Int>::min() || num > std::numeric_limits<Int>::max() ||
            den > std::numeric_limits<Int>::max())
          bad("matrix: coefficient too large to serialize");
        entry.push_back({e, num.convert_to<Int>(), den.convert_to<Int>()});
      }
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  return {{"n", g.n}, {"entries", rows}};
}

LaurentMatrix matrix_from_json(const json& j) {
  int n = get_rank(j);
  if (!j.contains("entries") || !j["entries"].is_array() ||
      j["entries"].size() != static_cast<size_t>(n))
    bad("matrix: entries must be an n-row array");
  LaurentMatrix g = LaurentMatrix::zero(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = j["entries"][static_cast<size_t>(i - 1)];
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      bad("matrix: each row needs n entries");
    for (int c = 1; c <= n; ++c) {
      const auto& entry = row[static_cast<size_t>(c - 1)];
      if (!entry.is_array()) bad("matrix: entry must be a monomial list");
      for (const auto& mono : entry) {
        if (!mono.is_array() || mono.size() != 3) bad("matrix: monomial must be [exp, num, den]");
        Int e = mono[0].get<Int>();
        Int num = mono[1].get<Int>();
        Int den = mono[2].get<Int>();
        if (den == 0) bad("matrix: zero denominator");
        g.at(i, c) += LaurentPoly::term(e, Rational(num) / den);
      }
    }
  }
  return g;
}

}  // namespace hivemv
