#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hivemv {

using Int = long long;

// An integer coweight of GL_n.  Entries may be negative; dominant means
// weakly decreasing.
struct Coweight {
  std::vector<Int> entries;

  Coweight() = default;
  explicit Coweight(std::vector<Int> e) : entries(std::move(e)) {}
  Coweight(std::initializer_list<Int> e) : entries(e) {}

  static Coweight zero(int n) { return Coweight(std::vector<Int>(n, 0)); }

  int size() const { return static_cast<int>(entries.size()); }
  Int operator[](int i) const { return entries[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return entries[static_cast<size_t>(i)]; }

  Int sum() const;
  bool is_dominant() const;
  bool is_zero() const;

  Coweight operator+(const Coweight& o) const;
  Coweight operator-(const Coweight& o) const;

  bool operator==(const Coweight& o) const { return entries == o.entries; }
  bool operator<(const Coweight& o) const { return entries < o.entries; }

  std::string str() const;  // "(2,1,0)"
};

// lambda^vee = -w_0 . lambda = (-lambda_n, ..., -lambda_1).  Involutive,
// preserves dominance.
Coweight dual(const Coweight& la);

// Subsets of {1..n} as bitmasks; bit (a-1) flags element a.
using SubsetMask = std::uint32_t;

std::vector<int> subset_elements(SubsetMask m);          // ascending, 1-based
SubsetMask mask_from_elements(const std::vector<int>& elems, int n);
SubsetMask interval_mask(int lo, int hi);                // {lo..hi}; empty if hi<lo
SubsetMask full_mask(int n);
int mask_size(SubsetMask m);
std::string subset_str(SubsetMask m);                    // "{1,3}"

// Compares subsets by (cardinality, then sorted element list).  This is the
// canonical storage order for BZ tables.
bool subset_canonical_less(SubsetMask a, SubsetMask b);

// All 2^n subsets of {1..n} sorted canonically, with reverse lookup.
struct SubsetTable {
  int n = 0;
  std::vector<SubsetMask> masks;    // canonical order, masks[0] = empty
  std::vector<int> index_of;       // size 2^n

  int index(SubsetMask m) const { return index_of[m]; }
  int count() const { return static_cast<int>(masks.size()); }

  static const SubsetTable& get(int n);
};

// Raw coordinate sum over any subset mask, empty and full included.
Int subset_sum(const Coweight& mu, SubsetMask gamma);

// <mu, gamma> for a chamber weight: gamma must be a proper nonempty subset
// of {1..n}.
Int pairing(const Coweight& mu, SubsetMask gamma);

// The dominance order on equal-size subsets: gamma >= delta iff the sorted
// elements a_1<...<a_r of gamma\delta and b_1<...<b_r of delta\gamma satisfy
// a_m < b_m for all m.  Throws on unequal cardinalities.
bool subset_ge(SubsetMask gamma, SubsetMask delta);

// Membership of x in conv(W.lambda), lambda dominant: equal total sum plus
// partial-sum dominance of the decreasingly sorted entries.
bool in_weyl_polytope(const Coweight& x, const Coweight& lambda);

Coweight parse_coweight(const std::string& csv);  // "2,1,0"

}  // namespace hivemv
