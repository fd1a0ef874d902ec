#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coweight.hpp"
#include "hive.hpp"

namespace hivemv {

// Multi-index grid: k-tuples of nonnegative integers summing to n, in
// lexicographically ascending canonical order.  The normalization anchor
// (0,...,0,n) is always index 0.
struct KHiveGrid {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> points;
  std::map<std::vector<int>, int> index_of;

  // One octahedron relation: base v has sum n-2, axes a<b<c<d are 1-based,
  // and the six fields hold point indices of v + e_x + e_y for the pairs
  // named by the field.
  struct Octahedron {
    std::vector<int> base;
    std::array<int, 4> axes;
    int ad, bc, ab, cd, ac, bd;
  };
  std::vector<Octahedron> octahedra;

  int size() const { return static_cast<int>(points.size()); }
  int index(const std::vector<int>& t) const;
  static const KHiveGrid& get(int n, int k);
};

struct KHive {
  int n = 0;
  int k = 0;
  std::vector<Int> values;  // canonical grid order

  Int at(const std::vector<int>& t) const;
  bool operator==(const KHive& o) const {
    return n == o.n && k == o.k && values == o.values;
  }
  bool operator<(const KHive& o) const { return values < o.values; }
};

struct OctahedronViolation {
  std::vector<int> base;
  std::array<int, 4> axes;
  Int lhs;  // min of the two crossing sums
  Int rhs;
};

// Checks min(F_ad + F_bc, F_ab + F_cd) = F_ac + F_bd for every base v of sum
// n-2 and every axis quadruple a<b<c<d, where F_xy = F(v + e_x + e_y).
// Vacuous for k < 4.
std::vector<OctahedronViolation> check_octahedron(const KHive& f);

// Restriction to the 2-face spanned by three coordinate axes, renormalized
// at the face's own anchor.  face() requires a < b < c; face_ordered accepts
// any order of three distinct axes (odd orders read the face mirrored).
Hive face(const KHive& f, int a, int b, int c);
Hive face_ordered(const KHive& f, const std::array<int, 3>& axes);

// Boundary coweights along the cyclic edges: entry i-1 of the result is read
// along the edge from n*e_{i-1} to n*e_i, with axis 0 meaning axis k.  For
// k = 3 this is (la, mu, dual(nu)) of the plain hive boundary.
std::vector<Coweight> boundary_k(const KHive& f);

// Every axis-triple face satisfies the rhombus conditions and every
// octahedron relation holds.
bool is_valid_khive(const KHive& f);

struct completion_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Octahedron completion of a 4-hive from two of its faces: P is the face on
// axes {1,3,4} in coordinate order (1,3,4), Q the face on axes {1,2,3} in
// coordinate order (2,3,1).  Requires the shared-edge handshake
// nu(Q) == mu(P).  The interior is filled layer by layer in the fourth
// coordinate; each octahedron relation is used exactly once, so the result
// satisfies all of them by construction.  The two remaining faces are then
// checked; a rhombus failure there raises completion_error.
KHive complete_tetrahedron(const Hive& p, const Hive& q);

// One associator step: complete the tetrahedron over (P, Q) and return the
// opposite face pair R = face {1,2,4} and S = face {2,3,4}, both in
// ascending coordinate order.
std::pair<Hive, Hive> associator(const Hive& p, const Hive& q);

// All k-hives with the given boundary, k = weights.size() in [2, 4], sorted
// on the canonical value vector.
std::vector<KHive> enumerate_khives(const std::vector<Coweight>& weights);

}  // namespace hivemv
