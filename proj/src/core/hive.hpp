#pragma once

#include <array>
#include <vector>

#include "coweight.hpp"

namespace hivemv {

// Lattice point of the size-n triangle: i+j+k = n, all nonnegative.
struct TrianglePoint {
  int i = 0, j = 0, k = 0;
  bool operator==(const TrianglePoint&) const = default;
};

// Which way the rhombus inequalities point.  Standard is the concave
// orientation F_a + F_b <= F_c + F_d across each unit rhombus; Reversed
// flips every inequality and exists for calibration checks.
enum class RhombusOrientation { Standard, Reversed };

// Static geometry of the triangular grid, cached per n.  Canonical point
// order: rows j = 0..n bottom-up, i descending inside each row.
struct HiveGrid {
  struct Rhombus {
    int type = 0;                // 1, 2 or 3
    TrianglePoint base;          // the (i,j,k) the inequality is indexed by
    int a = 0, b = 0, c = 0, d = 0;  // point indices: F_a + F_b <= F_c + F_d
    int last = 0;                // max canonical index among the four points
  };

  int n = 0;
  std::vector<TrianglePoint> points;
  std::vector<Rhombus> rhombi;
  std::vector<std::vector<int>> completed_at;  // rhombus ids by `last`

  int index(int i, int j) const;
  int size() const { return static_cast<int>(points.size()); }

  static const HiveGrid& get(int n);
};

// Hive values in canonical point order, normalized so the (0,0,n) corner
// is 0.  Validity is not implied; see check_hive.
struct Hive {
  int n = 0;
  std::vector<Int> values;

  Int at(int i, int j) const { return values[static_cast<size_t>(HiveGrid::get(n).index(i, j))]; }
  bool operator==(const Hive&) const = default;
  bool operator<(const Hive& o) const { return values < o.values; }
};

Hive normalize_hive(const Hive& h);  // subtract the (0,0,n) value

struct RhombusViolation {
  int type = 0;
  TrianglePoint base;
  Int lhs = 0, rhs = 0;  // inequality lhs/rhs in the checked orientation
};

// All violated rhombus inequalities of a labelling (normalization not
// required).  Empty result = valid hive.
std::vector<RhombusViolation> check_hive(
    const Hive& h, RhombusOrientation orientation = RhombusOrientation::Standard);

struct HiveBoundary {
  Coweight la, mu, nu;
};

// Boundary coweights read off the three edges by consecutive differences.
HiveBoundary hive_boundary(const Hive& h);

// (la, mu, nu) -> (la, mu, dual(nu)): the boundary triple in the symmetric
// convention where all three edges are read counterclockwise.
std::array<Coweight, 3> symmetric_boundary(const Coweight& la, const Coweight& mu,
                                           const Coweight& nu);

// All hives with the given dominant boundary, lexicographically sorted on
// the canonical value vector.  Empty when the sums do not match.
std::vector<Hive> enumerate_hives(
    const Coweight& la, const Coweight& mu, const Coweight& nu,
    RhombusOrientation orientation = RhombusOrientation::Standard);

// Cyclic coordinate rotation: rotate_hive(H)(x1,x2,x3) = H(x3,x1,x2),
// renormalized.  Rotations preserve the rhombus conditions and cycle the
// symmetric boundary triple.
Hive rotate_hive(const Hive& h);

}  // namespace hivemv
