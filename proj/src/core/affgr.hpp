#pragma once

#include <random>

#include "bz.hpp"
#include "laurent.hpp"

namespace hivemv {

// Square matrix over Laurent polynomials.  The action convention is by
// columns: g.e_j = sum_i g_ij e_i.
struct LaurentMatrix {
  int n = 0;
  std::vector<LaurentPoly> e;  // row-major

  LaurentPoly& at(int i, int j) {  // 1-based
    return e[static_cast<size_t>((i - 1) * n + (j - 1))];
  }
  const LaurentPoly& at(int i, int j) const {
    return e[static_cast<size_t>((i - 1) * n + (j - 1))];
  }

  static LaurentMatrix zero(int n);
  static LaurentMatrix identity(int n);
  // diag(t^{mu_1}, ..., t^{mu_n})
  static LaurentMatrix t_power(const Coweight& mu);
};

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

// Determinant of the submatrix on the given rows and columns (equal
// cardinality) by permutation expansion.  Empty subsets give 1.
LaurentPoly minor_det(const LaurentMatrix& g, SubsetMask rows, SubsetMask cols);
LaurentPoly full_det(const LaurentMatrix& g);

// Valuation of g applied to the wedge basis vector of the column set gamma:
// the coefficients over row sets are the minors on (rows, gamma), so the
// value is the least minor valuation.  Finite for invertible g (required,
// checked); gamma may be any subset including empty and full.
Int d_gamma(const LaurentMatrix& g, SubsetMask gamma);

// Sign of the permutation obtained by concatenating the blocks, each sorted
// ascending; 0 when the blocks do not partition {1..n}.
int partition_sign(const std::vector<SubsetMask>& blocks, int n);

struct XiTerm {
  std::vector<SubsetMask> blocks;
  int sign = 0;
};

// The determinant-line vector inside Lambda^{s_1} x ... x Lambda^{s_k} as a
// signed sum of wedge tensors: one term per ordered partition of {1..n}
// with block sizes s, sign as in partition_sign.  Sorted on the block
// tuples.
std::vector<XiTerm> xi_terms(int n, const std::vector<int>& sizes);

// Valuation of (g_1, ..., g_k) applied to the xi_terms vector: the least
// valuation over all coefficient polynomials of the image, each coefficient
// a signed sum of per-factor minors.  All g_m must be invertible.
Int h_function(const std::vector<LaurentMatrix>& gs, const std::vector<int>& sizes);

// Valuation of the x^i y^j z^k coefficient of det(x g1 + y g2 + z g3);
// no value when that coefficient is the zero polynomial.
std::optional<Int> speyer_s(const LaurentMatrix& g1, const LaurentMatrix& g2,
                            const LaurentMatrix& g3, int i, int j, int k);

// Minor-valuation table of a single matrix, checked against the tropical
// Pluecker relations.  Generic matrices satisfy all instances; accidental
// cancellations in special matrices can break some.
struct GenericPluckerReport {
  int total = 0;    // instances checked
  int holding = 0;  // instances satisfied
  BZDatum m;
  std::vector<TropicalPluckerViolation> violations;
};

GenericPluckerReport check_generic_plucker(const LaurentMatrix& g);

// Seeded samplers.  Matrices are resampled until invertible; entries have
// exponents in [exp_lo, exp_hi] and integer coefficients in [-bound, bound].
LaurentMatrix random_laurent_matrix(int n, std::mt19937_64& rng, Int exp_lo = -1,
                                    Int exp_hi = 2, int coeff_bound = 9);
// Unit lower times upper triangular with unit constant terms on the
// diagonal: an invertible matrix over power series.
LaurentMatrix random_go_element(int n, std::mt19937_64& rng);
// Constant rational matrix (possibly singular).
LaurentMatrix random_constant_matrix(int n, std::mt19937_64& rng, int bound = 9);

}  // namespace hivemv
