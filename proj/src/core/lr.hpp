#pragma once

#include "coweight.hpp"

namespace hivemv {

// Littlewood-Richardson coefficient c^{nu}_{la,mu} for partitions (weakly
// decreasing, nonnegative; lengths may differ, trailing zeros allowed).
// Counts semistandard skew tableaux of shape nu/la and content mu whose
// reverse reading word is a lattice word.
Int lr_coefficient(const Coweight& la, const Coweight& mu, const Coweight& nu);

// dim of the irreducible GL_n representation with highest weight la
// (dominant, entries may be negative).
Int weyl_dim(const Coweight& la);

// dim (V_la (x) V_mu (x) V_chi)^{GL_n} for dominant coweights of equal rank.
// Zero unless the total sum vanishes; reduces to an LR coefficient after
// shifting each factor into partition range.
Int triple_invariant_dim(const Coweight& la, const Coweight& mu, const Coweight& chi);

// dim (V_{la^1} (x) ... (x) V_{la^k})^{GL_n}, k >= 2, by iterated tensor
// decomposition.
Int multi_invariant_dim(const std::vector<Coweight>& weights);

// All dominant coweights of rank n with entries in [lo, hi] and the given
// sum, lexicographically sorted.
std::vector<Coweight> dominant_range(int n, Int lo, Int hi, Int total);

}  // namespace hivemv
