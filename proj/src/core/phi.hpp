#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "bz.hpp"
#include "hive.hpp"

namespace hivemv {

// Two derivations of the same chamber-weight value disagreed during
// propagation: the input labelling is not a hive.
struct tropical_plucker_inconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F_{ijk} = M_{{k+1..k+i}} + nu_{k+i+1} + ... + nu_n.  Raises if the result
// fails the rhombus conditions, which indicates an invalid datum.
Hive bz_to_hive(const BZDatum& M, const Coweight& nu);

// Inverse of bz_to_hive.  Interval subsets are read directly off the hive;
// the remaining chamber weights are derived by walking the reduced-word
// graph of w_0: each braid move exposes one new chamber weight, whose value
// solves the tropical Plucker relation at the move.  Passing a seed
// randomizes the traversal order (the result must not depend on it).
BZDatum hive_to_bz(const Hive& F, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// min over disjoint pairs (alpha, beta), |alpha| = i, |beta| = j, of
// M_alpha + <nu, beta>.
Int min_formula(const BZDatum& M, const Coweight& nu, int i, int j, int k);

struct PhiReport {
  bool pass = true;
  Int mv_count = 0;
  Int hive_count = 0;
  std::string failure;  // empty when pass
};

// Confirms that the BZ enumeration maps injectively onto the hive
// enumeration, that the round trip is the identity, and that the min
// formula reproduces every hive value.
PhiReport verify_phi_bijection(const Coweight& la, const Coweight& mu, const Coweight& nu);

}  // namespace hivemv
