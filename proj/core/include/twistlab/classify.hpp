#pragma once

#include <optional>

#include "twistlab/congruence.hpp"
#include "twistlab/subuniverse.hpp"

namespace twistlab {

struct SIResult {
  bool subdirectly_irreducible = false;
  std::optional<Congruence> monolith;
};

// SI iff there is a least nontrivial congruence. Decided on the minimal
// principal congruences, without building the whole lattice.
SIResult is_subdirectly_irreducible(
    const FiniteAlgebra& a, int max_size = kDefaultMaxCongruenceSize);

bool is_simple(const FiniteAlgebra& a,
               int max_size = kDefaultMaxCongruenceSize);

// |A|>2, SI, the only subuniverses are A and {0,1}, and every proper
// nontrivial quotient is the two-element Boolean algebra.
bool is_rigid(const FiniteAlgebra& a,
              int max_sub = kDefaultMaxSubuniverseSize,
              int max_con = kDefaultMaxCongruenceSize);

// |A|>2 and every element outside {0,1} generates A without using the zero
// constant (closure under the four operations and 1 only).
bool is_tight_reduct(const FiniteAlgebra& a);

bool is_meet_irreducible(const FiniteAlgebra& a, int x);
bool is_join_irreducible(const FiniteAlgebra& a, int x);

// For a rigid algebra with a proper nontrivial monolith mu: the pairs of
// the twist product not related to (0,0) under the lift of mu. The result
// is an admissible subuniverse of twist_product(a) whose only proper
// nontrivial quotient is the three-element K-lattice. Throws when a is
// simple (the hypothesis fails).
SubUniverse stiffk3_subalgebra(const FiniteAlgebra& a,
                               int max_con = kDefaultMaxCongruenceSize);

}  // namespace twistlab
