#pragma once

#include <optional>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

// Operation-preserving maps fixing the constants (1, and 0 when present).
// Both algebras must agree on boundedness to be comparable.
//
// The searches are deterministic: candidate images are tried in index order
// and the map returned is the first one found. Backtracking assigns a small
// generating set; every other image is forced by closure, which prunes hard.

// Witness bijection a -> b, or nullopt.
std::optional<std::vector<int>> is_isomorphic(const FiniteAlgebra& a,
                                              const FiniteAlgebra& b);

// Witness injective homomorphism a -> b, or nullopt.
std::optional<std::vector<int>> exists_embedding(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b);

// True iff map (a-index -> b-index) preserves all operations and constants.
bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map);

// Compare 0-free reducts: zero designations are ignored on both sides.
std::optional<std::vector<int>> is_isomorphic_zero_free(
    const FiniteAlgebra& a, const FiniteAlgebra& b);

}  // namespace twistlab
