#pragma once

#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

/// A subset of a parent algebra's element indices, closed under the four
/// operations and containing the constants. Carrier is kept sorted.
struct SubUniverse {
  std::vector<int> elements;

  bool contains(int x) const;
  size_t size() const { return elements.size(); }
  bool operator==(const SubUniverse& o) const = default;
};

inline constexpr int kDefaultMaxSubuniverseSize = 30;

bool is_subuniverse(const FiniteAlgebra& a, const std::vector<int>& carrier);

// Least subuniverse containing gens, one, and zero when present.
SubUniverse generated_subuniverse(const FiniteAlgebra& a,
                                  const std::vector<int>& gens);

// Closure under the four operations and 1 only; 0 is not seeded even on a
// bounded algebra (it may still be reached through the operations).
SubUniverse generated_subuniverse_zero_free(const FiniteAlgebra& a,
                                            const std::vector<int>& gens);

// All subuniverses, in deterministic order (by size, then carrier).
// Works by closure-BFS: grow the constant subuniverse one element at a time.
std::vector<SubUniverse> enumerate_subuniverses(
    const FiniteAlgebra& a, int max_size = kDefaultMaxSubuniverseSize);

// One representative carrier per isomorphism class of induced algebras.
std::vector<SubUniverse> enumerate_subuniverses_up_to_iso(
    const FiniteAlgebra& a, int max_size = kDefaultMaxSubuniverseSize);

// The algebra on the carrier with elements renumbered in carrier order.
// The carrier must contain one (and zero when the parent is bounded).
FiniteAlgebra induced_algebra(const FiniteAlgebra& a, const SubUniverse& s,
                              const std::string& name = "");

}  // namespace twistlab
