#pragma once

#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

/// A partition of element indices compatible with all four operations.
/// Canonical form: block ids numbered by first occurrence, so two equal
/// partitions have equal block_of arrays.
struct Congruence {
  std::vector<int> block_of;
  int num_blocks = 0;

  bool operator==(const Congruence& o) const { return block_of == o.block_of; }
  bool related(int x, int y) const { return block_of[x] == block_of[y]; }
  bool is_identity() const {
    return num_blocks == static_cast<int>(block_of.size());
  }
  bool is_total() const { return num_blocks == 1; }

  static Congruence identity(int n);
  static Congruence total(int n);
  static Congruence from_blocks(const std::vector<int>& raw_block_of);
};

inline constexpr int kDefaultMaxCongruenceSize = 40;

bool is_compatible(const FiniteAlgebra& a, const Congruence& c);

// c refines d: every c-block is contained in a d-block.
bool refines(const Congruence& c, const Congruence& d);

Congruence join_congruences(const Congruence& c, const Congruence& d);

// Least congruence merging x and y, by pair propagation to a fixpoint.
Congruence principal_congruence(const FiniteAlgebra& a, int x, int y);

// Least congruence merging every listed pair.
Congruence generated_congruence(const FiniteAlgebra& a,
                                const std::vector<std::pair<int, int>>& pairs);

// All congruences: principal ones closed under pairwise join, plus the
// identity. Sorted coarsest-last (by number of blocks descending, then
// block array), which is a linear extension of refinement.
std::vector<Congruence> congruence_lattice(
    const FiniteAlgebra& a, int max_size = kDefaultMaxCongruenceSize);

struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> projection;  // element -> block index
};

// Throws precondition_error if c is not compatible with a.
QuotientResult quotient(const FiniteAlgebra& a, const Congruence& c);

}  // namespace twistlab
