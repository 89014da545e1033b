#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

// Chain constructors index elements bottom-to-top, so index order equals
// lattice order and 0 is the bottom, size-1 the top.

FiniteAlgebra trivial_algebra();

// The two-element Boolean algebra.
FiniteAlgebra boolean2();

// n-element bounded chain with mul = meet; imp(x,y) = 1 if x<=y else y.
// Note the parameter counts *elements*: the 3-element chain is godel_chain(3).
FiniteAlgebra godel_chain(int n);  // n >= 2

// (p+1)-element Lukasiewicz chain: mul(i,j) = max(0, i+j-p),
// imp(i,j) = min(p, p-i+j).
FiniteAlgebra wajsberg_chain(int p);  // p >= 1

// k-element nilpotent minimum chain, built as the rotation of a chain:
// even k = 2m is the disconnected rotation of the m-element chain, odd
// k = 2m+1 the connected rotation. Equals the direct formulas
// neg(x) = k-1-x, mul(x,y) = 0 if x+y <= k-1 else min(x,y).
FiniteAlgebra nm_chain(int k);  // k >= 2

// n-element drastic product chain: products of non-unit elements are 0.
FiniteAlgebra dp_chain(int n);  // n >= 2

// Stacks b (taken 0-free) above a minus its top, identifying the tops.
// Element order: a-part first, then b-part, top last. When the top of a is
// not join-irreducible, joins landing on it are repaired to b's bottom.
FiniteAlgebra ordinal_sum(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Two mirrored copies of a (taken 0-free), with or without a self-negating
// midpoint. Results are bounded and involutive.
FiniteAlgebra connected_rotation(const FiniteAlgebra& a);
FiniteAlgebra disconnected_rotation(const FiniteAlgebra& a);

// The 5-element chain 0 < b < a^2 < a < 1 with a^3 = a^2, ab = 0,
// neg(a) = neg(a^2) = b. Tables are frozen literals; a test re-derives the
// implication from the product by residuation.
FiniteAlgebra rigid_witness_c5();

// ---------------------------------------------------------------------------
// Algebra-spec DSL
//
//   expr := atom | call
//   atom := "B2" | "C5" | ("G"|"L"|"N"|"DP") digits
//   call := "osum(" expr "," expr ")"
//         | ("crot("|"drot("|"K("|"K0(") expr ")"
//
// Whitespace is insignificant. Derived names are deterministic, e.g.
// "K(osum(B2,L2))".

struct AlgebraSpec {
  enum class Kind { B2, C5, G, L, N, DP, Table, OSum, CRot, DRot, K, K0 };
  Kind kind;
  int param = 0;                      // for G/L/N/DP
  std::shared_ptr<FiniteAlgebra> table;  // for Kind::Table
  std::vector<AlgebraSpec> args;      // 1 or 2 children for calls

  static AlgebraSpec table_of(FiniteAlgebra a);
  std::string render() const;
};

AlgebraSpec parse_spec(const std::string& text);  // throws parse_error
FiniteAlgebra build_spec(const AlgebraSpec& spec);
FiniteAlgebra build_spec(const std::string& text);

}  // namespace twistlab
