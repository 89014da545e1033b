#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

/// A finite algebra in the signature (meet, join, mul, imp, 1, [0]) given by
/// total operation tables over element indices 0..size-1.
///
/// The lattice order is the one induced by meet: x <= y iff meet(x,y) == x.
/// `one` is the monoid identity; `zero` is present exactly when the algebra
/// is treated as bounded. Values are immutable after construction and every
/// operation on them is pure.
struct FiniteAlgebra {
  std::string name;
  int size = 0;
  std::vector<int> meet_tab;  // row-major size*size
  std::vector<int> join_tab;
  std::vector<int> mul_tab;
  std::vector<int> imp_tab;
  int one = 0;
  std::optional<int> zero;

  // Allocates zeroed tables after checking the global cell cap.
  static FiniteAlgebra with_size(std::string name, int n);

  int meet(int x, int y) const { return meet_tab[x * size + y]; }
  int join(int x, int y) const { return join_tab[x * size + y]; }
  int mul(int x, int y) const { return mul_tab[x * size + y]; }
  int imp(int x, int y) const { return imp_tab[x * size + y]; }

  void set_meet(int x, int y, int v) { meet_tab[x * size + y] = v; }
  void set_join(int x, int y, int v) { join_tab[x * size + y] = v; }
  void set_mul(int x, int y, int v) { mul_tab[x * size + y] = v; }
  void set_imp(int x, int y, int v) { imp_tab[x * size + y] = v; }

  bool leq(int x, int y) const { return meet(x, y) == x; }
  bool bounded() const { return zero.has_value(); }

  // x -> 0; only defined on bounded algebras.
  int neg(int x) const;
  // x -> 1, the paper-style involution candidate.
  int sim(int x) const { return imp(x, one); }

  // Index of the lattice top/bottom, or -1 if there is none.
  int lattice_top() const;
  int lattice_bottom() const;
  bool is_integral() const { return lattice_top() == one; }

  // Throws structural_error if tables are not size*size with in-range entries
  // or the constants are out of range.
  void check_shape() const;

  // Table/constant equality; names are labels and do not participate.
  bool same_tables(const FiniteAlgebra& o) const;
};

// Allocation cap on size*size table cells, configurable through the
// TWISTLAB_MAX_CELLS environment variable. Guards against runaway builds
// like K(K(K(...))) from the CLI.
long max_table_cells();

}  // namespace twistlab
