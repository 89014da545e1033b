#pragma once

#include <string>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/congruence.hpp"
#include "twistlab/subuniverse.hpp"

namespace twistlab {

/// One isomorphism class of subdirectly irreducible algebras found in HS of
/// the generators, with a canonical display name and provenance note.
struct SIClass {
  FiniteAlgebra rep;
  std::string name;
  std::string provenance;
};

/// The SI classes of a finitely generated variety with the quasi-order
/// leq[i][j] <=> class i lies in HS(class j). For congruence distributive
/// varieties this is exactly "V(i) is a subvariety of V(j)".
struct SIClassCatalog {
  std::vector<SIClass> classes;        // sorted by (size, name)
  std::vector<std::vector<char>> leq;  // reflexive, transitive, antisymmetric
};

struct VarietyLimits {
  int max_sub = kDefaultMaxSubuniverseSize;
  int max_con = kDefaultMaxCongruenceSize;
};

// All SI iso classes arising as quotients of subalgebras of the generators
// (Jonsson's Lemma for finite generators in a congruence distributive
// variety), with the HS quasi-order.
SIClassCatalog si_factors(const std::vector<FiniteAlgebra>& gens,
                          VarietyLimits limits = {});

// V(a) <= V(b): every SI factor of a occurs among the SI factors of b.
bool variety_leq(const FiniteAlgebra& a, const FiniteAlgebra& b,
                 VarietyLimits limits = {});

/// The lattice of subvarieties of V(gens): all down-closed subsets of the
/// SI poset. Nodes are sorted by (size, members); node 0 is the trivial
/// variety T (the empty ideal).
struct VarietyLattice {
  std::vector<std::string> class_names;
  std::vector<std::vector<int>> nodes;        // ideals, as sorted class lists
  std::vector<std::string> labels;            // max classes joined by ","
  std::vector<std::pair<int, int>> covers;    // (lower, upper), sorted
  std::vector<int> join_irreducibles;         // nodes that are principal ideals

  int node_of(const std::vector<int>& ideal) const;
  bool has_cover(int lower, int upper) const;
  int node_by_label(const std::string& label) const;  // -1 if absent
};

VarietyLattice subvariety_lattice(const std::vector<FiniteAlgebra>& gens,
                                  VarietyLimits limits = {});
VarietyLattice lattice_of_catalog(const SIClassCatalog& cat);

// Names of SI classes whose principal ideal covers an atom of the lattice.
std::vector<std::string> almost_minimal_varieties(
    const std::vector<FiniteAlgebra>& gens, VarietyLimits limits = {});

// Byte-deterministic DOT rendering; edges point from lower to upper cover.
std::string emit_dot(const VarietyLattice& l);

// Canonical display name used in catalogs and figure labels; exposed for
// tests. Falls back to a size-tagged placeholder for unrecognized algebras.
std::string canonical_class_name(const FiniteAlgebra& rep);

}  // namespace twistlab
