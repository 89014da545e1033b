#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twistlab/congruence.hpp"
#include "twistlab/subuniverse.hpp"

namespace twistlab {

/// Row-major bijection between pairs of base-algebra indices and elements
/// of the twist product: index(i,j) = i*base + j.
struct PairIndexing {
  int base = 0;
  int index(int i, int j) const { return i * base + j; }
  std::pair<int, int> unindex(int k) const { return {k / base, k % base}; }
};

/// K-expansion of a bounded algebra: the algebra on A x A with
///   (a,b) | (c,d) = (a|c, b&d)          (a,b) & (c,d) = (a&c, b|d)
///   (a,b) * (c,d) = (ac, (a->d)&(c->b))
///   (a,b) -> (c,d) = ((a->c)&(d->b), ad)
/// identity (1,1), zero (0,1), top (1,0) = ~zero.
FiniteAlgebra twist_product(const FiniteAlgebra& a);

struct NegativeCone {
  FiniteAlgebra algebra;
  std::vector<int> inclusion;  // cone index -> parent index
};

// {x : x <= 1} with implication truncated to (x->y)&1. Input must satisfy
// the BKL profile.
NegativeCone negative_cone(const FiniteAlgebra& b);

// The map a |-> (a&1, ~a&1) from b into twist_product(negative_cone(b)),
// as b-index -> pair index of K(b^-). Always an injective homomorphism;
// surjective exactly when a self-fixed o with ~o=o, o&1=0 exists.
std::vector<int> canonical_embedding(const FiniteAlgebra& b);

inline constexpr int kMaxAdmissibleBase = 12;

// The subuniverse of twist_product(a) generated by the negative cone
// {(x,1) : x in A}.
SubUniverse minimal_admissible(const FiniteAlgebra& a);

// All subuniverses of K(a) whose negative cone is the full cone, smallest
// first, then by carrier. Requires |a| <= kMaxAdmissibleBase.
std::vector<SubUniverse> enumerate_admissible(const FiniteAlgebra& a);

/// Up-closed, meet-closed nonempty subset of a base algebra.
struct LatticeFilter {
  std::vector<int> elements;  // sorted
  bool contains(int x) const;
  bool operator==(const LatticeFilter& o) const = default;
};

bool is_lattice_filter(const FiniteAlgebra& a, const std::vector<int>& set);

std::vector<LatticeFilter> enumerate_lattice_filters(const FiniteAlgebra& a);

// Dense elements: x with neg(x) = 0.
std::vector<int> dense_elements(const FiniteAlgebra& a);

// Filters containing all dense elements, on a Heyting / Stonean base.
std::vector<LatticeFilter> enumerate_regular_filters(const FiniteAlgebra& h);
std::vector<LatticeFilter> enumerate_good_filters(const FiniteAlgebra& a);

// {(x,y) : x (+) y in F} for involutive a, where x (+) y = neg(x) -> y.
// Throws if the resulting carrier fails to be closed.
SubUniverse filter_subalgebra_involutive(const FiniteAlgebra& a,
                                         const LatticeFilter& f);

// {(x,y) : x v y in F} for a Heyting base and a regular filter.
SubUniverse filter_subalgebra_heyting(const FiniteAlgebra& h,
                                      const LatticeFilter& f);

// {(x,y) : neg(x) -> neg(neg(y)) in F} for a Stonean base and a good filter.
SubUniverse filter_subalgebra_stonean(const FiniteAlgebra& a,
                                      const LatticeFilter& f);

// Transfers an admissible subuniverse of K(a) to one of K(ordinal_sum(a,b)):
// the image of S plus every pair touching the upper summand.
SubUniverse ordinal_transfer(const SubUniverse& s, const FiniteAlgebra& a,
                             const FiniteAlgebra& b);

/// The poset X_n of pairs (a_i, a_j), i >= j > 1, of a drastic product
/// chain, ordered coordinatewise. Pairs are stored as element indices of
/// dp_chain(n), i.e. {(p,q) : 0 <= p <= q <= n-3}.
struct DpPoset {
  int n = 0;
  std::vector<std::pair<int, int>> elements;
  bool leq(int i, int j) const;  // indices into elements
};

DpPoset dp_xn_poset(int n);  // n >= 4

// All up-sets of the poset, as sorted index lists, in deterministic order.
std::vector<std::vector<int>> all_up_sets(const DpPoset& p);

// K_n^U = K_n^empty plus the symmetrized up-set. `upset` holds indices into
// dp_xn_poset(n).elements and must be up-closed.
SubUniverse dp_upset_subalgebra(int n, const std::vector<int>& upset);

// The up-set of X_n induced by an up-set of X_m (m < n) under the standard
// inclusion of drastic product chains: nonzero coordinates shift up by n-m,
// zero coordinates stay at the bottom.
std::vector<int> dp_transfer_upset(int m, int n,
                                   const std::vector<int>& upset_m);

// The unique element o with ~o = o and o&1 = 0, if present. Throws if two
// elements satisfy the equations (the base failed the BKL laws).
std::optional<int> find_self_fixed_element(const FiniteAlgebra& b);

}  // namespace twistlab
