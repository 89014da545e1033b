#include "twistlab/classify.hpp"

#include <algorithm>

#include "twistlab/catalog.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

SIResult is_subdirectly_irreducible(const FiniteAlgebra& a, int max_size) {
  if (a.size > max_size)
    throw size_limit_error("congruence bound exceeded by " + a.name);
  if (a.size <= 1) return {false, std::nullopt};
  // Every nontrivial congruence contains a principal one, so the monolith
  // exists iff the nontrivial principal congruences have a least element.
  std::vector<Congruence> principals;
  for (int x = 1; x < a.size; ++x)
    for (int y = 0; y < x; ++y) {
      Congruence c = principal_congruence(a, x, y);
      if (std::find(principals.begin(), principals.end(), c) ==
          principals.end())
        principals.push_back(std::move(c));
    }
  Congruence* least = &principals[0];
  for (auto& c : principals)
    if (refines(c, *least)) least = &c;
  for (auto& c : principals)
    if (!refines(*least, c)) return {false, std::nullopt};
  return {true, *least};
}

bool is_simple(const FiniteAlgebra& a, int max_size) {
  if (a.size > max_size)
    throw size_limit_error("congruence bound exceeded by " + a.name);
  if (a.size <= 1) return false;
  for (int x = 1; x < a.size; ++x)
    for (int y = 0; y < x; ++y)
      if (!principal_congruence(a, x, y).is_total()) return false;
  return true;
}

bool is_rigid(const FiniteAlgebra& a, int max_sub, int max_con) {
  if (!a.zero) throw precondition_error("is_rigid needs a bounded algebra");
  if (a.size <= 2) return false;
  if (!is_subdirectly_irreducible(a, max_con).subdirectly_irreducible)
    return false;
  std::vector<int> two_carrier = {*a.zero, a.one};
  std::sort(two_carrier.begin(), two_carrier.end());
  for (const auto& s : enumerate_subuniverses(a, max_sub)) {
    if (static_cast<int>(s.elements.size()) == a.size) continue;
    if (s.elements == two_carrier) continue;
    return false;
  }
  const FiniteAlgebra two = boolean2();
  for (const auto& c : congruence_lattice(a, max_con)) {
    if (c.is_identity() || c.is_total()) continue;
    if (!is_isomorphic(quotient(a, c).algebra, two)) return false;
  }
  return true;
}

bool is_tight_reduct(const FiniteAlgebra& a) {
  if (!a.zero) throw precondition_error("is_tight_reduct needs a bounded algebra");
  if (a.size <= 2) return false;
  for (int x = 0; x < a.size; ++x) {
    if (x == a.one || x == *a.zero) continue;
    if (static_cast<int>(
            generated_subuniverse_zero_free(a, {x}).elements.size()) != a.size)
      return false;
  }
  return true;
}

SubUniverse stiffk3_subalgebra(const FiniteAlgebra& a, int max_con) {
  SIResult si = is_subdirectly_irreducible(a, max_con);
  if (!si.subdirectly_irreducible)
    throw precondition_error("stiffk3_subalgebra: " + a.name + " is not SI");
  if (si.monolith->is_total())
    throw precondition_error("stiffk3_subalgebra: " + a.name +
                             " is simple, no proper monolith");
  FiniteAlgebra k = twist_product(a);
  PairIndexing ix{a.size};
  std::vector<std::pair<int, int>> lift;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (si.monolith->related(x, y))
        lift.emplace_back(ix.index(x, a.one), ix.index(y, a.one));
  Congruence theta = generated_congruence(k, lift);
  const int oo = ix.index(*a.zero, *a.zero);
  std::vector<int> carrier;
  for (int e = 0; e < k.size; ++e)
    if (!theta.related(e, oo)) carrier.push_back(e);
  if (!is_subuniverse(k, carrier))
    throw precondition_error(
        "stiffk3_subalgebra: complement of the (0,0)-class is not closed");
  return SubUniverse{std::move(carrier)};
}

bool is_meet_irreducible(const FiniteAlgebra& a, int x) {
  for (int y = 0; y < a.size; ++y)
    for (int z = 0; z < a.size; ++z)
      if (y != x && z != x && a.meet(y, z) == x) return false;
  return true;
}

bool is_join_irreducible(const FiniteAlgebra& a, int x) {
  for (int y = 0; y < a.size; ++y)
    for (int z = 0; z < a.size; ++z)
      if (y != x && z != x && a.join(y, z) == x) return false;
  return true;
}

}  // namespace twistlab
