#include "twistlab/varieties.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twistlab/catalog.hpp"
#include "twistlab/classify.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/term.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

namespace {

// Induced algebra on a carrier that need not contain the zero constant;
// the result is taken zero-free.
FiniteAlgebra induced_zero_free(const FiniteAlgebra& a,
                                const std::vector<int>& carrier) {
  FiniteAlgebra stripped = a;
  stripped.zero.reset();
  return induced_algebra(stripped, SubUniverse{carrier});
}

// All SI iso-class representatives among quotients of subalgebras of g.
std::vector<FiniteAlgebra> hs_si_reps(const FiniteAlgebra& g,
                                      const VarietyLimits& limits) {
  std::vector<FiniteAlgebra> reps;
  auto add = [&](FiniteAlgebra cand) {
    for (const auto& r : reps)
      if (is_isomorphic(cand, r)) return;
    reps.push_back(std::move(cand));
  };
  for (const auto& s : enumerate_subuniverses(g, limits.max_sub)) {
    FiniteAlgebra sub = induced_algebra(g, s);
    for (const auto& c : congruence_lattice(sub, limits.max_con)) {
      if (c.is_total()) continue;
      FiniteAlgebra q = c.is_identity() ? sub : quotient(sub, c).algebra;
      if (q.size <= 1) continue;
      if (!is_subdirectly_irreducible(q, limits.max_con)
               .subdirectly_irreducible)
        continue;
      add(std::move(q));
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Canonical class names.
//
// The display names follow the families the twist literature uses: K3/K4 for
// the two smallest, cardinality names K8/K9/K15/K16 over Godel cones,
// K_{r,n} over Wajsberg cones, K_i(Nk) over nilpotent minimum cones,
// up-set names over drastic product cones, and K0(...)/K(...) for anything
// else recognizable. Unrecognized algebras get a size-tagged placeholder.

std::string zero_free_base_name(const FiniteAlgebra& d);

std::string base_name(const FiniteAlgebra& c) {
  const int n = c.size;
  if (n == 1) return "1";
  if (n == 2) return "B2";
  if (is_isomorphic(c, godel_chain(n))) return "G" + std::to_string(n);
  if (is_isomorphic(c, wajsberg_chain(n - 1)))
    return "L" + std::to_string(n - 1);
  if (n >= 4 && is_isomorphic(c, nm_chain(n))) return "N" + std::to_string(n);
  if (n >= 4 && is_isomorphic(c, dp_chain(n))) return "DP" + std::to_string(n);
  if (is_isomorphic(c, rigid_witness_c5())) return "C5";
  // directly indecomposable Stonean: 2 (+) D with D the nonzero part
  if (c.zero && satisfies_profile(c, Profile::STONEAN)) {
    std::vector<int> nonzero;
    for (int x = 0; x < n; ++x)
      if (x != *c.zero) nonzero.push_back(x);
    bool closed = true;
    for (int x : nonzero)
      for (int y : nonzero)
        if (c.meet(x, y) == *c.zero || c.mul(x, y) == *c.zero ||
            c.imp(x, y) == *c.zero) {
          closed = false;
          break;
        }
    if (closed)
      return "osum(B2," + zero_free_base_name(induced_zero_free(c, nonzero)) +
             ")";
  }
  return "A" + std::to_string(n);
}

std::string zero_free_base_name(const FiniteAlgebra& d) {
  const int n = d.size;
  if (n == 1) return "1";
  if (n == 2) return "B2";
  auto try_named = [&](FiniteAlgebra ref, std::string name) -> std::string {
    if (is_isomorphic_zero_free(d, ref)) return name;
    return "";
  };
  if (auto s = try_named(godel_chain(n), "G" + std::to_string(n)); !s.empty())
    return s;
  if (auto s = try_named(wajsberg_chain(n - 1), "L" + std::to_string(n - 1));
      !s.empty())
    return s;
  if (n >= 4) {
    if (auto s = try_named(nm_chain(n), "N" + std::to_string(n)); !s.empty())
      return s;
    if (auto s = try_named(dp_chain(n), "DP" + std::to_string(n)); !s.empty())
      return s;
  }
  return "D" + std::to_string(n);
}

// Paper-style a_i label for an element index of dp_chain(n): a_i has
// element index n-1-i.
std::string dp_pair_label(int n, std::pair<int, int> e) {
  return "(a" + std::to_string(n - 1 - e.first) + ",a" +
         std::to_string(n - 1 - e.second) + ")";
}

std::string dp_class_name(const FiniteAlgebra& rep, const FiniteAlgebra& cone,
                          int n) {
  (void)cone;
  DpPoset poset = dp_xn_poset(n);
  FiniteAlgebra ref = dp_chain(n);
  FiniteAlgebra k = twist_product(ref);
  for (const auto& u : all_up_sets(poset)) {
    SubUniverse s = dp_upset_subalgebra(n, u);
    if (!is_isomorphic(rep, induced_algebra(k, s))) continue;
    if (u.empty()) return "K0(DP" + std::to_string(n) + ")";
    if (u.size() == poset.elements.size())
      return "K(DP" + std::to_string(n) + ")";
    // name by the minimal generators of the up-set
    std::vector<int> mins;
    for (int i : u) {
      bool minimal = true;
      for (int j : u)
        if (j != i && poset.leq(j, i)) {
          minimal = false;
          break;
        }
      if (minimal) mins.push_back(i);
    }
    std::vector<std::string> labels;
    for (int i : mins) labels.push_back(dp_pair_label(n, poset.elements[i]));
    std::sort(labels.begin(), labels.end(), std::greater<>());
    std::string out = "K_" + std::to_string(n) + "^{";
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ",";
      out += labels[i];
    }
    return out + "}";
  }
  return "";
}

}  // namespace

std::string canonical_class_name(const FiniteAlgebra& rep) {
  static const FiniteAlgebra two = boolean2();
  if (rep.size == 1) return "T";
  {
    FiniteAlgebra k2 = twist_product(two);
    if (rep.size == 4 && is_isomorphic(rep, k2)) return "K4";
    if (rep.size == 3) {
      SubUniverse k3 = minimal_admissible(two);
      if (is_isomorphic(rep, induced_algebra(k2, k3))) return "K3";
    }
  }
  if (!rep.zero || !satisfies_profile(rep, Profile::BKL))
    return base_name(rep);

  FiniteAlgebra cone = negative_cone(rep).algebra;
  const std::string base = base_name(cone);
  const int m = cone.size;

  if (base[0] == 'G') {
    // Godel cones: cardinality names match the literature (K8, K9, ...)
    if (rep.size == m * m) return "K" + std::to_string(m * m);
    if (rep.size == m * m - 1) return "K" + std::to_string(m * m - 1);
  }
  if (base[0] == 'D' && base.size() > 1 && base[1] == 'P') {
    std::string name = dp_class_name(rep, cone, m);
    if (!name.empty()) return name;
  }

  // generic route: position among the admissible subalgebras of K(cone)
  FiniteAlgebra ref = cone;
  if (m <= kMaxAdmissibleBase) {
    FiniteAlgebra k = twist_product(ref);
    auto adms = enumerate_admissible(ref);
    for (size_t i = 0; i < adms.size(); ++i) {
      if (!is_isomorphic(rep, induced_algebra(k, adms[i]))) continue;
      const bool full = adms[i].elements.size() ==
                        static_cast<size_t>(k.size);
      if (base[0] == 'L') {
        // K_{r,n} over the Wajsberg chain L_n; the full one is K(Ln)
        if (full) return "K(" + base + ")";
        return "K_{" + std::to_string(i) + "," + base.substr(1) + "}";
      }
      if (full) return "K(" + base + ")";
      return "K" + std::to_string(i) + "(" + base + ")";
    }
  }
  return "K?(" + base + ")|" + std::to_string(rep.size);
}

SIClassCatalog si_factors(const std::vector<FiniteAlgebra>& gens,
                          VarietyLimits limits) {
  SIClassCatalog cat;
  std::vector<FiniteAlgebra> reps;
  std::vector<std::string> prov;
  for (const auto& g : gens)
    for (auto& r : hs_si_reps(g, limits)) {
      bool fresh = true;
      for (const auto& existing : reps)
        if (is_isomorphic(r, existing)) {
          fresh = false;
          break;
        }
      if (fresh) {
        reps.push_back(std::move(r));
        prov.push_back("HS(" + g.name + ")");
      }
    }

  for (size_t i = 0; i < reps.size(); ++i) {
    SIClass c;
    c.name = canonical_class_name(reps[i]);
    c.rep = std::move(reps[i]);
    c.rep.name = c.name;
    c.provenance = prov[i];
    cat.classes.push_back(std::move(c));
  }
  std::sort(cat.classes.begin(), cat.classes.end(),
            [](const SIClass& a, const SIClass& b) {
              if (a.rep.size != b.rep.size) return a.rep.size < b.rep.size;
              return a.name < b.name;
            });

  // HS quasi-order between classes
  const size_t k = cat.classes.size();
  std::vector<std::vector<FiniteAlgebra>> hs(k);
  for (size_t j = 0; j < k; ++j)
    hs[j] = hs_si_reps(cat.classes[j].rep, limits);
  cat.leq.assign(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (i == j) {
        cat.leq[i][j] = 1;
        continue;
      }
      for (const auto& h : hs[j])
        if (is_isomorphic(cat.classes[i].rep, h)) {
          cat.leq[i][j] = 1;
          break;
        }
    }
  // Jonsson part 2: distinct finite SIs generate distinct varieties, so the
  // quasi-order must be antisymmetric.
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < i; ++j)
      if (cat.leq[i][j] && cat.leq[j][i])
        throw precondition_error(
            "HS order not antisymmetric between " + cat.classes[i].name +
            " and " + cat.classes[j].name);
  return cat;
}

bool variety_leq(const FiniteAlgebra& a, const FiniteAlgebra& b,
                 VarietyLimits limits) {
  auto ca = si_factors({a}, limits);
  auto cb = si_factors({b}, limits);
  for (const auto& cl : ca.classes) {
    bool found = false;
    for (const auto& other : cb.classes)
      if (is_isomorphic(cl.rep, other.rep)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

int VarietyLattice::node_of(const std::vector<int>& ideal) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == ideal) return static_cast<int>(i);
  return -1;
}

bool VarietyLattice::has_cover(int lower, int upper) const {
  return std::find(covers.begin(), covers.end(),
                   std::make_pair(lower, upper)) != covers.end();
}

int VarietyLattice::node_by_label(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

VarietyLattice lattice_of_catalog(const SIClassCatalog& cat) {
  const int k = static_cast<int>(cat.classes.size());
  if (k > 20)
    throw size_limit_error("subvariety lattice: catalog too large (" +
                           std::to_string(k) + " classes)");
  VarietyLattice l;
  for (const auto& c : cat.classes) l.class_names.push_back(c.name);

  // enumerate down-closed subsets
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      if (!(mask & (1u << j))) continue;
      for (int i = 0; i < k && ok; ++i)
        if (cat.leq[i][j] && !(mask & (1u << i))) ok = false;
    }
    if (!ok) continue;
    std::vector<int> ideal;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) ideal.push_back(i);
    l.nodes.push_back(std::move(ideal));
  }
  std::sort(l.nodes.begin(), l.nodes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  // labels: maximal classes of each ideal, "T" for the bottom
  for (const auto& ideal : l.nodes) {
    if (ideal.empty()) {
      l.labels.push_back("T");
      continue;
    }
    std::vector<std::string> max_names;
    for (int i : ideal) {
      bool maximal = true;
      for (int j : ideal)
        if (i != j && cat.leq[i][j]) {
          maximal = false;
          break;
        }
      if (maximal) max_names.push_back(cat.classes[i].name);
    }
    std::sort(max_names.begin(), max_names.end());
    std::string label;
    for (size_t i = 0; i < max_names.size(); ++i) {
      if (i) label += ",";
      label += max_names[i];
    }
    l.labels.push_back(std::move(label));
  }

  // covers: ideals differing by exactly one element
  for (size_t i = 0; i < l.nodes.size(); ++i)
    for (size_t j = 0; j < l.nodes.size(); ++j) {
      if (l.nodes[j].size() != l.nodes[i].size() + 1) continue;
      if (std::includes(l.nodes[j].begin(), l.nodes[j].end(),
                        l.nodes[i].begin(), l.nodes[i].end()))
        l.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::sort(l.covers.begin(), l.covers.end());

  // join-irreducible nodes = principal ideals
  for (int c = 0; c < k; ++c) {
    std::vector<int> down;
    for (int i = 0; i < k; ++i)
      if (cat.leq[i][c]) down.push_back(i);
    l.join_irreducibles.push_back(l.node_of(down));
  }
  std::sort(l.join_irreducibles.begin(), l.join_irreducibles.end());
  return l;
}

VarietyLattice subvariety_lattice(const std::vector<FiniteAlgebra>& gens,
                                  VarietyLimits limits) {
  return lattice_of_catalog(si_factors(gens, limits));
}

std::vector<std::string> almost_minimal_varieties(
    const std::vector<FiniteAlgebra>& gens, VarietyLimits limits) {
  SIClassCatalog cat = si_factors(gens, limits);
  VarietyLattice l = lattice_of_catalog(cat);
  std::vector<int> atoms;
  for (const auto& [lo, hi] : l.covers)
    if (l.nodes[lo].empty()) atoms.push_back(hi);
  std::vector<std::string> out;
  const int k = static_cast<int>(cat.classes.size());
  for (int c = 0; c < k; ++c) {
    std::vector<int> down;
    for (int i = 0; i < k; ++i)
      if (cat.leq[i][c]) down.push_back(i);
    const int node = l.node_of(down);
    for (int atom : atoms)
      if (l.has_cover(atom, node)) {
        out.push_back(cat.classes[c].name);
        break;
      }
  }
  return out;
}

std::string emit_dot(const VarietyLattice& l) {
  std::string out = "digraph variety_lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < l.nodes.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + l.labels[i] + "\"];\n";
  for (const auto& [lo, hi] : l.covers)
    out += "  v" + std::to_string(lo) + " -> v" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace twistlab
