#include "twistlab/twist.hpp"

#include <algorithm>
#include <set>

#include "twistlab/catalog.hpp"
#include "twistlab/term.hpp"

namespace twistlab {

FiniteAlgebra twist_product(const FiniteAlgebra& a) {
  if (!a.zero)
    throw precondition_error("twist_product needs a bounded algebra");
  const int n = a.size;
  PairIndexing ix{n};
  FiniteAlgebra k = FiniteAlgebra::with_size("K(" + a.name + ")",
                                             n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const int x = ix.index(p, q), y = ix.index(r, s);
          k.set_join(x, y, ix.index(a.join(p, r), a.meet(q, s)));
          k.set_meet(x, y, ix.index(a.meet(p, r), a.join(q, s)));
          k.set_mul(x, y,
                    ix.index(a.mul(p, r),
                             a.meet(a.imp(p, s), a.imp(r, q))));
          k.set_imp(x, y,
                    ix.index(a.meet(a.imp(p, r), a.imp(s, q)),
                             a.mul(p, s)));
        }
  k.one = ix.index(a.one, a.one);
  k.zero = ix.index(*a.zero, a.one);
  return k;
}

NegativeCone negative_cone(const FiniteAlgebra& b) {
  if (!satisfies_profile(b, Profile::BKL))
    throw precondition_error("negative_cone: input " + b.name +
                             " is not a bounded K-lattice");
  std::vector<int> incl;
  for (int x = 0; x < b.size; ++x)
    if (b.leq(x, b.one)) incl.push_back(x);
  const int n = static_cast<int>(incl.size());
  std::vector<int> pos(b.size, -1);
  for (int i = 0; i < n; ++i) pos[incl[i]] = i;
  FiniteAlgebra c = FiniteAlgebra::with_size(b.name + "^-", n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = incl[i], y = incl[j];
      c.set_meet(i, j, pos[b.meet(x, y)]);
      c.set_join(i, j, pos[b.join(x, y)]);
      c.set_mul(i, j, pos[b.mul(x, y)]);
      c.set_imp(i, j, pos[b.meet(b.imp(x, y), b.one)]);
    }
  c.one = pos[b.one];
  c.zero = pos[*b.zero];
  return {std::move(c), std::move(incl)};
}

std::vector<int> canonical_embedding(const FiniteAlgebra& b) {
  NegativeCone cone = negative_cone(b);
  std::vector<int> pos(b.size, -1);
  for (size_t i = 0; i < cone.inclusion.size(); ++i)
    pos[cone.inclusion[i]] = static_cast<int>(i);
  PairIndexing ix{cone.algebra.size};
  std::vector<int> f(b.size);
  for (int x = 0; x < b.size; ++x) {
    const int l = pos[b.meet(x, b.one)];
    const int r = pos[b.meet(b.sim(x), b.one)];
    f[x] = ix.index(l, r);
  }
  return f;
}

SubUniverse minimal_admissible(const FiniteAlgebra& a) {
  if (!a.zero)
    throw precondition_error("minimal_admissible needs a bounded algebra");
  FiniteAlgebra k = twist_product(a);
  PairIndexing ix{a.size};
  std::vector<int> gens;
  for (int x = 0; x < a.size; ++x) gens.push_back(ix.index(x, a.one));
  return generated_subuniverse(k, gens);
}

std::vector<SubUniverse> enumerate_admissible(const FiniteAlgebra& a) {
  if (!a.zero)
    throw precondition_error("enumerate_admissible needs a bounded algebra");
  if (a.size > kMaxAdmissibleBase)
    throw size_limit_error("enumerate_admissible base bound " +
                           std::to_string(kMaxAdmissibleBase) +
                           " exceeded by " + a.name);
  FiniteAlgebra k = twist_product(a);
  SubUniverse least = minimal_admissible(a);

  // Closure-BFS upward from the minimal admissible carrier; every admissible
  // subuniverse contains it, and each one is reachable by adding one absent
  // element at a time.
  std::set<std::vector<int>> seen{least.elements};
  std::vector<SubUniverse> frontier{least};
  std::vector<SubUniverse> all{least};
  while (!frontier.empty()) {
    std::vector<SubUniverse> next;
    for (const auto& s : frontier)
      for (int e = 0; e < k.size; ++e) {
        if (s.contains(e)) continue;
        auto gens = s.elements;
        gens.push_back(e);
        SubUniverse bigger = generated_subuniverse(k, gens);
        if (seen.insert(bigger.elements).second) {
          next.push_back(bigger);
          all.push_back(std::move(bigger));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [](const SubUniverse& x, const SubUniverse& y) {
              if (x.elements.size() != y.elements.size())
                return x.elements.size() < y.elements.size();
              return x.elements < y.elements;
            });
  return all;
}

bool LatticeFilter::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_lattice_filter(const FiniteAlgebra& a, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<char> in(a.size, 0);
  for (int x : set) in[x] = 1;
  if (!in[a.one]) return false;
  for (int x : set) {
    for (int y = 0; y < a.size; ++y)
      if (a.leq(x, y) && !in[y]) return false;
    for (int y : set)
      if (!in[a.meet(x, y)]) return false;
  }
  return true;
}

std::vector<LatticeFilter> enumerate_lattice_filters(const FiniteAlgebra& a) {
  // Same closure-BFS pattern: grow {1} by one element at a time, closing
  // upward and under meets.
  auto close = [&](std::vector<char> in) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < a.size; ++x) {
        if (!in[x]) continue;
        for (int y = 0; y < a.size; ++y) {
          if (a.leq(x, y) && !in[y]) {
            in[y] = 1;
            changed = true;
          }
          if (in[y] && !in[a.meet(x, y)]) {
            in[a.meet(x, y)] = 1;
            changed = true;
          }
        }
      }
    }
    std::vector<int> out;
    for (int x = 0; x < a.size; ++x)
      if (in[x]) out.push_back(x);
    return LatticeFilter{std::move(out)};
  };

  std::vector<char> seed(a.size, 0);
  seed[a.one] = 1;
  LatticeFilter top = close(std::move(seed));
  std::set<std::vector<int>> seen{top.elements};
  std::vector<LatticeFilter> frontier{top};
  std::vector<LatticeFilter> all{top};
  while (!frontier.empty()) {
    std::vector<LatticeFilter> next;
    for (const auto& f : frontier)
      for (int e = 0; e < a.size; ++e) {
        if (f.contains(e)) continue;
        std::vector<char> in(a.size, 0);
        for (int x : f.elements) in[x] = 1;
        in[e] = 1;
        LatticeFilter bigger = close(std::move(in));
        if (seen.insert(bigger.elements).second) {
          next.push_back(bigger);
          all.push_back(std::move(bigger));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [](const LatticeFilter& x, const LatticeFilter& y) {
              if (x.elements.size() != y.elements.size())
                return x.elements.size() < y.elements.size();
              return x.elements < y.elements;
            });
  return all;
}

std::vector<int> dense_elements(const FiniteAlgebra& a) {
  if (!a.zero) throw precondition_error("dense elements need a bounded algebra");
  std::vector<int> out;
  for (int x = 0; x < a.size; ++x)
    if (a.neg(x) == *a.zero) out.push_back(x);
  return out;
}

namespace {

std::vector<LatticeFilter> filters_containing_dense(const FiniteAlgebra& a) {
  auto dense = dense_elements(a);
  std::vector<LatticeFilter> out;
  for (auto& f : enumerate_lattice_filters(a)) {
    bool ok = true;
    for (int d : dense)
      if (!f.contains(d)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<LatticeFilter> enumerate_regular_filters(const FiniteAlgebra& h) {
  if (!satisfies_profile(h, Profile::HEYTING) || !h.zero)
    throw precondition_error("regular filters need a Heyting algebra, got " +
                             h.name);
  return filters_containing_dense(h);
}

std::vector<LatticeFilter> enumerate_good_filters(const FiniteAlgebra& a) {
  if (!a.zero || !satisfies_profile(a, Profile::STONEAN))
    throw precondition_error("good filters need a Stonean algebra, got " +
                             a.name);
  return filters_containing_dense(a);
}

namespace {

SubUniverse pairs_satisfying(const FiniteAlgebra& a, const char* what,
                             bool (*pred)(const FiniteAlgebra&,
                                          const LatticeFilter&, int, int),
                             const LatticeFilter& f) {
  FiniteAlgebra k = twist_product(a);
  PairIndexing ix{a.size};
  std::vector<int> carrier;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y)
      if (pred(a, f, x, y)) carrier.push_back(ix.index(x, y));
  std::sort(carrier.begin(), carrier.end());
  if (!is_subuniverse(k, carrier))
    throw precondition_error(std::string(what) +
                             ": carrier is not closed in K(" + a.name +
                             "); characterization hypothesis violated");
  return SubUniverse{std::move(carrier)};
}

}  // namespace

SubUniverse filter_subalgebra_involutive(const FiniteAlgebra& a,
                                         const LatticeFilter& f) {
  if (!a.zero || !satisfies_profile(a, Profile::INVOLUTIVE))
    throw precondition_error("filter_subalgebra_involutive needs an involutive base");
  if (!is_lattice_filter(a, f.elements))
    throw precondition_error("not a lattice filter");
  return pairs_satisfying(
      a, "involutive filter subalgebra",
      [](const FiniteAlgebra& a, const LatticeFilter& f, int x, int y) {
        return f.contains(a.imp(a.neg(x), y));  // x (+) y
      },
      f);
}

SubUniverse filter_subalgebra_heyting(const FiniteAlgebra& h,
                                      const LatticeFilter& f) {
  if (!h.zero || !satisfies_profile(h, Profile::HEYTING))
    throw precondition_error("filter_subalgebra_heyting needs a Heyting base");
  {
    auto dense = dense_elements(h);
    for (int d : dense)
      if (!f.contains(d))
        throw precondition_error("filter is not regular: misses dense element " +
                                 std::to_string(d));
  }
  if (!is_lattice_filter(h, f.elements))
    throw precondition_error("not a lattice filter");
  return pairs_satisfying(
      h, "Heyting filter subalgebra",
      [](const FiniteAlgebra& a, const LatticeFilter& f, int x, int y) {
        return f.contains(a.join(x, y));
      },
      f);
}

SubUniverse filter_subalgebra_stonean(const FiniteAlgebra& a,
                                      const LatticeFilter& f) {
  if (!a.zero || !satisfies_profile(a, Profile::STONEAN))
    throw precondition_error("filter_subalgebra_stonean needs a Stonean base");
  {
    auto dense = dense_elements(a);
    for (int d : dense)
      if (!f.contains(d))
        throw precondition_error("filter is not good: misses dense element " +
                                 std::to_string(d));
  }
  if (!is_lattice_filter(a, f.elements))
    throw precondition_error("not a lattice filter");
  return pairs_satisfying(
      a, "Stonean filter subalgebra",
      [](const FiniteAlgebra& a, const LatticeFilter& f, int x, int y) {
        return f.contains(a.imp(a.neg(x), a.neg(a.neg(y))));
      },
      f);
}

SubUniverse ordinal_transfer(const SubUniverse& s, const FiniteAlgebra& a,
                             const FiniteAlgebra& b) {
  FiniteAlgebra k_a = twist_product(a);
  {
    // s must be admissible in K(a)
    if (!is_subuniverse(k_a, s.elements))
      throw precondition_error("ordinal_transfer: input is not a subuniverse");
    PairIndexing ix{a.size};
    for (int x = 0; x < a.size; ++x)
      if (!s.contains(ix.index(x, a.one)))
        throw precondition_error("ordinal_transfer: input is not admissible");
  }
  FiniteAlgebra sum = ordinal_sum(a, b);
  const int n = sum.size;
  PairIndexing ix_a{a.size}, ix_s{n};

  // a-element -> sum element, mirroring the layout in ordinal_sum
  std::vector<int> a_to_s(a.size);
  {
    int next = 0;
    for (int x = 0; x < a.size; ++x) {
      if (x == a.one) {
        a_to_s[x] = n - 1;
        continue;
      }
      a_to_s[x] = next++;
    }
  }
  std::vector<char> in_a_part(n, 0);
  for (int x = 0; x < a.size; ++x) in_a_part[a_to_s[x]] = 1;

  std::vector<int> carrier;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const bool upper = !in_a_part[u] || !in_a_part[v] || u == n - 1 ||
                         v == n - 1;
      if (upper) {
        carrier.push_back(ix_s.index(u, v));
        continue;
      }
      // both strictly in the a-part: keep iff the preimage pair lies in s
      int pa = -1, qa = -1;
      for (int x = 0; x < a.size; ++x) {
        if (a_to_s[x] == u) pa = x;
        if (a_to_s[x] == v) qa = x;
      }
      if (s.contains(ix_a.index(pa, qa)))
        carrier.push_back(ix_s.index(u, v));
    }
  std::sort(carrier.begin(), carrier.end());
  FiniteAlgebra k_sum = twist_product(sum);
  if (!is_subuniverse(k_sum, carrier))
    throw precondition_error("ordinal_transfer: transferred carrier not closed");
  return SubUniverse{std::move(carrier)};
}

bool DpPoset::leq(int i, int j) const {
  return elements[i].first <= elements[j].first &&
         elements[i].second <= elements[j].second;
}

DpPoset dp_xn_poset(int n) {
  if (n < 4) throw precondition_error("dp_xn_poset needs n >= 4");
  DpPoset p;
  p.n = n;
  for (int q = 0; q <= n - 3; ++q)
    for (int pp = 0; pp <= q; ++pp) p.elements.emplace_back(pp, q);
  std::sort(p.elements.begin(), p.elements.end());
  return p;
}

std::vector<std::vector<int>> all_up_sets(const DpPoset& p) {
  const int m = static_cast<int>(p.elements.size());
  if (m > 20) throw size_limit_error("up-set enumeration bound exceeded");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < m && ok; ++j)
        if (p.leq(i, j) && !(mask & (1u << j))) ok = false;
    }
    if (!ok) continue;
    std::vector<int> u;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) u.push_back(i);
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

SubUniverse dp_upset_subalgebra(int n, const std::vector<int>& upset) {
  DpPoset p = dp_xn_poset(n);
  // validate up-closedness
  std::vector<char> in(p.elements.size(), 0);
  for (int i : upset) {
    if (i < 0 || i >= static_cast<int>(p.elements.size()))
      throw precondition_error("up-set index out of range");
    in[i] = 1;
  }
  for (size_t i = 0; i < p.elements.size(); ++i)
    for (size_t j = 0; j < p.elements.size(); ++j)
      if (in[i] && p.leq(static_cast<int>(i), static_cast<int>(j)) && !in[j])
        throw precondition_error("not an up-set of X_n");

  PairIndexing ix{n};
  const int top = n - 1, coatom = n - 2;
  std::set<int> carrier;
  for (int x = 0; x < n; ++x) {
    carrier.insert(ix.index(x, top));
    carrier.insert(ix.index(top, x));
    carrier.insert(ix.index(x, coatom));
    carrier.insert(ix.index(coatom, x));
  }
  for (int i : upset) {
    auto [pp, q] = p.elements[i];
    carrier.insert(ix.index(pp, q));
    carrier.insert(ix.index(q, pp));
  }
  return SubUniverse{{carrier.begin(), carrier.end()}};
}

std::vector<int> dp_transfer_upset(int m, int n,
                                   const std::vector<int>& upset_m) {
  if (m < 4 || n <= m) throw precondition_error("dp_transfer_upset needs 4 <= m < n");
  DpPoset pm = dp_xn_poset(m);
  DpPoset pn = dp_xn_poset(n);
  auto shift = [&](int coord) { return coord == 0 ? 0 : coord + (n - m); };
  std::vector<char> in(pn.elements.size(), 0);
  for (int i : upset_m) {
    auto [p, q] = pm.elements[i];
    std::pair<int, int> img{shift(p), shift(q)};
    for (size_t j = 0; j < pn.elements.size(); ++j)
      if (pn.elements[j] == img) in[j] = 1;
  }
  // close upward
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < pn.elements.size(); ++i)
      for (size_t j = 0; j < pn.elements.size(); ++j)
        if (in[i] && pn.leq(static_cast<int>(i), static_cast<int>(j)) &&
            !in[j]) {
          in[j] = 1;
          changed = true;
        }
  }
  std::vector<int> out;
  for (size_t i = 0; i < pn.elements.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> find_self_fixed_element(const FiniteAlgebra& b) {
  if (!b.zero)
    throw precondition_error("find_self_fixed_element needs a bounded algebra");
  std::optional<int> found;
  for (int x = 0; x < b.size; ++x) {
    if (b.sim(x) == x && b.meet(x, b.one) == *b.zero) {
      if (found)
        throw precondition_error(
            "two self-fixed elements found; base is not a K-lattice: " +
            b.name);
      found = x;
    }
  }
  return found;
}

}  // namespace twistlab
