#include "twistlab/morphism.hpp"

#include <algorithm>
#include <array>

#include "twistlab/subuniverse.hpp"

namespace twistlab {

namespace {

// Properties preserved forward by any homomorphism fixing the constants.
// Used to filter candidate images before the expensive propagation.
unsigned property_mask(const FiniteAlgebra& a, int x) {
  unsigned m = 0;
  if (a.mul(x, x) == x) m |= 1u;
  if (a.sim(x) == x) m |= 2u;
  if (a.zero) {
    if (a.mul(x, x) == *a.zero) m |= 4u;
    if (a.neg(x) == *a.zero) m |= 8u;
    if (a.neg(a.neg(x)) == x) m |= 16u;
    if (a.imp(a.imp(x, *a.zero), *a.zero) == *a.zero) m |= 32u;
  }
  return m;
}

int order_rank(const FiniteAlgebra& a, int x) {
  int r = 0;
  for (int y = 0; y < a.size; ++y)
    if (a.leq(y, x)) ++r;
  return r;
}

// Invariant tuple preserved by isomorphisms.
std::array<int, 4> iso_tuple(const FiniteAlgebra& a, int x) {
  return {order_rank(a, x), static_cast<int>(property_mask(a, x)),
          order_rank(a, a.mul(x, x)), order_rank(a, a.sim(x))};
}

struct Searcher {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  bool bijective;
  std::vector<unsigned> mask_a, mask_b;
  std::vector<std::array<int, 4>> tup_a, tup_b;
  std::vector<int> f;       // a -> b, -1 unassigned
  std::vector<char> used;   // injectivity on the b side
  std::vector<int> trail;   // assignment order, for rollback

  Searcher(const FiniteAlgebra& a, const FiniteAlgebra& b, bool bij)
      : a(a), b(b), bijective(bij), f(a.size, -1), used(b.size, 0) {
    mask_a.resize(a.size);
    mask_b.resize(b.size);
    for (int x = 0; x < a.size; ++x) mask_a[x] = property_mask(a, x);
    for (int u = 0; u < b.size; ++u) mask_b[u] = property_mask(b, u);
    if (bijective) {
      tup_a.resize(a.size);
      tup_b.resize(b.size);
      for (int x = 0; x < a.size; ++x) tup_a[x] = iso_tuple(a, x);
      for (int u = 0; u < b.size; ++u) tup_b[u] = iso_tuple(b, u);
    }
  }

  bool candidate_ok(int x, int u) const {
    if (used[u]) return false;
    if (bijective) return tup_a[x] == tup_b[u];
    return (mask_a[x] & ~mask_b[u]) == 0;
  }

  // Assigns f(x)=u and closes under all operation consequences.
  // Returns false on contradiction; the caller rolls back via the trail.
  bool assign_and_close(int x, int u) {
    size_t head = trail.size();
    raw_assign(x, u);
    if (conflict) return false;
    while (head < trail.size()) {
      const int y = trail[head++];
      const int v = f[y];
      for (size_t k = 0; k < head; ++k) {
        const int z = trail[k];
        const int w = f[z];
        if (!push_image(a.meet(y, z), b.meet(v, w))) return false;
        if (!push_image(a.join(y, z), b.join(v, w))) return false;
        if (!push_image(a.mul(y, z), b.mul(v, w))) return false;
        if (!push_image(a.imp(y, z), b.imp(v, w))) return false;
        if (!push_image(a.meet(z, y), b.meet(w, v))) return false;
        if (!push_image(a.join(z, y), b.join(w, v))) return false;
        if (!push_image(a.mul(z, y), b.mul(w, v))) return false;
        if (!push_image(a.imp(z, y), b.imp(w, v))) return false;
      }
    }
    return true;
  }

  bool conflict = false;

  // Returns true if a fresh assignment was made; sets conflict on clash.
  bool raw_assign(int x, int u) {
    if (f[x] >= 0) {
      if (f[x] != u) conflict = true;
      return false;
    }
    if (used[u] || !candidate_ok(x, u)) {
      conflict = true;
      return false;
    }
    f[x] = u;
    used[u] = 1;
    trail.push_back(x);
    return true;
  }

  bool push_image(int x, int u) {
    raw_assign(x, u);
    if (conflict) return false;
    return true;
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      const int x = trail.back();
      trail.pop_back();
      used[f[x]] = 0;
      f[x] = -1;
    }
    conflict = false;
  }

  bool search(const std::vector<int>& gens, size_t i) {
    if (i == gens.size()) return finish();
    const int x = gens[i];
    if (f[x] >= 0) return search(gens, i + 1);
    for (int u = 0; u < b.size; ++u) {
      if (!candidate_ok(x, u)) continue;
      const size_t mark = trail.size();
      if (assign_and_close(x, u) && search(gens, i + 1)) return true;
      rollback(mark);
    }
    return false;
  }

  // Everything reachable from the generators is assigned; for a bijection
  // onto a same-sized algebra that is the whole map.
  bool finish() {
    for (int x = 0; x < a.size; ++x)
      if (f[x] < 0) return false;
    return true;
  }
};

std::optional<std::vector<int>> find_map(const FiniteAlgebra& a,
                                         const FiniteAlgebra& b,
                                         bool bijective) {
  if (a.bounded() != b.bounded()) return std::nullopt;
  if (bijective ? a.size != b.size : a.size > b.size) return std::nullopt;

  if (bijective) {
    // multiset fingerprint must agree
    std::vector<std::array<int, 4>> fa, fb;
    for (int x = 0; x < a.size; ++x) fa.push_back(iso_tuple(a, x));
    for (int u = 0; u < b.size; ++u) fb.push_back(iso_tuple(b, u));
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (fa != fb) return std::nullopt;
  } else {
    // counting reject on preserved properties
    for (unsigned bit = 0; bit < 6; ++bit) {
      int ca = 0, cb = 0;
      for (int x = 0; x < a.size; ++x)
        if (property_mask(a, x) & (1u << bit)) ++ca;
      for (int u = 0; u < b.size; ++u)
        if (property_mask(b, u) & (1u << bit)) ++cb;
      if (ca > cb) return std::nullopt;
    }
  }

  // generating set of a beyond the constants, greedily smallest-first
  std::vector<int> gens;
  {
    SubUniverse cur = generated_subuniverse(a, {});
    while (static_cast<int>(cur.elements.size()) < a.size) {
      int pick = -1;
      for (int x = 0; x < a.size; ++x)
        if (!cur.contains(x)) {
          pick = x;
          break;
        }
      gens.push_back(pick);
      auto g = cur.elements;
      g.push_back(pick);
      cur = generated_subuniverse(a, g);
    }
  }

  Searcher s(a, b, bijective);
  const size_t mark = s.trail.size();
  if (!s.assign_and_close(a.one, b.one)) {
    s.rollback(mark);
    return std::nullopt;
  }
  if (a.bounded()) {
    if (!s.assign_and_close(*a.zero, *b.zero)) {
      s.rollback(mark);
      return std::nullopt;
    }
  }
  if (!s.search(gens, 0)) return std::nullopt;
  return s.f;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteAlgebra& a,
                                              const FiniteAlgebra& b) {
  return find_map(a, b, true);
}

std::optional<std::vector<int>> exists_embedding(const FiniteAlgebra& a,
                                                 const FiniteAlgebra& b) {
  return find_map(a, b, false);
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != a.size) return false;
  for (int v : map)
    if (v < 0 || v >= b.size) return false;
  if (map[a.one] != b.one) return false;
  if (a.bounded() != b.bounded()) return false;
  if (a.bounded() && map[*a.zero] != *b.zero) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
      if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      if (map[a.imp(x, y)] != b.imp(map[x], map[y])) return false;
    }
  return true;
}

std::optional<std::vector<int>> is_isomorphic_zero_free(
    const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra a0 = a;
  FiniteAlgebra b0 = b;
  a0.zero.reset();
  b0.zero.reset();
  return is_isomorphic(a0, b0);
}

}  // namespace twistlab
