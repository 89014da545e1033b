#include "twistlab/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace twistlab {

namespace {

// Union-find with path compression; no ranks, sizes here are tiny.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns true if the classes were distinct.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

Congruence canonicalize(UnionFind& uf) {
  const int n = static_cast<int>(uf.parent.size());
  Congruence c;
  c.block_of.assign(n, -1);
  std::vector<int> root_block(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (root_block[r] < 0) root_block[r] = next++;
    c.block_of[x] = root_block[r];
  }
  c.num_blocks = next;
  return c;
}

// Merge (x,y) and propagate compatibility under all four operations.
void propagate(const FiniteAlgebra& a, UnionFind& uf, int x0, int y0) {
  std::vector<std::pair<int, int>> work;
  if (uf.unite(x0, y0)) work.emplace_back(x0, y0);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < a.size; ++z) {
      // both argument positions, so broken (non-commutative) tables are
      // still handled soundly
      const std::pair<int, int> images[] = {
          {a.meet(x, z), a.meet(y, z)}, {a.meet(z, x), a.meet(z, y)},
          {a.join(x, z), a.join(y, z)}, {a.join(z, x), a.join(z, y)},
          {a.mul(x, z), a.mul(y, z)},   {a.mul(z, x), a.mul(z, y)},
          {a.imp(x, z), a.imp(y, z)},   {a.imp(z, x), a.imp(z, y)},
      };
      for (auto [u, v] : images)
        if (uf.unite(u, v)) work.emplace_back(u, v);
    }
  }
}

}  // namespace

Congruence Congruence::identity(int n) {
  Congruence c;
  c.block_of.resize(n);
  std::iota(c.block_of.begin(), c.block_of.end(), 0);
  c.num_blocks = n;
  return c;
}

Congruence Congruence::total(int n) {
  Congruence c;
  c.block_of.assign(n, 0);
  c.num_blocks = 1;
  return c;
}

Congruence Congruence::from_blocks(const std::vector<int>& raw) {
  const int n = static_cast<int>(raw.size());
  Congruence c;
  c.block_of.assign(n, -1);
  std::vector<int> remap;
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (size_t k = 0; k < remap.size(); ++k)
      if (remap[k] == raw[x]) {
        found = static_cast<int>(k);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(remap.size());
      remap.push_back(raw[x]);
    }
    c.block_of[x] = found;
  }
  c.num_blocks = static_cast<int>(remap.size());
  return c;
}

bool is_compatible(const FiniteAlgebra& a, const Congruence& c) {
  const int n = a.size;
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2) {
      if (!c.related(x, x2)) continue;
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          if (!c.related(y, y2)) continue;
          if (!c.related(a.meet(x, y), a.meet(x2, y2)) ||
              !c.related(a.join(x, y), a.join(x2, y2)) ||
              !c.related(a.mul(x, y), a.mul(x2, y2)) ||
              !c.related(a.imp(x, y), a.imp(x2, y2)))
            return false;
        }
    }
  return true;
}

bool refines(const Congruence& c, const Congruence& d) {
  const int n = static_cast<int>(c.block_of.size());
  std::vector<int> image(c.num_blocks, -1);
  for (int x = 0; x < n; ++x) {
    int& img = image[c.block_of[x]];
    if (img < 0)
      img = d.block_of[x];
    else if (img != d.block_of[x])
      return false;
  }
  return true;
}

Congruence join_congruences(const Congruence& c, const Congruence& d) {
  const int n = static_cast<int>(c.block_of.size());
  UnionFind uf(n);
  for (int x = 1; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (c.related(x, y) || d.related(x, y)) uf.unite(x, y);
  return canonicalize(uf);
}

Congruence principal_congruence(const FiniteAlgebra& a, int x, int y) {
  if (x < 0 || x >= a.size || y < 0 || y >= a.size)
    throw precondition_error("principal_congruence: index out of range");
  UnionFind uf(a.size);
  propagate(a, uf, x, y);
  return canonicalize(uf);
}

Congruence generated_congruence(
    const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(a.size);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= a.size || y < 0 || y >= a.size)
      throw precondition_error("generated_congruence: index out of range");
    propagate(a, uf, x, y);
  }
  return canonicalize(uf);
}

std::vector<Congruence> congruence_lattice(const FiniteAlgebra& a,
                                           int max_size) {
  if (a.size > max_size)
    throw size_limit_error("congruence lattice bound " +
                           std::to_string(max_size) + " exceeded by " +
                           a.name + " (size " + std::to_string(a.size) + ")");
  std::set<std::vector<int>> seen;
  std::vector<Congruence> all;
  auto push = [&](Congruence c) {
    if (seen.insert(c.block_of).second) all.push_back(std::move(c));
  };
  push(Congruence::identity(a.size));
  for (int x = 1; x < a.size; ++x)
    for (int y = 0; y < x; ++y) push(principal_congruence(a, x, y));
  // close under pairwise join
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < i; ++j) push(join_congruences(all[i], all[j]));
  std::sort(all.begin(), all.end(), [](const Congruence& c, const Congruence& d) {
    if (c.num_blocks != d.num_blocks) return c.num_blocks > d.num_blocks;
    return c.block_of < d.block_of;
  });
  return all;
}

QuotientResult quotient(const FiniteAlgebra& a, const Congruence& c) {
  if (static_cast<int>(c.block_of.size()) != a.size)
    throw precondition_error("quotient: partition size mismatch");
  if (!is_compatible(a, c))
    throw precondition_error("quotient: partition is not a congruence of " +
                             a.name);
  const int nb = c.num_blocks;
  std::vector<int> rep(nb, -1);
  for (int x = 0; x < a.size; ++x)
    if (rep[c.block_of[x]] < 0) rep[c.block_of[x]] = x;
  FiniteAlgebra q = FiniteAlgebra::with_size(a.name + "/theta", nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      q.set_meet(i, j, c.block_of[a.meet(rep[i], rep[j])]);
      q.set_join(i, j, c.block_of[a.join(rep[i], rep[j])]);
      q.set_mul(i, j, c.block_of[a.mul(rep[i], rep[j])]);
      q.set_imp(i, j, c.block_of[a.imp(rep[i], rep[j])]);
    }
  q.one = c.block_of[a.one];
  if (a.zero) q.zero = c.block_of[*a.zero];
  return {std::move(q), c.block_of};
}

}  // namespace twistlab
