#include "twistlab/subuniverse.hpp"

#include <algorithm>
#include <set>

#include "twistlab/morphism.hpp"

namespace twistlab {

bool SubUniverse::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool is_subuniverse(const FiniteAlgebra& a, const std::vector<int>& carrier) {
  std::vector<char> in(a.size, 0);
  for (int x : carrier) in[x] = 1;
  if (!in[a.one]) return false;
  if (a.zero && !in[*a.zero]) return false;
  for (int x : carrier)
    for (int y : carrier)
      if (!in[a.meet(x, y)] || !in[a.join(x, y)] || !in[a.mul(x, y)] ||
          !in[a.imp(x, y)])
        return false;
  return true;
}

namespace {

SubUniverse close(const FiniteAlgebra& a, std::vector<char> in) {
  std::vector<int> worklist;
  for (int x = 0; x < a.size; ++x)
    if (in[x]) worklist.push_back(x);
  std::vector<int> members = worklist;
  while (!worklist.empty()) {
    const int x = worklist.back();
    worklist.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      const int y = members[i];
      for (int v : {a.meet(x, y), a.join(x, y), a.mul(x, y), a.imp(x, y),
                    a.meet(y, x), a.join(y, x), a.mul(y, x), a.imp(y, x)}) {
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
          worklist.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubUniverse{std::move(members)};
}

}  // namespace

SubUniverse generated_subuniverse(const FiniteAlgebra& a,
                                  const std::vector<int>& gens) {
  std::vector<char> in(a.size, 0);
  for (int g : gens) {
    if (g < 0 || g >= a.size)
      throw precondition_error("generator index out of range");
    in[g] = 1;
  }
  in[a.one] = 1;
  if (a.zero) in[*a.zero] = 1;
  return close(a, std::move(in));
}

SubUniverse generated_subuniverse_zero_free(const FiniteAlgebra& a,
                                            const std::vector<int>& gens) {
  std::vector<char> in(a.size, 0);
  for (int g : gens) {
    if (g < 0 || g >= a.size)
      throw precondition_error("generator index out of range");
    in[g] = 1;
  }
  in[a.one] = 1;
  return close(a, std::move(in));
}

std::vector<SubUniverse> enumerate_subuniverses(const FiniteAlgebra& a,
                                                int max_size) {
  if (a.size > max_size)
    throw size_limit_error("subuniverse enumeration bound " +
                           std::to_string(max_size) + " exceeded by " +
                           a.name + " (size " + std::to_string(a.size) + ")");
  std::set<std::vector<int>> seen;
  std::vector<SubUniverse> frontier{generated_subuniverse(a, {})};
  seen.insert(frontier[0].elements);
  std::vector<SubUniverse> all = frontier;
  while (!frontier.empty()) {
    std::vector<SubUniverse> next;
    for (const auto& s : frontier) {
      for (int e = 0; e < a.size; ++e) {
        if (s.contains(e)) continue;
        auto gens = s.elements;
        gens.push_back(e);
        SubUniverse bigger = generated_subuniverse(a, gens);
        if (seen.insert(bigger.elements).second) {
          next.push_back(bigger);
          all.push_back(std::move(bigger));
        }
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

std::vector<SubUniverse> enumerate_subuniverses_up_to_iso(
    const FiniteAlgebra& a, int max_size) {
  auto all = enumerate_subuniverses(a, max_size);
  std::vector<SubUniverse> reps;
  std::vector<FiniteAlgebra> rep_algs;
  for (const auto& s : all) {
    FiniteAlgebra cand = induced_algebra(a, s);
    bool fresh = true;
    for (const auto& r : rep_algs)
      if (is_isomorphic(cand, r)) {
        fresh = false;
        break;
      }
    if (fresh) {
      reps.push_back(s);
      rep_algs.push_back(std::move(cand));
    }
  }
  return reps;
}

FiniteAlgebra induced_algebra(const FiniteAlgebra& a, const SubUniverse& s,
                              const std::string& name) {
  const int n = static_cast<int>(s.elements.size());
  std::vector<int> pos(a.size, -1);
  for (int i = 0; i < n; ++i) pos[s.elements[i]] = i;
  if (pos[a.one] < 0)
    throw precondition_error("carrier of " + a.name + " misses 1");
  if (a.zero && pos[*a.zero] < 0)
    throw precondition_error("carrier of " + a.name + " misses 0");
  FiniteAlgebra out = FiniteAlgebra::with_size(
      name.empty() ? a.name + "|sub" + std::to_string(n) : name, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = s.elements[i], y = s.elements[j];
      const int m = pos[a.meet(x, y)], jo = pos[a.join(x, y)],
                mu = pos[a.mul(x, y)], im = pos[a.imp(x, y)];
      if (m < 0 || jo < 0 || mu < 0 || im < 0)
        throw precondition_error("carrier of " + a.name +
                                 " is not closed under the operations");
      out.set_meet(i, j, m);
      out.set_join(i, j, jo);
      out.set_mul(i, j, mu);
      out.set_imp(i, j, im);
    }
  out.one = pos[a.one];
  if (a.zero) out.zero = pos[*a.zero];
  return out;
}

}  // namespace twistlab
