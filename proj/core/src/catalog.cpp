#include "twistlab/catalog.hpp"

#include <algorithm>

namespace twistlab {

namespace {

// Fills meet/join of a chain whose index order is the lattice order.
void fill_chain_lattice(FiniteAlgebra& a) {
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      a.set_meet(x, y, std::min(x, y));
      a.set_join(x, y, std::max(x, y));
    }
}

}  // namespace

FiniteAlgebra trivial_algebra() {
  FiniteAlgebra a = FiniteAlgebra::with_size("1", 1);
  a.one = 0;
  a.zero = 0;
  return a;
}

FiniteAlgebra boolean2() {
  FiniteAlgebra a = FiniteAlgebra::with_size("B2", 2);
  fill_chain_lattice(a);
  a.mul_tab = a.meet_tab;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) a.set_imp(x, y, x <= y ? 1 : y);
  a.one = 1;
  a.zero = 0;
  return a;
}

FiniteAlgebra godel_chain(int n) {
  if (n < 2) throw precondition_error("godel_chain needs n >= 2");
  FiniteAlgebra a = FiniteAlgebra::with_size("G" + std::to_string(n), n);
  fill_chain_lattice(a);
  a.mul_tab = a.meet_tab;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.set_imp(x, y, x <= y ? n - 1 : y);
  a.one = n - 1;
  a.zero = 0;
  return a;
}

FiniteAlgebra wajsberg_chain(int p) {
  if (p < 1) throw precondition_error("wajsberg_chain needs parameter >= 1");
  const int n = p + 1;
  FiniteAlgebra a = FiniteAlgebra::with_size("L" + std::to_string(p), n);
  fill_chain_lattice(a);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.set_mul(x, y, std::max(0, x + y - p));
      a.set_imp(x, y, std::min(p, p - x + y));
    }
  a.one = p;
  a.zero = 0;
  return a;
}

FiniteAlgebra nm_chain(int k) {
  if (k < 2) throw precondition_error("nm_chain needs k >= 2");
  const int m = k / 2;  // rotated chain has m elements
  FiniteAlgebra base = m == 1 ? trivial_algebra() : godel_chain(m);
  FiniteAlgebra a =
      k % 2 == 0 ? disconnected_rotation(base) : connected_rotation(base);
  a.name = "N" + std::to_string(k);
  return a;
}

FiniteAlgebra dp_chain(int n) {
  if (n < 2) throw precondition_error("dp_chain needs n >= 2");
  FiniteAlgebra a = FiniteAlgebra::with_size("DP" + std::to_string(n), n);
  fill_chain_lattice(a);
  const int top = n - 1, coatom = n - 2;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.set_mul(x, y, (x == top || y == top) ? std::min(x, y) : 0);
      if (x <= y)
        a.set_imp(x, y, top);
      else if (x < top)  // 1 > x > y
        a.set_imp(x, y, coatom);
      else
        a.set_imp(x, y, y);
    }
  a.one = top;
  a.zero = 0;
  return a;
}

FiniteAlgebra ordinal_sum(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.zero) throw precondition_error("ordinal_sum: lower summand must be bounded");
  if (!a.is_integral() || b.lattice_top() != b.one)
    throw precondition_error("ordinal_sum: summands must be integral");

  const int n = a.size + b.size - 1;
  FiniteAlgebra s = FiniteAlgebra::with_size(
      "osum(" + a.name + "," + b.name + ")", n);

  // Layout: a-part (a minus its top, in a's index order), then b-part
  // (b minus its top), then the shared top.
  const int top = n - 1;
  std::vector<int> a_to_s(a.size), b_to_s(b.size);
  std::vector<int> s_to_a(n, -1), s_to_b(n, -1);
  int next = 0;
  for (int x = 0; x < a.size; ++x) {
    if (x == a.one) { a_to_s[x] = top; continue; }
    a_to_s[x] = next;
    s_to_a[next] = x;
    ++next;
  }
  const int b_first = next;
  for (int x = 0; x < b.size; ++x) {
    if (x == b.one) { b_to_s[x] = top; continue; }
    b_to_s[x] = next;
    s_to_b[next] = x;
    ++next;
  }
  s_to_a[top] = a.one;
  s_to_b[top] = b.one;
  s.one = top;
  s.zero = a_to_s[*a.zero];

  // 0 = a-part, 1 = b-part, 2 = shared top
  auto block = [&](int x) { return x == top ? 2 : (x >= b_first ? 1 : 0); };

  // Join repair target: image of b's bottom (the top itself if b is trivial).
  bool top_join_irreducible = true;
  for (int x = 0; x < a.size && top_join_irreducible; ++x)
    for (int y = 0; y < a.size && top_join_irreducible; ++y)
      if (x != a.one && y != a.one && a.join(x, y) == a.one)
        top_join_irreducible = false;
  const int b_bottom = b.lattice_bottom();
  if (b_bottom < 0)
    throw precondition_error("ordinal_sum: upper summand has no bottom");
  const int repair = b_to_s[b_bottom];
  (void)top_join_irreducible;  // finite b is always bounded; repair is total

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int bx = block(x), by = block(y);
      int meet, join, mul, imp;
      if (bx == 2 || by == 2) {
        const int other = bx == 2 ? y : x;
        meet = other;
        join = top;
        mul = other;
        imp = bx == 2 ? y : top;  // top->y = y; x->top = top
      } else if (bx == by) {
        if (bx == 0) {
          const int xa = s_to_a[x], ya = s_to_a[y];
          meet = a_to_s[a.meet(xa, ya)];
          const int j = a.join(xa, ya);
          join = j == a.one ? repair : a_to_s[j];
          mul = a_to_s[a.mul(xa, ya)];
          imp = a_to_s[a.imp(xa, ya)];
        } else {
          const int xb = s_to_b[x], yb = s_to_b[y];
          meet = b_to_s[b.meet(xb, yb)];
          join = b_to_s[b.join(xb, yb)];
          mul = b_to_s[b.mul(xb, yb)];
          imp = b_to_s[b.imp(xb, yb)];
        }
      } else if (bx == 0) {  // x below, y in b-part
        meet = x;
        join = y;
        mul = x;
        imp = top;
      } else {  // x in b-part, y below
        meet = y;
        join = x;
        mul = y;
        imp = y;
      }
      s.set_meet(x, y, meet);
      s.set_join(x, y, join);
      s.set_mul(x, y, mul);
      s.set_imp(x, y, imp);
    }
  return s;
}

namespace {

// Levels 0 < 1/2 < 1 encoded as 0,1,2 with the 3-element Lukasiewicz
// structure driving the rotation cases.
int level_mul(int x, int y) { return std::max(0, x + y - 2); }
int level_imp(int x, int y) { return std::min(2, 2 - x + y); }

FiniteAlgebra rotate(const FiniteAlgebra& a, bool connected) {
  if (a.one != a.lattice_top())
    throw precondition_error("rotation: input must be integral");
  const int m = a.size;
  const int n = connected ? 2 * m + 1 : 2 * m;
  FiniteAlgebra r = FiniteAlgebra::with_size(
      std::string(connected ? "crot(" : "drot(") + a.name + ")", n);

  // Negative block lists a in reverse index order so that chains come out
  // bottom-to-top; optional midpoint; positive block in index order.
  // level(i): 0 for the negative block, 1 for the midpoint, 2 positive.
  auto level = [&](int i) {
    if (i < m) return 0;
    if (connected && i == m) return 1;
    return 2;
  };
  auto payload = [&](int i) {
    if (i < m) return m - 1 - i;
    if (connected && i == m) return a.one;
    return connected ? i - m - 1 : i - m;
  };
  auto make = [&](int lev, int pay) {
    if (lev == 0) return m - 1 - pay;
    if (lev == 1) return m;
    return connected ? m + 1 + pay : m + pay;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = level(i), y = level(j);
      const int p = payload(i), q = payload(j);
      // meet / join follow the level order, with the payload order reversed
      // on the negative block
      int meet, join;
      if (x == y) {
        if (x == 2) {
          meet = make(2, a.meet(p, q));
          join = make(2, a.join(p, q));
        } else if (x == 0) {
          meet = make(0, a.join(p, q));
          join = make(0, a.meet(p, q));
        } else {
          meet = join = i;  // single midpoint
        }
      } else if (x < y) {
        meet = i;
        join = j;
      } else {
        meet = j;
        join = i;
      }

      int mul;
      if (x == 2 && y == 2) {
        mul = make(2, a.mul(p, q));
      } else if (x != 2 && y != 2) {
        mul = make(level_mul(x, y), a.one);
      } else {
        // exactly one factor on the top level; (u,v) = the other one
        const int lv = x == 2 ? y : x;
        const int pv = x == 2 ? q : p;
        const int pt = x == 2 ? p : q;
        if (lv == 1)
          mul = make(1, a.one);
        else
          mul = make(0, a.imp(pt, pv));
      }

      int imp;
      if (x == 2 && y == 2)
        imp = make(2, a.imp(p, q));
      else if (x == 0 && y == 0)
        imp = make(2, a.imp(q, p));
      else if (x == 2 && y == 0)
        imp = make(0, a.mul(p, q));
      else
        imp = make(level_imp(x, y), a.one);

      r.set_meet(i, j, meet);
      r.set_join(i, j, join);
      r.set_mul(i, j, mul);
      r.set_imp(i, j, imp);
    }

  r.one = make(2, a.one);
  r.zero = make(0, a.one);
  return r;
}

}  // namespace

FiniteAlgebra connected_rotation(const FiniteAlgebra& a) {
  return rotate(a, true);
}

FiniteAlgebra disconnected_rotation(const FiniteAlgebra& a) {
  return rotate(a, false);
}

FiniteAlgebra rigid_witness_c5() {
  // 0 < b < a^2 < a < 1 at indices 0..4; derived once by residuation closure
  // from a^3 = a^2, ab = 0 and frozen.
  FiniteAlgebra c = FiniteAlgebra::with_size("C5", 5);
  fill_chain_lattice(c);
  const int mul[5][5] = {
      {0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1},
      {0, 0, 2, 2, 2},
      {0, 0, 2, 2, 3},
      {0, 1, 2, 3, 4},
  };
  const int imp[5][5] = {
      {4, 4, 4, 4, 4},
      {3, 4, 4, 4, 4},
      {1, 1, 4, 4, 4},
      {1, 1, 3, 4, 4},
      {0, 1, 2, 3, 4},
  };
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      c.set_mul(x, y, mul[x][y]);
      c.set_imp(x, y, imp[x][y]);
    }
  c.one = 4;
  c.zero = 0;
  return c;
}

}  // namespace twistlab
