#include "twistlab/algebra.hpp"

#include <cstdlib>

namespace twistlab {

long max_table_cells() {
  static const long cached = [] {
    if (const char* env = std::getenv("TWISTLAB_MAX_CELLS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) return v;
    }
    return 1L << 22;
  }();
  return cached;
}

FiniteAlgebra FiniteAlgebra::with_size(std::string name, int n) {
  if (n <= 0) throw structural_error("algebra size must be positive");
  if (static_cast<long>(n) * n > max_table_cells())
    throw size_limit_error("operation tables for size " + std::to_string(n) +
                           " exceed TWISTLAB_MAX_CELLS");
  FiniteAlgebra a;
  a.name = std::move(name);
  a.size = n;
  a.meet_tab.assign(static_cast<size_t>(n) * n, 0);
  a.join_tab.assign(static_cast<size_t>(n) * n, 0);
  a.mul_tab.assign(static_cast<size_t>(n) * n, 0);
  a.imp_tab.assign(static_cast<size_t>(n) * n, 0);
  return a;
}

int FiniteAlgebra::neg(int x) const {
  if (!zero)
    throw precondition_error("negation needs a bounded algebra: " + name);
  return imp(x, *zero);
}

int FiniteAlgebra::lattice_top() const {
  for (int t = 0; t < size; ++t) {
    bool top = true;
    for (int x = 0; x < size && top; ++x) top = leq(x, t);
    if (top) return t;
  }
  return -1;
}

int FiniteAlgebra::lattice_bottom() const {
  for (int b = 0; b < size; ++b) {
    bool bot = true;
    for (int x = 0; x < size && bot; ++x) bot = leq(b, x);
    if (bot) return b;
  }
  return -1;
}

void FiniteAlgebra::check_shape() const {
  const size_t cells = static_cast<size_t>(size) * size;
  if (size <= 0) throw structural_error("algebra size must be positive");
  auto check_table = [&](const std::vector<int>& t, const char* what) {
    if (t.size() != cells)
      throw structural_error(std::string(what) + " table has wrong shape");
    for (size_t k = 0; k < cells; ++k)
      if (t[k] < 0 || t[k] >= size)
        throw structural_error(std::string(what) + " table entry out of range");
  };
  check_table(meet_tab, "meet");
  check_table(join_tab, "join");
  check_table(mul_tab, "mul");
  check_table(imp_tab, "imp");
  if (one < 0 || one >= size)
    throw structural_error("monoid identity index out of range");
  if (zero && (*zero < 0 || *zero >= size))
    throw structural_error("zero index out of range");
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& o) const {
  return size == o.size && one == o.one && zero == o.zero &&
         meet_tab == o.meet_tab && join_tab == o.join_tab &&
         mul_tab == o.mul_tab && imp_tab == o.imp_tab;
}

}  // namespace twistlab
