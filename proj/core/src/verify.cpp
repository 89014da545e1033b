#include "twistlab/verify.hpp"

namespace twistlab {

namespace {

std::string elems(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace

VerificationReport verify_algebra(const FiniteAlgebra& a, VerifyOptions opts) {
  a.check_shape();
  VerificationReport rep;
  const int n = a.size;

  auto add2 = [&](const char* name, auto pred, const char* desc) {
    CheckResult c{name, true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y)
        if (!pred(x, y)) {
          c.pass = false;
          c.witness = {x, y};
          c.detail = std::string(desc) + " fails at " + elems(c.witness);
        }
    rep.checks.push_back(std::move(c));
  };
  auto add3 = [&](const char* name, auto pred, const char* desc) {
    CheckResult c{name, true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      for (int y = 0; y < n && c.pass; ++y)
        for (int z = 0; z < n && c.pass; ++z)
          if (!pred(x, y, z)) {
            c.pass = false;
            c.witness = {x, y, z};
            c.detail = std::string(desc) + " fails at " + elems(c.witness);
          }
    rep.checks.push_back(std::move(c));
  };

  add2("lattice-meet-commutative",
       [&](int x, int y) { return a.meet(x, y) == a.meet(y, x); },
       "x&y = y&x");
  add2("lattice-join-commutative",
       [&](int x, int y) { return a.join(x, y) == a.join(y, x); },
       "x|y = y|x");
  add3("lattice-meet-associative",
       [&](int x, int y, int z) {
         return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z));
       },
       "(x&y)&z = x&(y&z)");
  add3("lattice-join-associative",
       [&](int x, int y, int z) {
         return a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
       },
       "(x|y)|z = x|(y|z)");
  {
    CheckResult c{"lattice-idempotent", true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      if (a.meet(x, x) != x || a.join(x, x) != x) {
        c.pass = false;
        c.witness = {x};
        c.detail = "x&x = x = x|x fails at " + elems(c.witness);
      }
    rep.checks.push_back(std::move(c));
  }
  add2("lattice-absorption",
       [&](int x, int y) {
         return a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x;
       },
       "absorption");

  add2("monoid-commutative",
       [&](int x, int y) { return a.mul(x, y) == a.mul(y, x); },
       "x*y = y*x");
  add3("monoid-associative",
       [&](int x, int y, int z) {
         return a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z));
       },
       "(x*y)*z = x*(y*z)");
  {
    CheckResult c{"monoid-identity", true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      if (a.mul(a.one, x) != x) {
        c.pass = false;
        c.witness = {x};
        c.detail = "1*x = x fails at " + elems(c.witness);
      }
    rep.checks.push_back(std::move(c));
  }

  add3("residuation",
       [&](int x, int y, int z) {
         return a.leq(a.mul(x, y), z) == a.leq(x, a.imp(y, z));
       },
       "x*y <= z iff x <= y->z");

  if (opts.require_integral) {
    CheckResult c{"integrality", true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      if (!a.leq(x, a.one)) {
        c.pass = false;
        c.witness = {x};
        c.detail = "x <= 1 fails at " + elems(c.witness);
      }
    rep.checks.push_back(std::move(c));
  }

  if (a.zero) {
    CheckResult c{"bounded", true, {}, ""};
    for (int x = 0; x < n && c.pass; ++x)
      if (!a.leq(*a.zero, x)) {
        c.pass = false;
        c.witness = {x};
        c.detail = "0 <= x fails at " + elems(c.witness);
      }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

}  // namespace twistlab
