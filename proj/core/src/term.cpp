#include "twistlab/term.hpp"

#include <algorithm>
#include <set>

namespace twistlab {

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(name);
  return Term(std::move(n));
}

Term Term::zero() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Zero;
  return Term(std::move(n));
}

Term Term::one() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::One;
  return Term(std::move(n));
}

Term Term::binary(Kind k, Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(l.node_);
  n->rhs = std::move(r.node_);
  return Term(std::move(n));
}

Term Term::meet(Term l, Term r) { return binary(Kind::Meet, std::move(l), std::move(r)); }
Term Term::join(Term l, Term r) { return binary(Kind::Join, std::move(l), std::move(r)); }
Term Term::mul(Term l, Term r) { return binary(Kind::Mul, std::move(l), std::move(r)); }
Term Term::imp(Term l, Term r) { return binary(Kind::Imp, std::move(l), std::move(r)); }

namespace {

void collect_vars(const void* raw, std::set<std::string>& out);

int eval_rec(const FiniteAlgebra& a, const void* raw,
             const std::map<std::string, int>& env);

}  // namespace

int Term::eval(const FiniteAlgebra& a,
               const std::map<std::string, int>& env) const {
  return eval_rec(a, node_.get(), env);
}

std::vector<std::string> Term::variables() const {
  std::set<std::string> s;
  collect_vars(node_.get(), s);
  return {s.begin(), s.end()};
}

bool Term::mentions_zero() const {
  struct Walk {
    static bool has_zero(const Node* n) {
      if (!n) return false;
      if (n->kind == Kind::Zero) return true;
      return has_zero(n->lhs.get()) || has_zero(n->rhs.get());
    }
  };
  return Walk::has_zero(node_.get());
}

std::string Term::to_string() const {
  struct Render {
    static std::string go(const Node* n) {
      switch (n->kind) {
        case Kind::Var: return n->var;
        case Kind::Zero: return "0";
        case Kind::One: return "1";
        case Kind::Meet: return "(" + go(n->lhs.get()) + " & " + go(n->rhs.get()) + ")";
        case Kind::Join: return "(" + go(n->lhs.get()) + " | " + go(n->rhs.get()) + ")";
        case Kind::Mul: return "(" + go(n->lhs.get()) + " * " + go(n->rhs.get()) + ")";
        case Kind::Imp: return "(" + go(n->lhs.get()) + " -> " + go(n->rhs.get()) + ")";
      }
      return "?";
    }
  };
  return Render::go(node_.get());
}

// The recursive helpers need access to Term::Node, so they live here as
// private-friend style statics via IdentityChecker.
struct IdentityChecker {
  using Node = Term::Node;
  using Kind = Term::Kind;

  static void vars(const Node* n, std::set<std::string>& out) {
    if (!n) return;
    if (n->kind == Kind::Var) out.insert(n->var);
    vars(n->lhs.get(), out);
    vars(n->rhs.get(), out);
  }

  static int eval(const FiniteAlgebra& a, const Node* n,
                  const std::map<std::string, int>& env) {
    switch (n->kind) {
      case Kind::Var: {
        auto it = env.find(n->var);
        if (it == env.end())
          throw precondition_error("unbound variable " + n->var);
        return it->second;
      }
      case Kind::Zero:
        if (!a.zero)
          throw precondition_error(
              "constant 0 evaluated on unbounded algebra " + a.name);
        return *a.zero;
      case Kind::One:
        return a.one;
      case Kind::Meet:
        return a.meet(eval(a, n->lhs.get(), env), eval(a, n->rhs.get(), env));
      case Kind::Join:
        return a.join(eval(a, n->lhs.get(), env), eval(a, n->rhs.get(), env));
      case Kind::Mul:
        return a.mul(eval(a, n->lhs.get(), env), eval(a, n->rhs.get(), env));
      case Kind::Imp:
        return a.imp(eval(a, n->lhs.get(), env), eval(a, n->rhs.get(), env));
    }
    throw precondition_error("corrupt term");
  }

  // Fast path: variables resolved by position in `order`.
  static int eval_fast(const FiniteAlgebra& a, const Node* n,
                       const std::vector<std::string>& order,
                       const std::vector<int>& vals) {
    switch (n->kind) {
      case Kind::Var: {
        for (size_t i = 0; i < order.size(); ++i)
          if (order[i] == n->var) return vals[i];
        throw precondition_error("unbound variable " + n->var);
      }
      case Kind::Zero:
        return *a.zero;
      case Kind::One:
        return a.one;
      case Kind::Meet:
        return a.meet(eval_fast(a, n->lhs.get(), order, vals),
                      eval_fast(a, n->rhs.get(), order, vals));
      case Kind::Join:
        return a.join(eval_fast(a, n->lhs.get(), order, vals),
                      eval_fast(a, n->rhs.get(), order, vals));
      case Kind::Mul:
        return a.mul(eval_fast(a, n->lhs.get(), order, vals),
                     eval_fast(a, n->rhs.get(), order, vals));
      case Kind::Imp:
        return a.imp(eval_fast(a, n->lhs.get(), order, vals),
                     eval_fast(a, n->rhs.get(), order, vals));
    }
    throw precondition_error("corrupt term");
  }

  static const Node* root(const Term& t) { return t.node_.get(); }
};

namespace {

void collect_vars(const void* raw, std::set<std::string>& out) {
  IdentityChecker::vars(static_cast<const IdentityChecker::Node*>(raw), out);
}

int eval_rec(const FiniteAlgebra& a, const void* raw,
             const std::map<std::string, int>& env) {
  return IdentityChecker::eval(
      a, static_cast<const IdentityChecker::Node*>(raw), env);
}

}  // namespace

std::string Assignment::to_string() const {
  std::string s;
  for (const auto& [k, v] : values) {
    if (!s.empty()) s += ", ";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

IdentityResult holds_identity(const FiniteAlgebra& a, const Term& lhs,
                              const Term& rhs) {
  if ((lhs.mentions_zero() || rhs.mentions_zero()) && !a.zero)
    throw precondition_error("identity mentions 0 but algebra " + a.name +
                             " is unbounded");
  std::set<std::string> vs;
  IdentityChecker::vars(IdentityChecker::root(lhs), vs);
  IdentityChecker::vars(IdentityChecker::root(rhs), vs);
  std::vector<std::string> order(vs.begin(), vs.end());
  std::vector<int> vals(order.size(), 0);

  const auto* l = IdentityChecker::root(lhs);
  const auto* r = IdentityChecker::root(rhs);
  while (true) {
    if (IdentityChecker::eval_fast(a, l, order, vals) !=
        IdentityChecker::eval_fast(a, r, order, vals)) {
      Assignment cx;
      for (size_t i = 0; i < order.size(); ++i)
        cx.values.emplace_back(order[i], vals[i]);
      return {false, std::move(cx)};
    }
    // next assignment in lexicographic order, last variable fastest
    int pos = static_cast<int>(vals.size()) - 1;
    while (pos >= 0 && vals[pos] == a.size - 1) vals[pos--] = 0;
    if (pos < 0) break;
    ++vals[pos];
  }
  return {true, std::nullopt};
}

namespace {

std::vector<NamedIdentity> make_profile(Profile p) {
  using T = Term;
  const T x = T::var("x"), y = T::var("y"), z = T::var("z");
  auto P = NamedIdentity{
      "prelinearity",
      T::join(T::imp(x, y), T::imp(y, x)), T::one()};
  auto D = NamedIdentity{
      "divisibility",
      T::mul(x, T::imp(x, y)), T::mul(y, T::imp(y, x))};
  switch (p) {
    case Profile::MTL:
      return {P};
    case Profile::BL:
      return {P, D};
    case Profile::HEYTING:
      return {{"mul-is-meet", T::mul(x, y), T::meet(x, y)}};
    case Profile::INVOLUTIVE:
      return {{"double-negation", T::neg(T::neg(x)), x}};
    case Profile::NM:
      return {P,
              {"double-negation", T::neg(T::neg(x)), x},
              {"nilpotent-minimum",
               T::join(T::imp(T::mul(x, y), T::zero()),
                       T::imp(T::meet(x, y), T::mul(x, y))),
               T::one()}};
    case Profile::DP:
      return {P,
              {"drastic-product",
               T::join(x, T::neg(T::mul(x, x))), T::one()}};
    case Profile::STONEAN:
      return {{"stonean", T::join(T::neg(x), T::neg(T::neg(x))), T::one()}};
    case Profile::PRODUCT: {
      auto prod = NamedIdentity{
          "product",
          T::join(T::neg(y), T::imp(T::imp(x, T::mul(x, y)), y)), T::one()};
      return {P, D, prod};
    }
    case Profile::KL: {
      std::vector<NamedIdentity> ids;
      ids.push_back({"1-involutive", T::sim(T::sim(x)), x});
      // both distributive laws with one argument fixed to 1
      ids.push_back({"1-distributive-a",
                     T::meet(T::one(), T::join(y, z)),
                     T::join(T::meet(T::one(), y), T::meet(T::one(), z))});
      ids.push_back({"1-distributive-b",
                     T::meet(x, T::join(T::one(), z)),
                     T::join(T::meet(x, T::one()), T::meet(x, z))});
      ids.push_back({"1-distributive-c",
                     T::meet(x, T::join(y, T::one())),
                     T::join(T::meet(x, y), T::meet(x, T::one()))});
      ids.push_back({"1-distributive-d",
                     T::join(T::one(), T::meet(y, z)),
                     T::meet(T::join(T::one(), y), T::join(T::one(), z))});
      ids.push_back({"1-distributive-e",
                     T::join(x, T::meet(T::one(), z)),
                     T::meet(T::join(x, T::one()), T::join(x, z))});
      ids.push_back({"1-distributive-f",
                     T::join(x, T::meet(y, T::one())),
                     T::meet(T::join(x, y), T::join(x, T::one()))});
      ids.push_back({"K1",
                     T::meet(T::mul(x, y), T::one()),
                     T::mul(T::meet(x, T::one()), T::meet(y, T::one()))});
      ids.push_back({"K2",
                     T::meet(T::imp(T::meet(x, T::one()), y),
                             T::imp(T::meet(T::sim(y), T::one()), T::sim(x))),
                     T::imp(x, y)});
      return ids;
    }
    case Profile::BKL: {
      auto ids = make_profile(Profile::KL);
      ids.push_back({"zero-bottom", T::meet(T::zero(), x), T::zero()});
      return ids;
    }
  }
  return {};
}

}  // namespace

const char* profile_name(Profile p) {
  switch (p) {
    case Profile::MTL: return "MTL";
    case Profile::BL: return "BL";
    case Profile::HEYTING: return "HEYTING";
    case Profile::INVOLUTIVE: return "INVOLUTIVE";
    case Profile::NM: return "NM";
    case Profile::DP: return "DP";
    case Profile::STONEAN: return "STONEAN";
    case Profile::PRODUCT: return "PRODUCT";
    case Profile::KL: return "KL";
    case Profile::BKL: return "BKL";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& s) {
  static const std::vector<Profile> all = {
      Profile::MTL,     Profile::BL, Profile::HEYTING, Profile::INVOLUTIVE,
      Profile::NM,      Profile::DP, Profile::STONEAN, Profile::PRODUCT,
      Profile::KL,      Profile::BKL};
  for (Profile p : all)
    if (s == profile_name(p)) return p;
  return std::nullopt;
}

const std::vector<NamedIdentity>& profile_identities(Profile p) {
  static std::map<Profile, std::vector<NamedIdentity>> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, make_profile(p)).first;
  return it->second;
}

bool satisfies_profile(const FiniteAlgebra& a, Profile p) {
  if (p == Profile::BKL && !a.zero) return false;
  for (const auto& id : profile_identities(p))
    if (!holds_identity(a, id.lhs, id.rhs).holds) return false;
  return true;
}

std::vector<std::pair<std::string, IdentityResult>> profile_report(
    const FiniteAlgebra& a, Profile p) {
  std::vector<std::pair<std::string, IdentityResult>> out;
  for (const auto& id : profile_identities(p))
    out.emplace_back(id.name, holds_identity(a, id.lhs, id.rhs));
  return out;
}

}  // namespace twistlab
