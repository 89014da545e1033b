#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

/// Terms over variables, the constants 0 and 1, and the binary connectives
/// meet/join/mul/imp. Negations are sugar: !t is t->0 and ~t is t->1.
/// The constant 0 may only be evaluated on a bounded algebra.
class Term {
 public:
  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term meet(Term l, Term r);
  static Term join(Term l, Term r);
  static Term mul(Term l, Term r);
  static Term imp(Term l, Term r);
  static Term neg(Term t) { return imp(std::move(t), zero()); }
  static Term sim(Term t) { return imp(std::move(t), one()); }

  // env maps variable names to element indices; missing variables throw.
  int eval(const FiniteAlgebra& a,
           const std::map<std::string, int>& env) const;

  std::vector<std::string> variables() const;  // sorted, deduplicated
  bool mentions_zero() const;
  std::string to_string() const;

 private:
  enum class Kind { Var, Zero, One, Meet, Join, Mul, Imp };
  struct Node {
    Kind kind;
    std::string var;
    std::shared_ptr<const Node> lhs, rhs;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term binary(Kind k, Term l, Term r);

  std::shared_ptr<const Node> node_;

  friend struct IdentityChecker;
};

struct Assignment {
  std::vector<std::pair<std::string, int>> values;  // sorted by variable name
  std::string to_string() const;
};

struct IdentityResult {
  bool holds = false;
  std::optional<Assignment> counterexample;  // lexicographically first
};

/// Exhaustive check of lhs = rhs over all assignments of elements to the
/// variables of both sides. Assignments are enumerated in lexicographic
/// order over the sorted variable list, so the counterexample is stable.
IdentityResult holds_identity(const FiniteAlgebra& a, const Term& lhs,
                              const Term& rhs);

struct NamedIdentity {
  std::string name;
  Term lhs;
  Term rhs;
};

enum class Profile {
  MTL,
  BL,
  HEYTING,
  INVOLUTIVE,
  NM,
  DP,
  STONEAN,
  PRODUCT,
  KL,
  BKL,
};

const char* profile_name(Profile p);
std::optional<Profile> profile_from_name(const std::string& s);

// The defining equation set of a profile. BKL additionally requires the
// algebra to carry a zero constant.
const std::vector<NamedIdentity>& profile_identities(Profile p);

bool satisfies_profile(const FiniteAlgebra& a, Profile p);

// Per-identity breakdown, for reports.
std::vector<std::pair<std::string, IdentityResult>> profile_report(
    const FiniteAlgebra& a, Profile p);

}  // namespace twistlab
