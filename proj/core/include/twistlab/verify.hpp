#pragma once

#include <string>
#include <vector>

#include "twistlab/algebra.hpp"

namespace twistlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  // First counterexample in index order, empty when passing. The meaning of
  // the entries depends on the check (e.g. residuation stores {a, b, c}).
  std::vector<int> witness;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  // Whether to require that `one` is the lattice top. Integral algebras
  // (all catalog constructors) demand it; twist products are checked as
  // residuated lattices plus the BKL profile instead, since their identity
  // sits strictly below the top.
  bool require_integral = true;
};

/// Exhaustively checks the residuated-lattice axioms: all lattice identities,
/// commutative-monoid identities, the residuation law, integrality (opt-in),
/// and, when a zero is designated, that it is the lattice bottom. Malformed
/// tables throw structural_error; axiom failures are reported with the
/// lexicographically first counterexample.
VerificationReport verify_algebra(const FiniteAlgebra& a,
                                  VerifyOptions opts = {});

}  // namespace twistlab
