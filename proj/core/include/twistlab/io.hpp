#pragma once

#include <string>

#include "twistlab/algebra.hpp"

namespace twistlab {

// JSON object with keys name, size, one, zero (int or null), and the four
// row-major matrices meet/join/mul/imp. Loading is syntactic: shape and
// ranges are validated (schema_error names the offending field), axioms are
// not; run verify for semantics.
std::string algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const std::string& text);

void save_algebra(const FiniteAlgebra& a, const std::string& path);
FiniteAlgebra load_algebra(const std::string& path);

}  // namespace twistlab
