#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

// Malformed raw data: table entry out of range, wrong table shape.
// Distinct from an axiom failure, which is reported, not thrown.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented size bound was exceeded (never silently truncated).
struct size_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was applied to an algebra outside its stated domain
// (e.g. a filter characterization on a non-involutive base).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra-spec DSL syntax error with source position.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Algebra file does not match the schema; `path` names the offending field,
// e.g. "imp[2][1]".
struct schema_error : std::runtime_error {
  schema_error(const std::string& msg, std::string path)
      : std::runtime_error(msg + " (" + path + ")"), path(std::move(path)) {}
  std::string path;
};

}  // namespace twistlab
