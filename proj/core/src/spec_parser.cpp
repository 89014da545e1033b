#include <cctype>

#include "twistlab/catalog.hpp"
#include "twistlab/subuniverse.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(msg, line, col);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  std::string letters() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected a name", pos);
    return text.substr(start, pos - start);
  }

  int digits() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected digits", pos);
    long v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) fail("parameter too large", start);
    }
    return static_cast<int>(v);
  }

  AlgebraSpec expr() {
    const size_t at = pos;
    std::string word = letters();
    if (word == "osum") {
      expect('(');
      AlgebraSpec spec;
      spec.kind = AlgebraSpec::Kind::OSum;
      spec.args.push_back(expr());
      expect(',');
      spec.args.push_back(expr());
      expect(')');
      return spec;
    }
    if (word == "crot" || word == "drot") {
      expect('(');
      AlgebraSpec spec;
      spec.kind = word == "crot" ? AlgebraSpec::Kind::CRot
                                 : AlgebraSpec::Kind::DRot;
      spec.args.push_back(expr());
      expect(')');
      return spec;
    }
    if (word == "K") {
      AlgebraSpec spec;
      skip_ws();
      if (pos < text.size() && text[pos] == '0') {
        ++pos;
        spec.kind = AlgebraSpec::Kind::K0;
      } else {
        spec.kind = AlgebraSpec::Kind::K;
      }
      expect('(');
      spec.args.push_back(expr());
      expect(')');
      return spec;
    }
    // atoms
    AlgebraSpec spec;
    if (word == "B") {
      const int n = digits();
      if (n != 2) fail("only B2 is defined", at);
      spec.kind = AlgebraSpec::Kind::B2;
      return spec;
    }
    if (word == "C") {
      const int n = digits();
      if (n != 5) fail("only C5 is defined", at);
      spec.kind = AlgebraSpec::Kind::C5;
      return spec;
    }
    if (word == "G") {
      spec.kind = AlgebraSpec::Kind::G;
      spec.param = digits();
      if (spec.param < 1) fail("G needs a parameter >= 1", at);
      return spec;
    }
    if (word == "L") {
      spec.kind = AlgebraSpec::Kind::L;
      spec.param = digits();
      if (spec.param < 1) fail("L needs a parameter >= 1", at);
      return spec;
    }
    if (word == "N") {
      spec.kind = AlgebraSpec::Kind::N;
      spec.param = digits();
      if (spec.param < 2) fail("N needs a parameter >= 2", at);
      return spec;
    }
    if (word == "DP") {
      spec.kind = AlgebraSpec::Kind::DP;
      spec.param = digits();
      if (spec.param < 2) fail("DP needs a parameter >= 2", at);
      return spec;
    }
    fail("unknown name '" + word + "'", at);
  }
};

}  // namespace

AlgebraSpec AlgebraSpec::table_of(FiniteAlgebra a) {
  AlgebraSpec s;
  s.kind = Kind::Table;
  s.table = std::make_shared<FiniteAlgebra>(std::move(a));
  return s;
}

std::string AlgebraSpec::render() const {
  switch (kind) {
    case Kind::B2: return "B2";
    case Kind::C5: return "C5";
    case Kind::G: return "G" + std::to_string(param);
    case Kind::L: return "L" + std::to_string(param);
    case Kind::N: return "N" + std::to_string(param);
    case Kind::DP: return "DP" + std::to_string(param);
    case Kind::Table: return table ? table->name : "table";
    case Kind::OSum:
      return "osum(" + args[0].render() + "," + args[1].render() + ")";
    case Kind::CRot: return "crot(" + args[0].render() + ")";
    case Kind::DRot: return "drot(" + args[0].render() + ")";
    case Kind::K: return "K(" + args[0].render() + ")";
    case Kind::K0: return "K0(" + args[0].render() + ")";
  }
  return "?";
}

AlgebraSpec parse_spec(const std::string& text) {
  Parser p(text);
  AlgebraSpec spec = p.expr();
  if (!p.eof()) p.fail("trailing input", p.pos);
  return spec;
}

FiniteAlgebra build_spec(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraSpec::Kind::B2:
      return boolean2();
    case AlgebraSpec::Kind::C5:
      return rigid_witness_c5();
    case AlgebraSpec::Kind::G: {
      if (spec.param == 1) {
        FiniteAlgebra t = trivial_algebra();
        t.name = "G1";
        return t;
      }
      return godel_chain(spec.param);
    }
    case AlgebraSpec::Kind::L:
      return wajsberg_chain(spec.param);
    case AlgebraSpec::Kind::N:
      return nm_chain(spec.param);
    case AlgebraSpec::Kind::DP:
      return dp_chain(spec.param);
    case AlgebraSpec::Kind::Table:
      return *spec.table;
    case AlgebraSpec::Kind::OSum:
      return ordinal_sum(build_spec(spec.args[0]), build_spec(spec.args[1]));
    case AlgebraSpec::Kind::CRot:
      return connected_rotation(build_spec(spec.args[0]));
    case AlgebraSpec::Kind::DRot:
      return disconnected_rotation(build_spec(spec.args[0]));
    case AlgebraSpec::Kind::K:
      return twist_product(build_spec(spec.args[0]));
    case AlgebraSpec::Kind::K0: {
      FiniteAlgebra base = build_spec(spec.args[0]);
      FiniteAlgebra k = twist_product(base);
      SubUniverse least = minimal_admissible(base);
      return induced_algebra(k, least, "K0(" + base.name + ")");
    }
  }
  throw precondition_error("corrupt algebra spec");
}

FiniteAlgebra build_spec(const std::string& text) {
  return build_spec(parse_spec(text));
}

}  // namespace twistlab
