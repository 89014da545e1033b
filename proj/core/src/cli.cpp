#include "twistlab/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "twistlab/catalog.hpp"
#include "twistlab/classify.hpp"
#include "twistlab/congruence.hpp"
#include "twistlab/io.hpp"
#include "twistlab/morphism.hpp"
#include "twistlab/term.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/varieties.hpp"
#include "twistlab/verify.hpp"

namespace twistlab {

namespace {

using nlohmann::json;

FiniteAlgebra resolve(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_algebra(arg);
  return build_spec(arg);
}

std::string pairs_of(const SubUniverse& s, int base) {
  PairIndexing ix{base};
  std::string out;
  for (size_t i = 0; i < s.elements.size(); ++i) {
    auto [p, q] = ix.unindex(s.elements[i]);
    if (i) out += " ";
    out += "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return out;
}

json pairs_json(const SubUniverse& s, int base) {
  PairIndexing ix{base};
  json out = json::array();
  for (int e : s.elements) {
    auto [p, q] = ix.unindex(e);
    out.push_back(json::array({p, q}));
  }
  return out;
}

std::string blocks_of(const Congruence& c) {
  std::string out;
  for (int b = 0; b < c.num_blocks; ++b) {
    out += "{";
    bool first = true;
    for (size_t x = 0; x < c.block_of.size(); ++x)
      if (c.block_of[x] == b) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
      }
    out += "}";
  }
  return out;
}

int cmd_verify(const FiniteAlgebra& a, bool as_json, std::ostream& out) {
  const bool integral = a.is_integral();
  VerificationReport rep = verify_algebra(a, {.require_integral = integral});
  std::vector<std::pair<std::string, IdentityResult>> profile;
  if (!integral && a.zero) profile = profile_report(a, Profile::BKL);

  bool ok = rep.ok();
  for (const auto& [name, res] : profile) ok = ok && res.holds;
  if (!integral && !a.zero) ok = false;  // outside the tool's universe

  if (as_json) {
    json j;
    j["algebra"] = a.name;
    j["size"] = a.size;
    j["integral"] = integral;
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    for (const auto& [name, res] : profile)
      checks.push_back({{"name", std::string("BKL:") + name},
                        {"pass", res.holds},
                        {"detail", res.holds ? ""
                                             : res.counterexample->to_string()}});
    j["checks"] = checks;
    j["pass"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "algebra " << a.name << ": size=" << a.size
        << (integral ? " integral" : " non-integral") << "\n";
    for (const auto& c : rep.checks)
      out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL ")
          << (c.pass ? "" : c.detail) << "\n";
    for (const auto& [name, res] : profile)
      out << "check BKL:" << name << ": " << (res.holds ? "pass" : "FAIL at ")
          << (res.holds ? "" : res.counterexample->to_string()) << "\n";
    if (!integral && !a.zero)
      out << "check bounded: FAIL non-integral algebra without zero\n";
    out << "verdict: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite residuated lattices, twist-products and subvariety lattices"};
  app.require_subcommand(1);

  int max_sub = kDefaultMaxSubuniverseSize;
  int max_con = kDefaultMaxCongruenceSize;
  bool as_json = false;
  app.add_option("--max-sub", max_sub,
                 "size bound for subuniverse enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-con", max_con, "size bound for congruence lattices")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "structured output");

  std::string spec_arg, spec_b, out_path, dot_path;
  std::vector<std::string> gen_args;
  bool count_only = false, list_only = false;

  auto* verify = app.add_subcommand("verify", "check axioms of a spec or file");
  verify->add_option("spec", spec_arg)->required();

  auto* build = app.add_subcommand("build", "build a spec and save it");
  build->add_option("spec", spec_arg)->required();
  build->add_option("-o,--output", out_path)->required();

  auto* kalman = app.add_subcommand("kalman", "emit the K-expansion of a spec");
  kalman->add_option("spec", spec_arg)->required();
  kalman->add_option("-o,--output", out_path);

  auto* admissibles =
      app.add_subcommand("admissibles", "admissible subalgebras of K(spec)");
  admissibles->add_option("spec", spec_arg)->required();
  admissibles->add_flag("--count", count_only);
  admissibles->add_flag("--list", list_only);

  auto* congruences = app.add_subcommand("congruences", "congruence lattice");
  congruences->add_option("spec", spec_arg)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism witness search");
  iso->add_option("specA", spec_arg)->required();
  iso->add_option("specB", spec_b)->required();

  auto* embed = app.add_subcommand("embed", "embedding witness search");
  embed->add_option("specA", spec_arg)->required();
  embed->add_option("specB", spec_b)->required();

  auto* rigid = app.add_subcommand("rigid", "rigidity test");
  rigid->add_option("spec", spec_arg)->required();

  auto* varlattice =
      app.add_subcommand("varlattice", "lattice of subvarieties of V(gens)");
  varlattice->add_option("spec", gen_args)->required();
  varlattice->add_option("--dot", dot_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(resolve(spec_arg), as_json, out);

    if (build->parsed()) {
      save_algebra(resolve(spec_arg), out_path);
      return kExitOk;
    }

    if (kalman->parsed()) {
      FiniteAlgebra k = twist_product(resolve(spec_arg));
      if (out_path.empty())
        out << algebra_to_json(k);
      else
        save_algebra(k, out_path);
      return kExitOk;
    }

    if (admissibles->parsed()) {
      FiniteAlgebra base = resolve(spec_arg);
      auto adm = enumerate_admissible(base);
      if (count_only && !as_json) {
        out << adm.size() << "\n";
        return kExitOk;
      }
      if (as_json) {
        json j;
        j["base"] = base.name;
        j["count"] = adm.size();
        if (!count_only) {
          json list = json::array();
          for (const auto& s : adm) list.push_back(pairs_json(s, base.size));
          j["admissible"] = list;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
      }
      out << "admissible subalgebras of K(" << base.name << "): " << adm.size()
          << "\n";
      for (const auto& s : adm)
        out << "size=" << s.elements.size() << ": " << pairs_of(s, base.size)
            << "\n";
      return kExitOk;
    }

    if (congruences->parsed()) {
      FiniteAlgebra a = resolve(spec_arg);
      auto lat = congruence_lattice(a, max_con);
      if (as_json) {
        json j;
        j["algebra"] = a.name;
        j["count"] = lat.size();
        json list = json::array();
        for (const auto& c : lat) list.push_back(c.block_of);
        j["congruences"] = list;
        out << j.dump(2) << "\n";
        return kExitOk;
      }
      out << "congruences of " << a.name << ": " << lat.size() << "\n";
      for (const auto& c : lat)
        out << "blocks=" << c.num_blocks << ": " << blocks_of(c) << "\n";
      return kExitOk;
    }

    if (iso->parsed() || embed->parsed()) {
      FiniteAlgebra a = resolve(spec_arg);
      FiniteAlgebra b = resolve(spec_b);
      auto witness =
          iso->parsed() ? is_isomorphic(a, b) : exists_embedding(a, b);
      const char* what = iso->parsed() ? "isomorphic" : "embeds";
      if (as_json) {
        json j;
        j["a"] = a.name;
        j["b"] = b.name;
        j[what] = witness.has_value();
        if (witness) j["map"] = *witness;
        out << j.dump(2) << "\n";
        return kExitOk;
      }
      if (!witness) {
        out << what << ": no\n";
        return kExitOk;
      }
      out << what << ": yes\nmap:";
      for (size_t x = 0; x < witness->size(); ++x)
        out << " " << x << "->" << (*witness)[x];
      out << "\n";
      return kExitOk;
    }

    if (rigid->parsed()) {
      FiniteAlgebra a = resolve(spec_arg);
      const bool r = is_rigid(a, max_sub, max_con);
      if (as_json) {
        json j;
        j["algebra"] = a.name;
        j["rigid"] = r;
        out << j.dump(2) << "\n";
      } else {
        out << "rigid: " << (r ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (varlattice->parsed()) {
      std::vector<FiniteAlgebra> gens;
      for (const auto& g : gen_args) gens.push_back(resolve(g));
      VarietyLattice l =
          subvariety_lattice(gens, {.max_sub = max_sub, .max_con = max_con});
      if (!dot_path.empty()) {
        std::ofstream f(dot_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + dot_path);
        f << emit_dot(l);
      }
      if (as_json) {
        json j;
        j["nodes"] = l.nodes.size();
        j["classes"] = l.class_names;
        j["labels"] = l.labels;
        json e = json::array();
        for (auto [lo, hi] : l.covers) e.push_back(json::array({lo, hi}));
        j["covers"] = e;
        out << j.dump(2) << "\n";
      } else {
        out << "nodes=" << l.nodes.size() << "\n";
      }
      return kExitOk;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const schema_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const size_limit_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeBound;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const structural_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twistlab
