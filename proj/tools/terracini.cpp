// Command-line front end: secant-defect invariants, fourfold classification
// and rational-curve rank formulas over exact fields.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 a computed
// report is internally inconsistent (oracle disagreement or failed check).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "terracini/catalog.hpp"
#include "terracini/classify.hpp"
#include "terracini/curve.hpp"
#include "terracini/io.hpp"

using namespace terracini;

namespace {

struct CommonArgs {
  std::string file;
  std::string builtin;
  std::uint64_t seed = 0;
  int primes = 3;
  int trials = 3;
  std::string field = "modp";
  bool json = false;
};

void add_input_flags(CLI::App *cmd, CommonArgs &args, bool engine_flags) {
  cmd->add_option("--file", args.file, "manifest JSON file");
  cmd->add_option("--builtin", args.builtin,
                  "catalog or structural name, e.g. segre:2:2");
  if (engine_flags) {
    cmd->add_option("--seed", args.seed, "master seed (default 0)");
    cmd->add_option("--primes", args.primes,
                    "number of primes for consensus (default 3)");
    cmd->add_option("--trials", args.trials,
                    "samples per invariant (default 3)");
    cmd->add_option("--field", args.field, "modp or rational (default modp)")
        ->check(CLI::IsMember({"modp", "rational"}));
  }
  cmd->add_flag("--json", args.json, "machine-readable output");
}

struct ResolvedInput {
  std::string name;
  Json input_json;
  std::optional<Manifest> manifest; // absent for plain builtins
};

ResolvedInput resolve_input(const CommonArgs &args) {
  if (args.file.empty() == args.builtin.empty())
    throw CLI::ValidationError(
        "input", "exactly one of --file or --builtin is required");
  ResolvedInput in;
  if (!args.builtin.empty()) {
    in.name = args.builtin;
    in.input_json = Json{{"builtin", args.builtin}};
    return in;
  }
  std::ifstream stream(args.file);
  if (!stream)
    throw Error("cannot open " + args.file);
  Json j = Json::parse(stream);
  in.manifest = parse_manifest(j);
  in.name = in.manifest->kind == Manifest::Kind::Explicit
                ? in.manifest->name
                : args.file;
  in.input_json = j;
  return in;
}

VarietyRecipe recipe_for(const ResolvedInput &in) {
  if (in.manifest)
    return manifest_recipe(*in.manifest);
  return builtin_recipe(in.name);
}

EngineOptions options_for(const CommonArgs &args) {
  EngineOptions opt;
  opt.seed = args.seed;
  opt.primes = args.primes;
  opt.trials = args.trials;
  opt.rational = args.field == "rational";
  return opt;
}

void print_report_text(const InvariantReport &rep) {
  std::cout << rep.input_name << ": n = " << rep.n << ", r = " << rep.r
            << "\n";
  std::cout << "  s = " << rep.s << "  sigma = " << rep.sigma
            << "  delta = " << rep.delta << "  f = " << rep.f << "\n";
  std::cout << "  t = " << rep.t << "  d = " << rep.d
            << "  dim II = " << rep.ii_dim << "\n";
  if (rep.defective) {
    std::cout << "  gamma = " << rep.gamma << "  epsilon = " << rep.epsilon
              << "  theta = " << rep.theta_formula
              << " (direct " << rep.theta_direct << ")"
              << "  species = " << rep.species << "\n";
  }
  std::cout << "  cone: " << (rep.is_cone ? "yes" : "no");
  if (rep.is_cone)
    std::cout << " (vertex dimension " << rep.vertex_dim << ")";
  std::cout << "\n  checks:";
  for (const auto &[name, ok] : rep.checks)
    std::cout << " " << name << "=" << (ok ? "pass" : "FAIL");
  std::cout << "\n";
}

int run_invariants(const CommonArgs &args) {
  ResolvedInput in = resolve_input(args);
  if (in.manifest && in.manifest->is_curve())
    throw Error("this manifest is a curve; use the curve-ranks command");
  InvariantReport rep = full_report(in.name, recipe_for(in), options_for(args));
  if (args.json)
    std::cout << report_to_json(rep, in.input_json).dump(2) << "\n";
  else
    print_report_text(rep);
  return rep.consistent ? 0 : 3;
}

int run_classify(const CommonArgs &args) {
  ResolvedInput in = resolve_input(args);
  InvariantReport rep = full_report(in.name, recipe_for(in), options_for(args));
  CaseMatch match = classify_fourfold(rep);
  if (args.json) {
    Json j = report_to_json(rep, in.input_json);
    j["classification"] = classification_to_json(match);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << in.name << ": " << match.confidence << "\n";
    for (const CaseHit &hit : match.cases) {
      std::cout << "  case " << hit.label << ": " << hit.description;
      if (!hit.note.empty())
        std::cout << " [" << hit.note << "]";
      std::cout << "\n";
    }
  }
  return rep.consistent ? 0 : 3;
}

// Builtin curves: "rnc:4" is the rational normal quartic; "monomial:a:b:c:d:e"
// takes five exponents.
RationalCurveP4 curve_builtin(const std::string &name) {
  auto tp = [](unsigned e) { return UPoly<Rat>::monomial(e, Rat(1)); };
  if (name == "rnc:4")
    return make_curve(4, {tp(0), tp(1), tp(2), tp(3), tp(4)});
  if (name.rfind("monomial:", 0) == 0) {
    std::array<unsigned, 5> exps{};
    std::string rest = name.substr(9);
    std::size_t pos = 0;
    for (int i = 0; i < 5; ++i) {
      std::size_t colon = rest.find(':', pos);
      std::string tok = rest.substr(pos, colon - pos);
      exps[i] = static_cast<unsigned>(std::stoul(tok));
      if (colon == std::string::npos && i < 4)
        throw Error("monomial curve needs five exponents");
      pos = colon + 1;
    }
    unsigned d = *std::max_element(exps.begin(), exps.end());
    return make_curve(d, {tp(exps[0]), tp(exps[1]), tp(exps[2]), tp(exps[3]),
                          tp(exps[4])});
  }
  throw Error("unknown builtin curve '" + name + "'");
}

int run_curve_ranks(const CommonArgs &args) {
  ResolvedInput in{};
  RationalCurveP4 C{};
  Json input_json;
  if (!args.builtin.empty() && args.file.empty()) {
    C = curve_builtin(args.builtin);
    input_json = Json{{"builtin", args.builtin}};
  } else {
    in = resolve_input(args);
    if (!in.manifest || !in.manifest->is_curve())
      throw Error("curve-ranks needs a curve manifest "
                  "({degree, forms: [5 strings in t]})");
    C = build_curve(*in.manifest);
    input_json = in.input_json;
  }
  CurveRankReport rep = ranks(C);
  if (args.json) {
    std::cout << curve_report_to_json(rep, input_json).dump(2) << "\n";
  } else {
    std::cout << "degree " << rep.d << ": n1 = " << rep.n1
              << ", n2 = " << rep.n2 << ", n3 = " << rep.n3 << "\n";
    std::cout << "  totals:";
    for (unsigned t : rep.T)
      std::cout << " " << t;
    std::cout << "\n  identities: " << (rep.ok ? "PASS" : "FAIL") << "\n";
  }
  return rep.ok ? 0 : 3;
}

int run_catalog_list(bool json) {
  if (json) {
    Json out = Json::array();
    for (const CatalogEntry &e : catalog()) {
      Json item;
      item["name"] = e.name;
      if (!e.pinned_case.empty())
        item["case"] = e.pinned_case;
      out.push_back(item);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CatalogEntry &e : catalog()) {
      std::cout << e.name;
      if (!e.pinned_case.empty())
        std::cout << "  [case " << e.pinned_case << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_catalog_emit(const std::string &name) {
  std::cout << emit_builtin_chart(name).dump(2) << "\n";
  return 0;
}

int run_selftest(std::uint64_t seed) {
  EngineOptions opt;
  opt.seed = seed;
  int failures = 0;
  for (const CatalogEntry &e : catalog()) {
    InvariantReport rep = full_report(e.name, e.recipe, opt);
    bool ok = rep.consistent;
    if (!e.pinned_case.empty()) {
      try {
        ok = ok && classify_fourfold(rep).contains(e.pinned_case);
      } catch (const Error &) {
        ok = false;
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << e.name << "\n";
    if (!ok) {
      ++failures;
      for (const std::string &flag : rep.flags)
        std::cout << "      " << flag << "\n";
    }
  }
  for (const char *name : {"rnc:4", "monomial:0:2:3:4:5"}) {
    CurveRankReport rep = ranks(curve_builtin(name));
    std::cout << (rep.ok ? "PASS" : "FAIL") << "  curve " << name << "\n";
    failures += rep.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact secant-defect engine for parameterized projective "
               "varieties"};
  app.require_subcommand(1);

  CommonArgs inv_args, cls_args, crv_args;
  CLI::App *inv = app.add_subcommand("invariants",
                                     "compute the full defect report");
  add_input_flags(inv, inv_args, true);
  CLI::App *cls = app.add_subcommand("classify",
                                     "match a defective fourfold against "
                                     "the classification");
  add_input_flags(cls, cls_args, true);
  CLI::App *crv = app.add_subcommand("curve-ranks",
                                     "rank formulas for a rational curve "
                                     "in P^4 (always over Q)");
  add_input_flags(crv, crv_args, false);

  CLI::App *cat = app.add_subcommand("catalog", "inspect the variety catalog");
  cat->require_subcommand(1);
  bool cat_json = false;
  CLI::App *cat_list = cat->add_subcommand("list", "list catalog names");
  cat_list->add_flag("--json", cat_json, "machine-readable output");
  std::string emit_name;
  CLI::App *cat_emit =
      cat->add_subcommand("emit", "emit the chart of an entry as a manifest");
  cat_emit->add_option("name", emit_name, "catalog or structural name")
      ->required();

  std::uint64_t selftest_seed = 0;
  CLI::App *self = app.add_subcommand("selftest",
                                      "run the catalog regressions");
  self->add_option("--seed", selftest_seed, "master seed (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv->parsed())
      return run_invariants(inv_args);
    if (cls->parsed())
      return run_classify(cls_args);
    if (crv->parsed())
      return run_curve_ranks(crv_args);
    if (cat->parsed()) {
      if (cat_list->parsed())
        return run_catalog_list(cat_json);
      if (cat_emit->parsed())
        return run_catalog_emit(emit_name);
    }
    if (self->parsed())
      return run_selftest(selftest_seed);
  } catch (const CLI::Error &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
