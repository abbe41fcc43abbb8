#include "cli.hpp"

#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coxeter/descent_calculus.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/group_spec.hpp"
#include "coxeter/hasse.hpp"
#include "coxeter/notation.hpp"
#include "coxeter/oracle_models.hpp"
#include "coxeter/sweep.hpp"
#include "coxeter/theorem_suite.hpp"
#include "json.hpp"

namespace coxeter::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultEnumerationCap = 40;

struct GlobalOptions {
  std::string type;
  std::string group_file;
  std::optional<int> cap;
  bool json = false;
};

struct Context {
  GroupSpec spec;
  CoxeterSystem system;
  std::string group_name;
  /// Cap given on the command line or in the group file.
  std::optional<int> explicit_cap;

  int enumeration_cap() const { return explicit_cap.value_or(kDefaultEnumerationCap); }
};

Context resolve_group(const GlobalOptions& options) {
  if (options.type.empty() == options.group_file.empty())
    throw InvalidArgument("give exactly one of --type or --group-file");
  GroupSpec spec;
  if (!options.type.empty()) {
    spec.source = parse_named_type(options.type);
  } else {
    spec = load_group_spec(options.group_file);
  }
  if (options.cap) spec.cap = options.cap;

  const int length_cap = spec.cap.value_or(kDefaultLengthCap);
  std::string name = spec.named_type() ? to_string(*spec.named_type()) : "custom";
  CoxeterSystem system(spec.matrix(), length_cap);
  return Context{spec, std::move(system), std::move(name), spec.cap};
}

// Enumerates the group for sweep-style commands. Infinite groups (or
// finite ones longer than the default cap) need an explicit --cap.
Enumeration enumerate_for_command(const Context& ctx, std::ostream& err) {
  Enumeration universe = enumerate(ctx.system, ctx.enumeration_cap());
  if (universe.truncated) {
    if (!ctx.explicit_cap)
      throw CapExceeded("group " + ctx.group_name +
                        " has elements longer than the default cap " +
                        std::to_string(kDefaultEnumerationCap) +
                        "; pass --cap to work on a truncated ball");
    err << "warning: group " << ctx.group_name << " truncated at length cap "
        << universe.cap << " (" << universe.elements.size() << " elements)\n";
  }
  return universe;
}

Json envelope(const Context& ctx, std::string_view command) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["group"] = ctx.group_name;
  return doc;
}

Json reflections_json(const ReflectionSet& set) {
  Json list = Json::array();
  for (const GroupElement& t : set) list.push_back(format_element(t));
  return list;
}

// -- commands ---------------------------------------------------------------

int cmd_nf(const Context& ctx, const GlobalOptions& g, const std::string& word,
           std::ostream& out) {
  const GroupElement w = parse_element(ctx.system, word);
  if (g.json) {
    Json doc = envelope(ctx, "nf");
    doc["normal_form"] = format_element(w);
    doc["length"] = w.length();
    out << doc.dump() << "\n";
  } else {
    out << format_element(w) << ", length " << w.length() << "\n";
  }
  return kExitOk;
}

int cmd_descents(const Context& ctx, const GlobalOptions& g, const std::string& word,
                 std::ostream& out) {
  const GroupElement w = parse_element(ctx.system, word);
  const DescentSet left = ctx.system.left_descents(w);
  const DescentSet right = ctx.system.right_descents(w);
  if (g.json) {
    Json doc = envelope(ctx, "descents");
    doc["element"] = format_element(w);
    doc["left"] = format_set(left);
    doc["right"] = format_set(right);
    out << doc.dump() << "\n";
  } else {
    out << "D_L = " << format_set(left) << "\n";
    out << "D_R = " << format_set(right) << "\n";
  }
  return kExitOk;
}

int cmd_inversions(const Context& ctx, const GlobalOptions& g, const std::string& word,
                   const std::string& side, std::ostream& out) {
  const GroupElement w = parse_element(ctx.system, word);
  const ReflectionSet set = side == "right" ? right_inversions(ctx.system, w)
                                            : left_inversions(ctx.system, w);
  if (g.json) {
    Json doc = envelope(ctx, "inversions");
    doc["element"] = format_element(w);
    doc["side"] = side;
    doc["reflections"] = reflections_json(set);
    out << doc.dump() << "\n";
  } else {
    for (const GroupElement& t : set) out << format_element(t) << "\n";
  }
  return kExitOk;
}

int cmd_project(const Context& ctx, const GlobalOptions& g, const std::string& word,
                const std::string& mask_text, std::ostream& out) {
  const GroupElement w = parse_element(ctx.system, word);
  const ParabolicMask mask = parse_mask(mask_text, ctx.system.rank());
  const ParabolicFactorization f = project(ctx.system, w, mask);
  if (g.json) {
    Json doc = envelope(ctx, "project");
    doc["element"] = format_element(w);
    doc["mask"] = format_set(mask);
    doc["quotient_part"] = format_element(f.quotient_part);
    doc["quotient_length"] = f.quotient_part.length();
    doc["parabolic_part"] = format_element(f.parabolic_part);
    doc["parabolic_length"] = f.parabolic_part.length();
    out << doc.dump() << "\n";
  } else {
    out << "w^J = " << format_element(f.quotient_part) << " (length "
        << f.quotient_part.length() << ")\n";
    out << "w_J = " << format_element(f.parabolic_part) << " (length "
        << f.parabolic_part.length() << ")\n";
  }
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, const GlobalOptions& g, std::ostream& out,
                  std::ostream& err) {
  const Enumeration universe = enumerate_for_command(ctx, err);
  if (g.json) {
    Json doc = envelope(ctx, "enumerate");
    doc["cap"] = universe.cap;
    doc["truncated"] = universe.truncated;
    Json list = Json::array();
    for (const GroupElement& w : universe.elements) list.push_back(format_element(w));
    doc["elements"] = list;
    out << doc.dump() << "\n";
  } else {
    for (const GroupElement& w : universe.elements)
      out << w.length() << "\t" << format_element(w) << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string statement;
  std::string scope = "auto";
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  bool all_reports = false;
};

int cmd_verify(const Context& ctx, const GlobalOptions& g, const VerifyOptions& v,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> statements;
  if (v.statement == "all") {
    statements = known_statements();
  } else if (is_known_statement(v.statement)) {
    statements.push_back(v.statement);
  } else {
    throw InvalidArgument("unknown statement '" + v.statement + "'");
  }

  SweepOptions options;
  options.scope = parse_scope(v.scope);
  options.seed = v.seed;
  options.samples = v.samples;
  options.keep_all_reports = v.all_reports;

  const Enumeration universe = enumerate_for_command(ctx, err);
  std::size_t passed = 0, skipped = 0, failed = 0;
  Json runs = Json::array();
  for (const std::string& id : statements) {
    const SweepSummary summary = run_sweep(ctx.system, universe, id, options);
    passed += summary.passed;
    skipped += summary.skipped;
    failed += summary.failed;
    if (g.json) {
      Json run;
      run["statement_id"] = summary.statement_id;
      run["exhaustive"] = summary.exhaustive;
      run["passed"] = summary.passed;
      run["skipped"] = summary.skipped;
      run["failed"] = summary.failed;
      Json reports = Json::array();
      for (const VerificationReport& r : summary.reports) {
        if (r.verdict == Verdict::Skipped && !v.all_reports) continue;
        reports.push_back(Json::parse(report_to_json(r)));
      }
      run["reports"] = reports;
      runs.push_back(run);
    } else {
      for (const VerificationReport& r : summary.reports) {
        if (r.verdict == Verdict::Skipped && !v.all_reports) continue;
        out << report_to_text(r) << "\n";
      }
      out << summary_to_text(summary) << "\n";
    }
  }
  if (g.json) {
    Json doc = envelope(ctx, "verify");
    doc["scope"] = v.scope;
    doc["seed"] = v.seed;
    doc["samples"] = v.samples;
    doc["cap"] = universe.cap;
    doc["truncated"] = universe.truncated;
    doc["runs"] = runs;
    doc["passed"] = passed;
    doc["skipped"] = skipped;
    doc["failed"] = failed;
    out << doc.dump() << "\n";
  } else {
    out << "total: " << passed << " passed, " << skipped << " skipped, " << failed
        << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_hasse(const Context& ctx, const GlobalOptions& g, const std::string& order_name,
              std::ostream& out, std::ostream& err) {
  OrderKind order;
  if (order_name == "weak") order = OrderKind::Weak;
  else if (order_name == "bruhat") order = OrderKind::Bruhat;
  else throw InvalidArgument("unknown order '" + order_name + "' (weak or bruhat)");

  const Enumeration universe = enumerate_for_command(ctx, err);
  if (g.json) {
    Json doc = envelope(ctx, "hasse");
    doc["order"] = order_name;
    doc["cap"] = universe.cap;
    doc["truncated"] = universe.truncated;
    Json nodes = Json::array();
    for (const GroupElement& w : universe.elements) nodes.push_back(format_element(w));
    doc["nodes"] = nodes;
    Json edges = Json::array();
    for (auto [lower, upper] : covering_relations(ctx.system, universe, order))
      edges.push_back(Json::array({lower, upper}));
    doc["edges"] = edges;
    out << doc.dump() << "\n";
  } else {
    out << hasse_dot(ctx.system, universe, order);
  }
  return kExitOk;
}

int cmd_oracle_check(const Context& ctx, const GlobalOptions& g,
                     const std::string& samples, std::uint64_t seed, std::ostream& out) {
  const std::optional<NamedType> type = ctx.spec.named_type();
  if (!type) throw UnsupportedType("oracle-check needs a catalog type A_n or B_n");
  require_oracle_type(*type);

  OracleCheckOptions options;
  options.seed = seed;
  options.cap = std::max(ctx.system.length_cap(), ctx.enumeration_cap());
  if (samples != "exhaustive") {
    std::size_t count = 0;
    try {
      count = std::stoul(samples);
    } catch (const std::exception&) {
      throw InvalidArgument("--samples takes 'exhaustive' or a count");
    }
    options.samples = count;
  }
  const OracleCheckResult result = run_oracle_check(ctx.system, *type, options);
  if (g.json) {
    Json doc = envelope(ctx, "oracle-check");
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["elements_checked"] = result.elements_checked;
    doc["pairs_checked"] = result.pairs_checked;
    doc["disagreements"] = result.disagreements;
    doc["passed"] = result.passed();
    out << doc.dump() << "\n";
  } else {
    for (const std::string& d : result.disagreements) out << "disagreement: " << d << "\n";
    out << "oracle-check " << ctx.group_name << ": " << result.elements_checked
        << " elements, " << result.pairs_checked << " pairs, "
        << result.disagreements.size() << " disagreements\n";
    out << (result.passed() ? "PASS" : "FAIL") << "\n";
  }
  return result.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter group kernel: normal forms, inversion sets, parabolic "
               "projections, weak/Bruhat order and identity sweeps"};
  app.name("coxeter");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  int cap_value = 0;
  app.add_option("--type", g.type, "Catalog type: A3, B4, D4, I2(5), I2(inf), H3, H4, F4, E6");
  app.add_option("--group-file", g.group_file, "JSON group spec file");
  CLI::Option* cap_option =
      app.add_option("--cap", cap_value, "Length cap (default 40 for enumeration)")
          ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", g.json, "Emit JSON instead of text");

  std::string word;
  std::string mask;
  std::string side = "left";
  std::string order = "weak";
  std::string samples = "exhaustive";
  std::uint64_t seed = 0;
  VerifyOptions verify;

  auto* nf = app.add_subcommand("nf", "Normal form and length of a word");
  nf->add_option("word", word, "Word, e.g. \"s2 s3 s2\"")->required();

  auto* descents = app.add_subcommand("descents", "Left and right descent sets");
  descents->add_option("word", word)->required();

  auto* inversions = app.add_subcommand("inversions", "Left (or right) inversion set");
  inversions->add_option("word", word)->required();
  inversions->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  auto* projection = app.add_subcommand("project", "Parabolic factorization w = w^J w_J");
  projection->add_option("word", word)->required();
  projection->add_option("mask", mask, "\"s0,s1\" or \"~s3\" for S minus s3")->required();

  auto* enumeration = app.add_subcommand("enumerate", "List elements up to the cap");

  auto* verify_cmd = app.add_subcommand("verify", "Run identity sweeps");
  verify_cmd->add_option("statement", verify.statement, "Statement id or 'all'")->required();
  verify_cmd->add_option("--scope", verify.scope)
      ->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--samples", verify.samples);
  verify_cmd->add_flag("--all-reports", verify.all_reports,
                       "Print passing and skipped reports too");

  auto* hasse = app.add_subcommand("hasse", "DOT Hasse diagram");
  hasse->add_option("--order", order)->check(CLI::IsMember({"weak", "bruhat"}));

  auto* oracle = app.add_subcommand("oracle-check", "Compare with permutation models");
  oracle->add_option("--samples", samples, "'exhaustive' or a count");
  oracle->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (cap_option->count() > 0) g.cap = cap_value;

  try {
    const Context ctx = resolve_group(g);
    if (nf->parsed()) return cmd_nf(ctx, g, word, out);
    if (descents->parsed()) return cmd_descents(ctx, g, word, out);
    if (inversions->parsed()) return cmd_inversions(ctx, g, word, side, out);
    if (projection->parsed()) return cmd_project(ctx, g, word, mask, out);
    if (enumeration->parsed()) return cmd_enumerate(ctx, g, out, err);
    if (verify_cmd->parsed()) return cmd_verify(ctx, g, verify, out, err);
    if (hasse->parsed()) return cmd_hasse(ctx, g, order, out, err);
    if (oracle->parsed()) return cmd_oracle_check(ctx, g, samples, seed, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCoxeterMatrix& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace coxeter::cli
