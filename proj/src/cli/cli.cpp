#include "mualcq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/model_io.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/reasoning.hpp"
#include "mualcq/suite.hpp"
#include "mualcq/syntax.hpp"
#include "mualcq/translate.hpp"

namespace mualcq {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t max_size = 3;
  std::size_t brute_force_cap = kDefaultBruteForceCap;
  std::uint64_t seed = 1;
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string bracket(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "]";
}

Valuation parse_free(const std::vector<std::string>& specs, const Interpretation& i) {
  Valuation rho;
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--free expects VAR=e1,e2,... but got '" + spec + "'");
    ElementSet set = i.empty_set();
    std::stringstream elems(spec.substr(eq + 1));
    std::string name;
    while (std::getline(elems, name, ','))
      if (!name.empty()) set.insert(i.require_index(name));
    rho.insert_or_assign(spec.substr(0, eq), std::move(set));
  }
  return rho;
}

int do_check(const std::string& path, const Config& cfg, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefuted;
  }
  auto ends_with = [&](const char* suffix) {
    std::string s(suffix);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  try {
    Json j{{"file", path}, {"status", "ok"}};
    std::string summary;
    if (ends_with(".mdl")) {
      Interpretation i = parse_model(text);
      j["elements"] = i.size();
      summary = "model with " + std::to_string(i.size()) + " elements";
    } else if (ends_with(".tbx")) {
      TBox k = parse_tbox(text);
      j["inclusions"] = k.size();
      summary = "TBox with " + std::to_string(k.size()) + " inclusions";
    } else {
      Concept c = parse_concept(text);
      j["size"] = c.size();
      summary = "concept with " + std::to_string(c.size()) + " nodes";
    }
    if (cfg.structured())
      out << j.dump() << '\n';
    else
      out << path << ": ok, " << summary << '\n';
    return kExitOk;
  } catch (const Error& e) {
    if (cfg.structured())
      out << Json{{"file", path}, {"status", "error"}, {"message", e.what()}}.dump() << '\n';
    err << path << ": " << e.what() << '\n';
    return kExitRefuted;
  }
}

int do_sat(const std::string& text, const std::string& tbox_path, const Config& cfg, std::ostream& out) {
  Concept c = parse_concept(text);
  SatVerdict v = tbox_path.empty() ? sat_bounded(c, cfg.max_size)
                                   : sat_in_tbox(parse_tbox(read_file(tbox_path)), c, cfg.max_size);
  bool sat = std::holds_alternative<Satisfiable>(v);
  if (cfg.structured()) {
    Json j = Json::parse(to_json(v));
    if (!sat) j["advisory_complete_from"] = closure_bound(c);
    out << j.dump() << '\n';
  } else {
    out << to_text(v);
    if (!sat) out << "advisory: search is expected to be complete if max size >= " << closure_bound(c) << '\n';
  }
  return sat ? kExitOk : kExitUnknown;
}

int do_implies(const std::string& tbox_path, const std::string& lhs, const std::string& rhs,
               const std::string& strategy_name, const Config& cfg, std::ostream& out) {
  TBox k = parse_tbox(read_file(tbox_path));
  Concept c = parse_concept(lhs);
  Concept d = parse_concept(rhs);
  Strategy strategy = strategy_name == "internalized" ? Strategy::Internalized
                      : strategy_name == "both"       ? Strategy::Both
                                                      : Strategy::Direct;
  ImplicationVerdict v = implies_bounded(k, c, d, cfg.max_size, strategy);
  bool holds = std::holds_alternative<HoldsUpTo>(v);
  if (cfg.structured()) {
    Json j = Json::parse(to_json(v));
    j["strategy"] = to_string(strategy);
    out << j.dump() << '\n';
  } else {
    std::string text = to_text(v);
    if (strategy == Strategy::Both) text.insert(text.find('\n'), " (both strategies agree)");
    out << text;
  }
  return holds ? kExitOk : kExitRefuted;
}

int do_eval(const std::string& model_path, const std::string& text, const std::vector<std::string>& free,
            const Config& cfg, std::ostream& out, std::ostream& err) {
  Interpretation i = parse_model(read_file(model_path));
  Concept c = parse_concept(text);
  for (const auto& name : undeclared_symbols(c, i))
    err << "warning: " << name << " is not declared in " << model_path << "; its extension is empty\n";
  Valuation rho = parse_free(free, i);
  auto names = element_names(i, evaluate(c, i, rho));
  if (cfg.structured())
    out << Json{{"extension", names}}.dump() << '\n';
  else
    out << bracket(names) << '\n';
  return kExitOk;
}

int do_translate(const std::string& text, const std::string& target, const Config& cfg, std::ostream& out) {
  Concept c = parse_concept(text);
  MuFormula f = MuFormula::top();
  std::map<std::string, std::string> fresh;
  if (target == "mu") {
    f = translate_q(c);
  } else {
    TranslationResult r = translate_u(c);
    f = r.formula;
    fresh = r.fresh_roles;
  }
  if (cfg.structured()) {
    Json j{{"target", target}, {"formula", print_formula(f)}, {"fresh_roles", Json::object()}};
    for (const auto& [r, n] : fresh) j["fresh_roles"][r] = n;
    out << j.dump() << '\n';
  } else {
    out << print_formula(f) << '\n';
    for (const auto& [r, n] : fresh) out << "fresh role: " << r << " -> " << n << '\n';
  }
  return kExitOk;
}

int do_models(const std::string& tbox_path, std::size_t size, const Config& cfg, std::ostream& out) {
  TBox k = parse_tbox(read_file(tbox_path));
  std::size_t count = 0;
  for_each_model(k, size, [&](const Interpretation& i) {
    ++count;
    if (cfg.structured())
      out << model_json(i) << '\n';
    else
      out << "# model " << count << '\n' << print_model(i) << '\n';
    return true;
  });
  if (!cfg.structured()) out << "# " << count << " models of size " << size << '\n';
  return kExitOk;
}

int do_suite(std::size_t samples, const Config& cfg, std::ostream& out) {
  SuiteConfig sc{samples, cfg.seed, cfg.brute_force_cap};
  bool ok = true;
  for (const auto& r : run_all_suites(sc)) {
    ok = ok && r.ok();
    if (cfg.structured()) {
      Json j{{"suite", r.name}, {"cases", r.cases}, {"violations", r.violations}};
      if (r.non_vacuous != 0) j["premise_held"] = r.non_vacuous;
      j["failures"] = r.failures;
      out << j.dump() << '\n';
      continue;
    }
    out << r.name << ": " << r.cases << " cases, " << r.violations << " violations";
    if (r.non_vacuous != 0) out << ", premise held in " << r.non_vacuous;
    out << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  return ok ? kExitOk : kExitRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded reasoning for description logics with fixpoints", "mualcq"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--max", cfg.max_size, "Largest domain size searched")->envname("MUALCQ_MAX_DOMAIN");
  app.add_option("--cap", cfg.brute_force_cap, "Domain size cap for brute-force oracles")
      ->envname("MUALCQ_BRUTE_FORCE_CAP");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->envname("MUALCQ_SEED");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->envname("MUALCQ_OUTPUT");

  std::string file, concept_text, lhs, rhs, tbox, model, target = "mu", strategy = "direct";
  std::vector<std::string> free;
  std::size_t size = 1;
  std::size_t samples = 0;

  auto* check = app.add_subcommand("check", "Parse and check a concept, TBox (.tbx) or model (.mdl) file");
  check->add_option("file", file)->required();
  auto* sat = app.add_subcommand("sat", "Search for a (model of the TBox with a) non-empty extension");
  sat->add_option("concept", concept_text)->required();
  sat->add_option("--tbox", tbox);
  auto* implies = app.add_subcommand("implies", "Check C <= D in every model of a TBox up to --max elements");
  implies->add_option("--tbox", tbox)->required();
  implies->add_option("lhs", lhs)->required();
  implies->add_option("rhs", rhs)->required();
  implies->add_option("--strategy", strategy)->check(CLI::IsMember({"direct", "internalized", "both"}));
  auto* eval = app.add_subcommand("eval", "Print the extension of a concept in a model file");
  eval->add_option("--model", model)->required();
  eval->add_option("concept", concept_text)->required();
  eval->add_option("--free", free, "Values of free variables, VAR=e1,e2");
  auto* translate = app.add_subcommand("translate", "Translate into the (deterministic) mu-calculus");
  translate->add_option("concept", concept_text)->required();
  translate->add_option("--target", target)->check(CLI::IsMember({"mu", "detmu"}));
  auto* models = app.add_subcommand("models", "List every model of a TBox with a given domain size");
  models->add_option("--tbox", tbox)->required();
  models->add_option("--size", size)->required();
  auto* suite = app.add_subcommand("suite", "Run the randomized property suites");
  suite->add_option("--samples", samples, "Samples per suite (0 keeps each suite's default)");
  for (auto* sub : {check, sat, implies, eval, translate, models, suite}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (cfg.max_size < 1) throw UsageError("--max must be at least 1");
    if (*check) return do_check(file, cfg, out, err);
    if (*sat) return do_sat(concept_text, tbox, cfg, out);
    if (*implies) return do_implies(tbox, lhs, rhs, strategy, cfg, out);
    if (*eval) return do_eval(model, concept_text, free, cfg, out, err);
    if (*translate) return do_translate(concept_text, target, cfg, out);
    if (*models) {
      if (size < 1) throw UsageError("--size must be at least 1");
      return do_models(tbox, size, cfg, out);
    }
    if (*suite) return do_suite(samples, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const UnboundVariable& e) {
    err << "usage error: " << e.what() << " (pass it with --free)\n";
    return kExitUsage;
  } catch (const UnknownIndividual& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainTooLarge& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace mualcq
