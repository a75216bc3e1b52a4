/* Copyright 2026 The qsober Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// qsober: command-line front end for the finite-model engine.
//
// Exit status: 0 success, 1 scenario verdict mismatch, 2 input, validation or
// cap errors.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsober/corpus.hpp"
#include "qsober/cotopology.hpp"
#include "qsober/duality.hpp"
#include "qsober/error.hpp"
#include "qsober/io.hpp"
#include "qsober/qorder.hpp"
#include "qsober/scenario.hpp"
#include "qsober/sobriety.hpp"

namespace {

using namespace qsober;

struct Options {
  std::string report;
  std::string quantale;
  Caps caps = Caps::from_env();
};

// Either a JSON file or "kind[:n]" such as "godel:5" or "boolean4".
Quantale load_quantale_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return quantale_from_json(read_json_file(arg));
  Json doc;
  const auto colon = arg.find(':');
  doc["standard"] = arg.substr(0, colon);
  if (colon != std::string::npos) {
    try {
      doc["n"] = std::stoul(arg.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kMalformedInput, arg, "expected kind:n");
    }
  } else if (arg != "boolean4") {
    throw Error(ErrorKind::kMalformedInput, arg, "not a file; expected kind:n or boolean4");
  }
  return quantale_from_json(doc);
}

// --quantale wins over a "quantale" object embedded in the input document.
std::shared_ptr<const Quantale> resolve_quantale(const Options& opt, const Json& doc) {
  if (!opt.quantale.empty()) return std::make_shared<const Quantale>(load_quantale_arg(opt.quantale));
  if (doc.is_object() && doc.contains("quantale")) {
    try {
      return std::make_shared<const Quantale>(quantale_from_json(doc["quantale"]));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kMalformedInput) throw;
      throw Error(ErrorKind::kMalformedInput, "/quantale" + e.subject(), e.message());
    }
  }
  throw Error(ErrorKind::kMalformedInput, "/quantale", "no quantale given; use --quantale or embed one");
}

void emit(const Options& opt, const Json& report) {
  if (opt.report.empty()) return;
  std::ofstream out(opt.report, std::ios::binary);
  if (!out) throw Error(ErrorKind::kMalformedInput, opt.report, "cannot write report");
  out << report.dump(2) << '\n';
}

std::string show(const Quantale& q, const FuzzySet& a) { return format(q, a); }

void print_family(const Quantale& q, const std::vector<FuzzySet>& family, const std::string& title) {
  std::cout << title << " (" << family.size() << "):\n";
  for (std::size_t i = 0; i < family.size(); ++i) std::cout << "  [" << i << "] " << show(q, family[i]) << '\n';
}

void print_sober(const Cotopology& tau, const SoberReport& r) {
  const Quantale& q = tau.quantale();
  std::cout << "verdict: " << to_string(r.verdict) << '\n';
  print_family(q, r.irreducibles, "irreducible closed sets");
  for (std::size_t x = 0; x < r.eta.size(); ++x)
    std::cout << "  eta(" << tau.points().name(x) << ") = [" << r.eta[x] << "]\n";
  for (std::size_t w : r.witnesses)
    std::cout << "  witness: [" << w << "] " << show(q, r.irreducibles[w]) << " is not the closure of a unique point\n";
}

Cotopology load_space(const Options& opt, const std::string& path, std::shared_ptr<const Quantale>* q_out = nullptr) {
  Json doc = read_json_file(path);
  auto q = resolve_quantale(opt, doc);
  if (q_out) *q_out = q;
  return cotopology_from_json(q, doc, opt.caps);
}

// Fuzzy sets to act on: --set values, else every named set in the file.
std::vector<std::pair<std::string, FuzzySet>> collect_sets(const Quantale& q, const Json& doc,
                                                           const std::vector<std::string>& given,
                                                           std::size_t points) {
  std::vector<std::pair<std::string, FuzzySet>> out;
  for (const auto& text : given) {
    Json labels = Json::array();
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) labels.push_back(item);
    out.emplace_back(text, fuzzy_set_from_json(q, labels, points, "--set " + text));
  }
  if (given.empty() && doc.contains("fuzzy_sets")) {
    SpaceFile sf = space_from_json(q, doc);
    for (auto& [name, a] : sf.fuzzy_sets) out.emplace_back(name, a);
  }
  return out;
}

int run_validate_quantale(const Options& opt, const std::string& input) {
  Quantale q = load_quantale_arg(input);
  Json report = quantale_to_json(q);
  std::cout << q.name() << ": valid quantale with " << q.size() << " elements\n";
  std::cout << "residuation:\n";
  for (Element a = 0; a < q.size(); ++a) {
    std::cout << "  " << q.label(a) << " ->";
    for (Element b = 0; b < q.size(); ++b) std::cout << ' ' << q.label(q.implies(a, b));
    std::cout << '\n';
  }
  auto dn = check_double_negation(q);
  std::cout << "double negation: " << (dn.holds ? "holds" : "fails");
  if (dn.witness) std::cout << " (witness " << q.label(*dn.witness) << ")";
  std::cout << "\nlinear: " << (is_linear(q) ? "yes" : "no")
            << "\nenough coprimes: " << (has_enough_coprimes(q) ? "yes" : "no") << '\n';
  emit(opt, report);
  return 0;
}

int run_generate(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  print_family(tau.quantale(), tau.closed(), std::string(to_string(tau.mode())) + " cotopology");
  emit(opt, cotopology_to_json(tau));
  return 0;
}

int run_closure(const Options& opt, const std::string& path, const std::vector<std::string>& sets) {
  Json doc = read_json_file(path);
  auto q = resolve_quantale(opt, doc);
  Cotopology tau = cotopology_from_json(q, doc, opt.caps);
  Json report = Json::array();
  for (const auto& [name, a] : collect_sets(*q, doc, sets, tau.point_count())) {
    FuzzySet c = closure(tau, a);
    std::cout << name << ": " << show(*q, a) << " -> " << show(*q, c) << '\n';
    report.push_back({{"name", name}, {"set", fuzzy_set_to_json(*q, a)}, {"closure", fuzzy_set_to_json(*q, c)}});
  }
  emit(opt, {{"closures", report}});
  return 0;
}

int run_specialization(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  QOrder omega = specialization(tau);
  const Quantale& q = tau.quantale();
  for (std::size_t x = 0; x < omega.size(); ++x) {
    std::cout << tau.points().name(x) << ':';
    for (std::size_t y = 0; y < omega.size(); ++y) std::cout << ' ' << q.label(omega(x, y));
    std::cout << '\n';
  }
  emit(opt, qorder_to_json(q, tau.points(), omega));
  return 0;
}

int run_alexandroff(const Options& opt, const std::string& path) {
  Json doc = read_json_file(path);
  auto q = resolve_quantale(opt, doc);
  auto [points, r] = qorder_from_json(*q, doc);
  Cotopology gamma = alexandroff(q, points, r, opt.caps);
  print_family(*q, gamma.closed(), "lower sets");
  emit(opt, cotopology_to_json(gamma));
  return 0;
}

int run_sobrify(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  Sobrification s = sobrify(tau);
  const Quantale& q = tau.quantale();
  print_family(q, s.irreducibles, "points of s(X)");
  for (std::size_t x = 0; x < tau.point_count(); ++x)
    std::cout << "  eta(" << tau.points().name(x) << ") = [" << s.eta(x) << "]\n";
  print_family(q, s.space.closed(), "closed sets of s(X)");
  Json eta = Json::object();
  for (std::size_t x = 0; x < tau.point_count(); ++x) eta[tau.points().name(x)] = s.eta(x);
  emit(opt, {{"sobrification", cotopology_to_json(s.space)}, {"eta", eta}});
  return 0;
}

int run_check_sober(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  SoberReport r = is_sober(tau);
  print_sober(tau, r);
  emit(opt, sober_report_to_json(tau, r));
  return 0;
}

int run_check_hausdorff(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  const bool h = is_hausdorff(tau, opt.caps);
  std::cout << "hausdorff: " << (h ? "yes" : "no") << '\n';
  Json report = {{"hausdorff", h}};
  if (is_linear(tau.quantale()) && tau.is_stratified()) {
    auto check = hausdorff_implies_sober_check(tau, opt.caps);
    std::cout << "sober: " << to_string(check.sober.verdict) << '\n';
    report["verdict"] = std::string(to_string(check.sober.verdict));
    report["implication_holds"] = check.implication_holds;
  }
  emit(opt, report);
  return 0;
}

int run_lowen(const Options& opt, const std::string& path) {
  Json doc = read_json_file(path);
  auto q = resolve_quantale(opt, doc);
  auto [points, crisp] = crisp_from_json(doc);
  Cotopology tau = lowen(q, points, crisp, opt.caps);
  const bool crisp_sober = is_crisp_sober(crisp);
  SoberReport r = is_sober(tau);
  std::cout << "crisp sober: " << (crisp_sober ? "yes" : "no") << '\n';
  std::cout << "lowen cotopology: " << tau.size() << " closed sets\n";
  print_sober(tau, r);
  Json report = {{"crisp_sober", crisp_sober}, {"cotopology", cotopology_to_json(tau)},
                 {"sober_report", sober_report_to_json(tau, r)}};
  if (is_linear(*q)) report["agrees"] = crisp_sober == (r.verdict == Verdict::kSober);
  emit(opt, report);
  return 0;
}

int run_dualize(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  QTopology open = negate_topology(tau);
  Cotopology back = negate_topology(open);
  const bool involution = back.closed() == tau.closed();
  print_family(tau.quantale(), open.open(), std::string(to_string(open.mode())) + " Q-topology");
  std::cout << "involution: " << (involution ? "yes" : "no") << '\n';
  emit(opt, {{"topology", topology_to_json(open)}, {"involution", involution}});
  return 0;
}

int run_fr_points(const Options& opt, const std::string& path) {
  Cotopology tau = load_space(opt, path);
  QTopology open = negate_topology(tau);
  const Quantale& q = tau.quantale();
  std::vector<FrMap> maps = fr_points(open);
  TopologicalSobriety ts = is_sober_topological(open, opt.caps);
  Json list = Json::array();
  std::cout << "frame points (" << maps.size() << "), named by their irreducible closed set:\n";
  for (const FrMap& g : maps) {
    FuzzySet f = irreducible_of_fr_map(open, g);
    std::cout << "  " << show(q, f) << '\n';
    Json values = Json::array();
    for (Element v : g) values.push_back(q.label(v));
    list.push_back({{"irreducible", fuzzy_set_to_json(q, f)}, {"values", values}});
  }
  std::cout << "sober (topological): " << (ts.sober ? "yes" : "no") << '\n';
  emit(opt, {{"fr_points", list}, {"sober", ts.sober}, {"route", ts.used_search ? "search" : "irreducible"}});
  return 0;
}

int run_scenarios(const Options& opt, const std::vector<std::string>& names, bool all, bool list,
                  const std::string& registry_path) {
  std::vector<Scenario> custom;
  if (!registry_path.empty()) custom = parse_registry(read_json_file(registry_path));
  const std::vector<Scenario>& registry = registry_path.empty() ? builtin_registry() : custom;
  if (list) {
    for (const auto& s : registry) std::cout << s.name << '\n';
    return 0;
  }
  std::vector<const Scenario*> chosen;
  if (all) {
    for (const auto& s : registry) chosen.push_back(&s);
  } else {
    for (const auto& n : names) {
      const Scenario* s = find_scenario(registry, n);
      if (!s) throw Error(ErrorKind::kMalformedInput, n, "unknown scenario; see `qsober scenario --list`");
      chosen.push_back(s);
    }
  }
  if (chosen.empty()) throw Error(ErrorKind::kMalformedInput, "scenario", "name a scenario or pass --all");
  int status = 0;
  Json reports = Json::array();
  for (const Scenario* s : chosen) {
    ScenarioOutcome out = run_scenario(*s, opt.caps);
    std::cout << s->name << ": " << (out.passed() ? "ok" : "MISMATCH");
    if (out.report.contains("verdict")) std::cout << " (verdict " << out.report["verdict"].get<std::string>() << ")";
    if (out.report.contains("error")) std::cout << " (refused: " << out.report["error"].get<std::string>() << ")";
    if (s->exploratory) std::cout << " [exploratory]";
    std::cout << '\n';
    if (out.report.contains("witnesses"))
      for (const auto& w : out.report["witnesses"]) std::cout << "  witness " << w.dump() << '\n';
    for (const auto& m : out.mismatches) std::cout << "  " << m << '\n';
    if (!out.passed()) status = 1;
    reports.push_back(std::move(out.report));
  }
  emit(opt, chosen.size() == 1 ? reports[0] : Json{{"scenarios", reports}});
  return status;
}

int run_corpus(const Options& opt, std::uint64_t seed, const CorpusBounds& bounds) {
  auto corpus = make_corpus(seed, bounds, opt.caps);
  Json list = Json::array();
  for (const auto& m : corpus) {
    const bool strat = m.space.is_stratified();
    std::string verdict(to_string(is_sober(m.space).verdict));
    std::cout << m.name << ": " << m.space.size() << " closed sets, " << verdict << '\n';
    list.push_back({{"name", m.name}, {"stratified", strat}, {"verdict", verdict},
                    {"space", cotopology_to_json(m.space)}});
  }
  emit(opt, {{"seed", seed}, {"members", list}});
  return 0;
}

std::string cap_flag(const std::string& subject) {
  if (subject == "cotopology") return "--cap-cotopology";
  if (subject == "maps") return "--cap-maps";
  return "--cap-enumeration";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsober: finite quantale-valued cotopological spaces and sobriety"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--report", opt.report, "Write the machine-readable report to this path");
  app.add_option("-q,--quantale", opt.quantale, "Quantale file, or kind:n (godel, lukasiewicz, nilpotent_min), or boolean4");
  app.add_option("--cap-enumeration", opt.caps.enumeration, "Largest |Q|^|X| enumerated");
  app.add_option("--cap-cotopology", opt.caps.cotopology, "Largest generated closed family");
  app.add_option("--cap-maps", opt.caps.maps, "Most maps enumerated in uniqueness checks");

  std::string input;
  std::vector<std::string> sets;
  auto* vq = app.add_subcommand("validate-quantale", "Validate a quantale and print derived tables");
  vq->add_option("quantale", input, "Quantale file or kind:n")->required();

  struct SpaceCommand { const char* name; const char* help; int (*run)(const Options&, const std::string&); };
  const SpaceCommand space_commands[] = {
      {"generate", "Generate the cotopology of a space file", run_generate},
      {"specialization", "Print the specialization Q-order", run_specialization},
      {"alexandroff", "Lower-set cotopology of a Q-order file", run_alexandroff},
      {"sobrify", "Build the sobrification", run_sobrify},
      {"check-sober", "Sobriety report", run_check_sober},
      {"check-hausdorff", "Whether the diagonal is closed", run_check_hausdorff},
      {"lowen", "Lowen image of a crisp topology file", run_lowen},
      {"dualize", "Negate closed sets into a Q-topology", run_dualize},
      {"fr-points", "Frame points of the negated topology", run_fr_points},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, const std::string&)>> space_subs;
  for (const auto& c : space_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", input, "Input file")->required()->check(CLI::ExistingFile);
    space_subs.emplace_back(sub, c.run);
  }
  auto* cl = app.add_subcommand("closure", "Closures of fuzzy sets in a space");
  cl->add_option("file", input, "Space file")->required()->check(CLI::ExistingFile);
  cl->add_option("--set", sets, "Comma-separated element labels, one value per point");

  std::vector<std::string> names;
  bool all = false, list = false;
  std::string registry;
  auto* sc = app.add_subcommand("scenario", "Run named worked examples");
  sc->add_option("names", names, "Scenario names");
  sc->add_flag("--all", all, "Run every registered scenario");
  sc->add_flag("--list", list, "List registered scenarios");
  sc->add_option("--registry", registry, "Use this registry file instead of the built-in one")
      ->check(CLI::ExistingFile);

  std::uint64_t seed = 0;
  CorpusBounds bounds;
  auto* co = app.add_subcommand("corpus", "Print a seeded corpus of generated spaces");
  co->add_option("--seed", seed, "Random seed");
  co->add_option("--count", bounds.count, "Number of spaces");
  co->add_option("--max-quantale", bounds.max_quantale, "Largest quantale carrier");
  co->add_option("--max-points", bounds.max_points, "Largest point set");
  co->add_option("--max-subbasis", bounds.max_subbasis, "Largest subbasis");
  co->add_flag("--chains-only", bounds.chains_only, "Use chain quantales only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (vq->parsed()) return run_validate_quantale(opt, input);
    if (cl->parsed()) return run_closure(opt, input, sets);
    if (sc->parsed()) return run_scenarios(opt, names, all, list, registry);
    if (co->parsed()) return run_corpus(opt, seed, bounds);
    for (auto& [sub, run] : space_subs)
      if (sub->parsed()) return run(opt, input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::kCapExceeded)
      std::cerr << "raise the limit with " << cap_flag(e.subject()) << " or the matching QSOBER_CAP_* variable\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
