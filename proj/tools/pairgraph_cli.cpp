// Command-line front end: build, analyze, spectrum, ramanujan, search,
// reproduce, classes.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pairgraph.hpp"

namespace {

using namespace pairgraph;

constexpr int kExitMismatch = 4;

struct InstanceOptions {
  std::string group;
  std::string subgroup;
  std::string subgroup_gen;
  std::optional<std::string> set;
  std::optional<std::string> set_norm_preimage;
  std::optional<std::size_t> set_random;
  std::optional<std::uint64_t> seed;
  double tolerance = kDefaultTolerance;
  std::string format = "text";
  std::string out;
};

void add_instance_options(CLI::App* cmd, InstanceOptions& o, bool with_set = true) {
  cmd->add_option("--group", o.group, "group: shorthand kind:params (e.g. cyclic:12, gl2:3, cyclic:2*cyclic:3) or JSON")
      ->required();
  cmd->add_option("--subgroup", o.subgroup, "subgroup: element list, builtin name, or JSON descriptor");
  cmd->add_option("--subgroup-gen", o.subgroup_gen, "subgroup generated by these elements");
  if (with_set) {
    cmd->add_option("--set", o.set, "generating set: indices '2,4,5' or labels '(1,2);(3,4)'");
    cmd->add_option("--set-norm-preimage", o.set_norm_preimage, "generating set N^-1(values) in a field_additive group");
    cmd->add_option("--set-random", o.set_random, "generating set of k random elements of G - H (needs --seed)");
  }
  cmd->add_option("--seed", o.seed, "seed for every random choice");
  cmd->add_option("--tolerance", o.tolerance, "eigenvalue clustering tolerance");
  cmd->add_option("--out", o.out, "write the main output to this file instead of stdout");
}

bool is_builtin_name(const std::string& s) {
  return !s.empty() && s.find_first_not_of("abcdefghijklmnopqrstuvwxyz_0123456789") == std::string::npos &&
         std::isalpha(static_cast<unsigned char>(s[0]));
}

Subgroup resolve_subgroup(const FiniteGroup& g, const InstanceOptions& o) {
  if (!o.subgroup.empty() && !o.subgroup_gen.empty())
    throw ValidationError("--subgroup and --subgroup-gen are mutually exclusive");
  if (!o.subgroup_gen.empty()) return subgroup_generated(g, parse_element_list(g, o.subgroup_gen));
  if (o.subgroup.empty()) throw ValidationError("one of --subgroup or --subgroup-gen is required");
  const auto first = o.subgroup.find_first_not_of(' ');
  if (first != std::string::npos && o.subgroup[first] == '{') {
    try {
      return subgroup_from_json(g, json::parse(o.subgroup));
    } catch (const json::exception& e) {
      throw ValidationError(std::string("--subgroup: ") + e.what());
    }
  }
  if (is_builtin_name(o.subgroup)) return builtin_subgroup(g, o.subgroup);
  return Subgroup::from_elements(g, parse_element_list(g, o.subgroup));
}

ElementSet resolve_set(const Subgroup& h, const InstanceOptions& o) {
  const int given = int(o.set.has_value()) + int(o.set_norm_preimage.has_value()) + int(o.set_random.has_value());
  if (given > 1) throw ValidationError("give only one of --set, --set-norm-preimage, --set-random");
  if (o.set_random) {
    if (!o.seed) throw ValidationError("--set-random requires an explicit --seed");
    return seeded_subset(h.complement(), *o.set_random, *o.seed);
  }
  if (o.set_norm_preimage) return field_norm_preimage(h.parent(), parse_element_list(h.parent(), *o.set_norm_preimage));
  if (o.set) return parse_element_list(h.parent(), *o.set);
  return {};
}

PairGraph resolve_graph(const InstanceOptions& o) {
  const FiniteGroup g = make_group(parse_group_descriptor(o.group));
  const Subgroup h = resolve_subgroup(g, o);
  auto s = resolve_set(h, o);
  if (s.empty()) std::cerr << "warning: empty generating set; the graph is edgeless\n";
  return build_pair_graph(h, std::move(s));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ValidationError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_build(const InstanceOptions& o, const std::string& dot_path) {
  const PairGraph graph = resolve_graph(o);
  Output out(o.out);
  out.stream() << graph_to_json(graph).dump() << "\n";
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw ValidationError("cannot open DOT file '" + dot_path + "'");
    dot << graph_to_dot(graph);
  }
  return 0;
}

int cmd_analyze(const InstanceOptions& o) {
  const PairGraph graph = resolve_graph(o);
  const json report = structure_report(graph);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    os << report.dump(2) << "\n";
    return 0;
  }
  const auto& g = graph.group();
  os << "vertices: " << graph.vertex_count() << ", edges: " << graph.edge_count() << "\n";
  os << "index [G:H]: " << graph.subgroup().index() << ", |S_H| = " << graph.generating_set().inner.size()
     << ", |S_O| = " << graph.generating_set().outer.size() << "\n";
  os << "degree profile (coset: degree x size):";
  for (const auto& d : degree_profile(graph)) os << " H" << g.label(graph.subgroup().coset_rep(d.coset)) << ": " << d.degree << "x" << d.size;
  os << "\n";
  const auto terms = report["formula_terms"];
  os << "components: " << report["components"] << " (BFS), " << report["formula_components"] << " (formula " << terms[0]
     << " + " << terms[1] << " - " << terms[2] << ")\n";
  os << "connected: " << (report["connected"].get<bool>() ? "yes" : "no") << " (" << report["connectivity_witness"].get<std::string>() << ")\n";
  os << "bipartite: " << (report["bipartite"].get<bool>() ? "yes" : "no") << "\n";
  os << "regular: " << (report["regular"].get<bool>() ? "yes, degree " + report["regular_degree"].dump() : std::string("no")) << "\n";
  os << "isolated vertices: " << report["isolated"].size() << "\n";
  return 0;
}

int cmd_spectrum(const InstanceOptions& o) {
  const PairGraph graph = resolve_graph(o);
  const Spectrum s = compute_spectrum(graph, o.tolerance);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "csv") {
    os << spectrum_to_csv(s);
    return 0;
  }
  json report{{"clusters", spectrum_clusters_json(s)}, {"tolerance", s.tolerance}};
  const auto& gen = graph.generating_set();
  if (!gen.empty()) {
    const auto t = trivial_eigenvalues(graph.subgroup(), gen);
    report["trivial"] = {{"mu_plus", t.mu_plus}, {"mu_minus", t.mu_minus ? json(*t.mu_minus) : json(nullptr)}};
    if (!gen.outer.empty()) report["mu_plus_multiplicity"] = largest_eigenvalue_multiplicity(graph.subgroup(), gen);
  }
  report["zero_multiplicity_lower_bound"] = zero_multiplicity_lower_bound(graph.subgroup(), gen);
  if (o.format == "json") {
    os << report.dump(2) << "\n";
    return 0;
  }
  os << std::setprecision(12);
  for (const auto& c : s.clusters) os << std::setw(20) << (std::abs(c.value) < s.merge_gap() ? 0.0 : c.value) << "  x" << c.multiplicity << "\n";
  if (report.contains("trivial")) {
    os << "trivial eigenvalues: mu+ = " << report["trivial"]["mu_plus"].get<double>();
    if (!report["trivial"]["mu_minus"].is_null()) os << ", mu- = " << report["trivial"]["mu_minus"].get<double>();
    os << "\n";
  }
  return 0;
}

int cmd_ramanujan(const InstanceOptions& o) {
  const PairGraph graph = resolve_graph(o);
  const auto verdict = is_ramanujan(graph, o.tolerance);
  json report{{"ramanujan", verdict.ramanujan},
              {"k", verdict.k},
              {"bound", verdict.bound},
              {"worst_nontrivial", verdict.worst_nontrivial},
              {"margin", verdict.margin}};
  const auto& h = graph.subgroup();
  if (h.index() == 2 && graph.generating_set().inner.empty()) {
    const auto b = ramanujan_bound_check(h, graph.generating_set());
    report["size_bound"] = b.bound;
    report["size_bound_satisfied"] = b.satisfied;
  }
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == "json") {
    os << report.dump(2) << "\n";
    return 0;
  }
  os << std::setprecision(10) << "k = " << verdict.k << ", 2 sqrt(k-1) = " << verdict.bound
     << ", worst nontrivial |mu| = " << verdict.worst_nontrivial << ", margin = " << verdict.margin << "\n";
  if (report.contains("size_bound"))
    os << "size bound n + 2 - 2 sqrt(n) = " << report["size_bound"].get<double>() << " ("
       << (report["size_bound_satisfied"].get<bool>() ? "met" : "not met") << ")\n";
  os << "Ramanujan: " << (verdict.ramanujan ? "yes" : "no") << "\n";
  return 0;
}

int cmd_search(const InstanceOptions& o, SearchConfig cfg, const std::string& mode) {
  const FiniteGroup g = make_group(parse_group_descriptor(o.group));
  const Subgroup h = resolve_subgroup(g, o);
  if (mode == "exhaustive") {
    cfg.mode = SearchMode::exhaustive;
  } else if (mode == "random") {
    if (!o.seed) throw ValidationError("random search requires an explicit --seed");
    cfg.mode = SearchMode::random;
    cfg.seed = *o.seed;
  } else {
    throw ValidationError("--mode must be random or exhaustive");
  }
  cfg.tolerance = o.tolerance;
  const auto results = search_ramanujan(h, cfg);
  Output out(o.out);
  std::size_t hits = 0, violations = 0;
  for (const auto& r : results) {
    out.stream() << trial_to_json(r).dump() << "\n";
    hits += r.ramanujan.value_or(false);
    violations += r.bound_violation;
  }
  std::cerr << results.size() << " trials, " << hits << " Ramanujan";
  if (violations) std::cerr << ", " << violations << " size-bound violations";
  std::cerr << "\n";
  return violations ? kExitMismatch : 0;
}

int cmd_reproduce(const std::vector<std::string>& ids, double tolerance) {
  const auto outcomes = run_reproduction(ids, tolerance);
  bool all = true;
  for (const auto& o : outcomes) {
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << o.id << "\n";
    for (const auto& m : o.mismatches) std::cout << "       " << m << "\n";
    all = all && o.passed;
  }
  std::cout << (all ? "all examples reproduced" : "reproduction mismatch") << "\n";
  return all ? 0 : kExitMismatch;
}

int cmd_classes(const InstanceOptions& o, std::size_t k) {
  const FiniteGroup g = make_group(parse_group_descriptor(o.group));
  const Subgroup h = resolve_subgroup(g, o);
  const auto c = equivalence_class_counts(h, k);
  std::cout << "k = " << c.k << ": " << c.orbits_k << " orbits, " << c.classes_k << " isomorphism classes\n";
  std::cout << "n - k = " << h.order() - c.k << ": " << c.orbits_complement << " orbits, " << c.classes_complement
            << " isomorphism classes\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-subgroup pair graphs: construction, structure, spectra and Ramanujan certification"};
  app.require_subcommand(1);

  InstanceOptions build_o, analyze_o, spectrum_o, ramanujan_o, search_o, classes_o;
  std::string dot_path;
  auto* build = app.add_subcommand("build", "build a pair graph and write it as JSON (and optionally DOT)");
  add_instance_options(build, build_o);
  build->add_option("--dot", dot_path, "also write a Graphviz DOT file");

  auto* analyze = app.add_subcommand("analyze", "degrees, components, connectivity and bipartiteness");
  add_instance_options(analyze, analyze_o);
  analyze->add_option("--format", analyze_o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* spectrum = app.add_subcommand("spectrum", "adjacency spectrum as clustered eigenvalues");
  add_instance_options(spectrum, spectrum_o);
  spectrum->add_option("--format", spectrum_o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* ramanujan = app.add_subcommand("ramanujan", "Ramanujan verdict for a connected regular pair graph");
  add_instance_options(ramanujan, ramanujan_o);
  ramanujan->add_option("--format", ramanujan_o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  SearchConfig cfg;
  std::string mode = "random";
  bool no_certify = false;
  auto* search = app.add_subcommand("search", "seeded or exhaustive search over k-subsets of G - H (index 2)");
  add_instance_options(search, search_o, false);
  search->add_option("--k", cfg.k, "generating set size")->required();
  search->add_option("--mode", mode, "random or exhaustive");
  search->add_option("--trials", cfg.trials, "number of random trials");
  search->add_flag("--no-certify", no_certify, "skip the spectrum of connected candidates");

  std::vector<std::string> example_ids;
  double reproduce_tol = kDefaultTolerance;
  auto* reproduce = app.add_subcommand("reproduce", "rerun every archived worked example");
  reproduce->add_option("--example", example_ids, "restrict to these example ids");
  reproduce->add_option("--tolerance", reproduce_tol, "eigenvalue clustering tolerance");
  reproduce->add_flag_callback("--list", [] {
    for (const auto& c : reproduction_checks()) std::cout << c.id << "  " << c.title << "\n";
    std::exit(0);
  }, "list example ids");

  std::size_t classes_k = 1;
  auto* classes = app.add_subcommand("classes", "experiment: isomorphism classes for k and n - k (index 2)");
  add_instance_options(classes, classes_o, false);
  classes->add_option("--k", classes_k, "generating set size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) return cmd_build(build_o, dot_path);
    if (*analyze) return cmd_analyze(analyze_o);
    if (*spectrum) return cmd_spectrum(spectrum_o);
    if (*ramanujan) return cmd_ramanujan(ramanujan_o);
    if (*search) {
      cfg.certify = !no_certify;
      return cmd_search(search_o, cfg, mode);
    }
    if (*reproduce) return cmd_reproduce(example_ids, reproduce_tol);
    if (*classes) return cmd_classes(classes_o, classes_k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
