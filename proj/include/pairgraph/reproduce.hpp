#pragma once

// Regression harness over the reference worked examples. Each check rebuilds
// its instance from scratch and compares against the archived values.

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iterator>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pairgraph/actions.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/search.hpp"
#include "pairgraph/spectral.hpp"
#include "pairgraph/structure.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

/// Archived values are compared at this absolute tolerance.
inline constexpr double kReproductionTolerance = 1e-6;

/// Seeds for the examples that were drawn at random.
inline constexpr std::uint64_t kGl2F5Seed = 7;
inline constexpr std::uint64_t kGl2F3Seed = 1;

struct CheckOutcome {
  std::string id;
  bool passed = true;
  std::vector<std::string> mismatches;
};

struct ReproductionCheck {
  std::string id;
  std::string title;
  /// Argument: eigenvalue clustering tolerance.
  std::function<CheckOutcome(double)> run;
};

using ExpectedClusters = std::vector<std::pair<double, std::size_t>>;

namespace detail {

class Recorder {
 public:
  explicit Recorder(std::string id) { out_.id = std::move(id); }

  template <class A, class B>
  void equal(const std::string& what, const A& expected, const B& actual) {
    if (expected == actual) return;
    std::ostringstream os;
    os << what << ": expected " << show(expected) << ", got " << show(actual);
    fail(os.str());
  }

  void near(const std::string& what, double expected, double actual) {
    if (std::abs(expected - actual) <= kReproductionTolerance) return;
    std::ostringstream os;
    os << std::setprecision(12) << what << ": expected " << expected << ", got " << actual;
    fail(os.str());
  }

  void check(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }

  void clusters(const std::string& what, const Spectrum& s, const ExpectedClusters& expected) {
    bool ok = s.clusters.size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i)
      ok = std::abs(s.clusters[i].value - expected[i].first) <= kReproductionTolerance &&
           s.clusters[i].multiplicity == expected[i].second;
    if (ok) return;
    std::ostringstream os;
    os << std::setprecision(10) << what << ": expected {";
    for (const auto& [v, m] : expected) os << " (" << v << " x" << m << ")";
    os << " }, got {";
    for (const auto& c : s.clusters) os << " (" << c.value << " x" << c.multiplicity << ")";
    os << " }";
    fail(os.str());
  }

  CheckOutcome done() { return std::move(out_); }

 private:
  void fail(std::string msg) {
    out_.passed = false;
    out_.mismatches.push_back(std::move(msg));
  }

  template <class T>
  static std::string show(const T& v) {
    std::ostringstream os;
    if constexpr (requires { v.begin(); }) {
      os << "[";
      bool first = true;
      for (const auto& x : v) {
        os << (first ? "" : ",") << x;
        first = false;
      }
      os << "]";
    } else {
      os << v;
    }
    return os.str();
  }

  CheckOutcome out_;
};

inline std::vector<std::size_t> profile_degrees(const PairGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& d : degree_profile(g)) out.push_back(d.degree);
  return out;
}

inline ExpectedClusters symmetric_clusters(const ExpectedClusters& positive, std::size_t zeros = 0) {
  ExpectedClusters out = positive;
  if (zeros) out.emplace_back(0.0, zeros);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.emplace_back(-it->first, it->second);
  return out;
}

inline ElementSet labels_to_set(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  ElementSet out;
  for (const char* l : labels) out.push_back(*g.find_label(l));
  return normalize(std::move(out));
}

}  // namespace detail

/// Positive half of the Z/20 spectrum for S = {3, 5, 7}, top value `top`.
inline ExpectedClusters z20_positive_clusters(double top) {
  const double r5 = std::sqrt(5.0);
  return {{top, 1}, {(3 + r5) / 2, 2}, {(1 + r5) / 2, 2}, {1.0, 1}, {(r5 - 1) / 2, 2}, {(3 - r5) / 2, 2}};
}

/// Exact rows of the evaluated group-subgroup matrix for Z/12, H = {0,3,6,9},
/// S = {2,4,5,7,8}.
inline std::vector<std::vector<std::uint8_t>> z12_group_matrix_rows() {
  return {{0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 0},
          {0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1},
          {0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1},
          {0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 1}};
}

/// S_3 in the order e, (2,3), (1,2), (1,2,3), (1,3,2), (1,3) and the Cayley
/// adjacency matrix for S = {(1,2), (1,2,3), (1,3,2)} in that order.
inline std::vector<const char*> s3_reference_order() { return {"()", "(2,3)", "(1,2)", "(1,2,3)", "(1,3,2)", "(1,3)"}; }

inline std::vector<std::vector<std::uint8_t>> s3_cayley_matrix() {
  return {{0, 0, 1, 1, 1, 0}, {0, 0, 1, 1, 0, 1}, {1, 1, 0, 0, 0, 1},
          {1, 1, 0, 0, 1, 0}, {1, 0, 0, 1, 0, 1}, {0, 1, 1, 0, 1, 0}};
}

inline std::vector<ReproductionCheck> reproduction_checks() {
  using detail::Recorder;
  std::vector<ReproductionCheck> checks;

  checks.push_back({"z12-degrees", "Z/12 with H = {0,3,6,9}, S = {2,4,5,7,8}: degrees and connectivity", [](double) {
                      Recorder r("z12-degrees");
                      auto g = make_cyclic(12);
                      auto h = Subgroup::from_elements(g, {0, 3, 6, 9});
                      auto graph = build_pair_graph(h, {2, 4, 5, 7, 8});
                      r.equal("coset degrees", std::vector<std::size_t>{5, 2, 3}, detail::profile_degrees(graph));
                      r.equal("BFS components", std::size_t{1}, components_bfs(graph).count);
                      auto f = component_count_formula(h, graph.generating_set());
                      r.equal("formula terms", std::vector<std::size_t>{1, 8, 8},
                              std::vector<std::size_t>{f.subgroup_index, f.outer_vertices, f.covered_vertices});
                      r.check("connectivity criterion", is_connected(h, graph.generating_set()).connected);
                      r.check("bipartite with parts H, G - H", is_bipartite(graph).bipartite);
                      r.check("not regular", !regularity_check(graph).regular);
                      return r.done();
                    }});

  checks.push_back({"z12-group-matrix", "Z/12 group-subgroup matrix rows", [](double) {
                      Recorder r("z12-group-matrix");
                      auto g = make_cyclic(12);
                      auto h = Subgroup::from_elements(g, {0, 3, 6, 9});
                      const ElementSet s{2, 4, 5, 7, 8};
                      auto rows = adjacency_rows_via_group_matrix(h, s);
                      r.check("evaluated matrix equals the archived 4x12 matrix", rows == z12_group_matrix_rows());
                      auto graph = build_pair_graph(h, s);
                      bool same = true;
                      for (std::size_t i = 0; i < rows.size(); ++i)
                        for (Element j = 0; j < 12; ++j)
                          same = same && (rows[i][j] == 1) == graph.adjacent(h.elements()[i], j);
                      r.check("matrix rows equal the H-rows of the pair graph", same);
                      return r.done();
                    }});

  checks.push_back({"s3-cayley", "S_3 Cayley graph from the group matrix", [](double) {
                      Recorder r("s3-cayley");
                      auto g = make_symmetric(3);
                      auto graph = build_cayley_graph(g, detail::labels_to_set(g, {"(1,2)", "(1,2,3)", "(1,3,2)"}));
                      auto order = s3_reference_order();
                      auto expected = s3_cayley_matrix();
                      bool ok = true;
                      for (std::size_t i = 0; i < 6; ++i)
                        for (std::size_t j = 0; j < 6; ++j)
                          ok = ok && (graph.adjacent(*g.find_label(order[i]), *g.find_label(order[j])) == (expected[i][j] == 1));
                      r.check("adjacency equals the archived 6x6 matrix", ok);
                      return r.done();
                    }});

  checks.push_back({"star", "H = {e}, S = G - H gives a star", [](double) {
                      Recorder r("star");
                      auto g = make_symmetric(3);
                      auto h = builtin_subgroup(g, "trivial");
                      auto graph = build_pair_graph(h, h.complement());
                      r.equal("isolated vertices", std::size_t{0}, isolated_vertices(graph).size());
                      r.equal("edges", std::size_t{5}, graph.edge_count());
                      r.equal("centre degree", std::size_t{5}, graph.degree(g.identity()));
                      return r.done();
                    }});

  checks.push_back({"z12-components", "Z/12 component counts for S1 = {1,7}, S2 = {4,5,6,10,11}", [](double) {
                      Recorder r("z12-components");
                      auto g = make_cyclic(12);
                      auto h = Subgroup::from_elements(g, {0, 3, 6, 9});
                      auto g1 = build_pair_graph(h, {1, 7});
                      auto g2 = build_pair_graph(h, {4, 5, 6, 10, 11});
                      auto f1 = component_count_formula(h, g1.generating_set());
                      auto f2 = component_count_formula(h, g2.generating_set());
                      r.equal("S1 BFS components", std::size_t{6}, components_bfs(g1).count);
                      r.equal("S2 BFS components", std::size_t{2}, components_bfs(g2).count);
                      r.equal("S1 formula terms", std::vector<std::size_t>{2, 8, 4},
                              std::vector<std::size_t>{f1.subgroup_index, f1.outer_vertices, f1.covered_vertices});
                      r.equal("S2 formula terms", std::vector<std::size_t>{2, 8, 8},
                              std::vector<std::size_t>{f2.subgroup_index, f2.outer_vertices, f2.covered_vertices});
                      r.equal("S1 reachable subgroup", ElementSet{0, 6}, identity_subgroup(h, g1.generating_set()));
                      r.equal("S1 isolated vertices", ElementSet{2, 5, 8, 11}, isolated_vertices(g1));
                      return r.done();
                    }});

  checks.push_back({"f49-norm", "F_49 over F_7 with S = N^-1({5,6})", [](double tol) {
                      Recorder r("f49-norm");
                      auto g = make_field_additive(7, 2);
                      auto h = builtin_subgroup(g, "prime_field");
                      auto graph = build_pair_graph(h, field_norm_preimage(g, {5, 6}));
                      r.equal("|S|", std::size_t{16}, graph.generating_set().size());
                      auto degrees = detail::profile_degrees(graph);
                      std::sort(degrees.begin() + 1, degrees.end());
                      r.equal("coset degrees", std::vector<std::size_t>{16, 2, 2, 2, 2, 4, 4}, degrees);
                      auto t = trivial_eigenvalues(h, graph.generating_set());
                      r.near("mu+", 4 * std::sqrt(3.0), t.mu_plus);
                      r.near("mu-", -4 * std::sqrt(3.0), t.mu_minus.value_or(0));
                      auto s = compute_spectrum(graph, tol);
                      r.check("mu+ in spectrum", s.count_near(t.mu_plus, kReproductionTolerance) >= 1);
                      r.check("mu- in spectrum", s.count_near(*t.mu_minus, kReproductionTolerance) >= 1);
                      return r.done();
                    }});

  checks.push_back({"gl2f5-random", "GL2(F5) over SL2(F5), 7-element S with coset counts 2, 2, 3", [](double tol) {
                      Recorder r("gl2f5-random");
                      auto g = make_gl2(5);
                      auto h = builtin_subgroup(g, "sl2_in_gl2");
                      r.equal("|G|", std::size_t{480}, g.order());
                      auto graph = build_pair_graph(h, random_set_with_coset_counts(h, {2, 2, 3}, kGl2F5Seed));
                      r.equal("coset degrees", std::vector<std::size_t>{7, 2, 2, 3}, detail::profile_degrees(graph));
                      r.equal("components", std::size_t{1}, components_bfs(graph).count);
                      auto t = trivial_eigenvalues(h, graph.generating_set());
                      r.near("mu+", std::sqrt(17.0), t.mu_plus);
                      r.near("mu-", -std::sqrt(17.0), t.mu_minus.value_or(0));
                      auto s = compute_spectrum(graph, tol);
                      r.check("mu+ in spectrum", s.count_near(t.mu_plus, kReproductionTolerance) >= 1);
                      r.check("mu- in spectrum", s.count_near(*t.mu_minus, kReproductionTolerance) >= 1);
                      return r.done();
                    }});

  checks.push_back({"a4-klein", "A4 over the Klein four group, asymmetric S", [](double tol) {
                      Recorder r("a4-klein");
                      auto g = make_alternating(4);
                      auto h = builtin_subgroup(g, "klein_in_a4");
                      auto s = detail::labels_to_set(g, {"(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3)", "(1,4,3)", "(2,3,4)", "(2,4,3)"});
                      auto graph = build_pair_graph(h, s);
                      r.check("bipartite", is_bipartite(graph).bipartite);
                      r.check("no sign homomorphism", !sign_homomorphism_exists(g, s));
                      auto t = trivial_eigenvalues(h, graph.generating_set());
                      r.near("mu+", 4.0, t.mu_plus);
                      r.near("mu-", -2.0, t.mu_minus.value_or(0));
                      auto spec = compute_spectrum(graph, tol);
                      r.check("mu+ in spectrum", spec.count_near(4.0, kReproductionTolerance) >= 1);
                      r.check("mu- in spectrum", spec.count_near(-2.0, kReproductionTolerance) >= 1);
                      return r.done();
                    }});

  checks.push_back({"z20-table", "Z/20 over Z/10: spectra of {3,5,7} and {1,3,5,13,15,17,19}", [](double tol) {
                      Recorder r("z20-table");
                      auto g = make_cyclic(20);
                      auto h = builtin_subgroup(g, "evens");
                      const ElementSet s1{3, 5, 7}, s2{1, 3, 5, 13, 15, 17, 19};
                      r.clusters("S1 spectrum", compute_spectrum(build_pair_graph(h, s1), tol),
                                 detail::symmetric_clusters(z20_positive_clusters(3.0)));
                      r.clusters("S2 spectrum", compute_spectrum(build_pair_graph(h, s2), tol),
                                 detail::symmetric_clusters(z20_positive_clusters(7.0)));
                      auto translated = right_translate_set(h, s1, 4);
                      r.equal("R_4(S1)", ElementSet{7, 9, 11}, translated);
                      auto rep = verify_spectral_symmetry(h, translated, s2, kReproductionTolerance, tol);
                      r.check("complementary interior spectra agree", rep.holds);
                      return r.done();
                    }});

  checks.push_back({"s4-ramanujan", "S4 over A4: 8-regular Ramanujan graph and its 4-element partner", [](double tol) {
                      Recorder r("s4-ramanujan");
                      auto g = make_symmetric(4);
                      auto h = builtin_subgroup(g, "alternating_in_symmetric");
                      auto s = detail::labels_to_set(
                          g, {"(1,2)", "(1,3)", "(2,4)", "(3,4)", "(1,2,3,4)", "(1,3,2,4)", "(1,4,2,3)", "(1,4,3,2)"});
                      auto graph = build_pair_graph(h, s);
                      auto spec = compute_spectrum(graph, tol);
                      r.clusters("spectrum", spec, {{8, 1}, {4, 2}, {0, 18}, {-4, 2}, {-8, 1}});
                      r.check("size bound satisfied", ramanujan_bound_check(h, graph.generating_set()).satisfied);
                      r.check("Ramanujan", is_ramanujan(graph, spec).ramanujan);
                      auto partner = build_pair_graph(h, detail::labels_to_set(g, {"(1,2)", "(3,4)", "(1,3,2,4)", "(1,4,2,3)"}));
                      r.equal("partner components", std::size_t{3}, components_bfs(partner).count);
                      return r.done();
                    }});

  checks.push_back({"gl2f3-ramanujan", "GL2(F3) over SL2(F3): 17-regular and complementary 7-regular", [](double tol) {
                      Recorder r("gl2f3-ramanujan");
                      auto g = make_gl2(3);
                      auto h = builtin_subgroup(g, "sl2_in_gl2");
                      r.equal("|G|", std::size_t{48}, g.order());
                      r.equal("|H|", std::size_t{24}, h.order());
                      auto s = seeded_subset(h.complement(), 17, kGl2F3Seed);
                      ElementSet rest;
                      std::set_difference(h.complement().begin(), h.complement().end(), s.begin(), s.end(),
                                          std::back_inserter(rest));
                      auto big = build_pair_graph(h, s);
                      auto small = build_pair_graph(h, rest);
                      auto b17 = ramanujan_bound_check(h, big.generating_set());
                      auto b7 = ramanujan_bound_check(h, small.generating_set());
                      r.near("size bound", 26.0 - 2.0 * std::sqrt(24.0), b17.bound);
                      r.check("17 meets the size bound", b17.satisfied);
                      r.check("7 misses the size bound", !b7.satisfied);
                      r.check("17-regular graph connected", components_bfs(big).count == 1);
                      r.check("7-regular graph connected", components_bfs(small).count == 1);
                      if (components_bfs(big).count == 1)
                        r.check("17-regular graph Ramanujan", is_ramanujan(big, tol).ramanujan);
                      if (components_bfs(small).count == 1)
                        r.check("7-regular graph Ramanujan", is_ramanujan(small, tol).ramanujan);
                      return r.done();
                    }});

  return checks;
}

/// Runs the named checks (all when `ids` is empty). Unknown ids throw.
inline std::vector<CheckOutcome> run_reproduction(const std::vector<std::string>& ids = {},
                                                  double tolerance = kDefaultTolerance) {
  auto checks = reproduction_checks();
  for (const auto& id : ids) {
    bool known = std::any_of(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; });
    if (!known) throw ValidationError("unknown example id '" + id + "'");
  }
  std::vector<CheckOutcome> out;
  for (const auto& c : checks) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    out.push_back(c.run(tolerance));
  }
  return out;
}

}  // namespace pairgraph
