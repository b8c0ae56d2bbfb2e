#pragma once

// Adjacency spectra of pair graphs, the closed-form trivial eigenvalues, the
// multiplicity statements, and Ramanujan certification.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pairgraph/error.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/structure.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

inline constexpr double kDefaultTolerance = 1e-8;
inline constexpr std::size_t kDenseSpectrumCap = 3000;

struct EigenCluster {
  double value;
  std::size_t multiplicity;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  std::vector<EigenCluster> clusters;  // descending by value
  double tolerance = kDefaultTolerance;
  /// max(1, max degree); tolerances apply to eigenvalues divided by this.
  double scale = 1.0;

  double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double smallest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }

  /// Number of eigenvalues within `tol` of `value`.
  std::size_t count_near(double value, double tol) const {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [&](double x) { return std::abs(x - value) <= tol; }));
  }

  /// Multiplicity of the cluster whose value is within `tol` of `value`, 0 if none.
  std::size_t cluster_multiplicity(double value, double tol) const {
    for (const auto& c : clusters)
      if (std::abs(c.value - value) <= tol) return c.multiplicity;
    return 0;
  }

  /// Absolute gap used for clustering: 10 τ in scaled units.
  double merge_gap() const { return 10.0 * tolerance * scale; }
};

inline Eigen::MatrixXd adjacency_matrix(const PairGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Element u = 0; u < graph.vertex_count(); ++u)
    for (Element v : graph.neighbors(u)) a(u, v) = 1.0;
  return a;
}

inline double spectral_scale(const PairGraph& graph) {
  std::size_t k = 0;
  for (Element v = 0; v < graph.vertex_count(); ++v) k = std::max(k, graph.degree(v));
  return std::max<double>(1.0, static_cast<double>(k));
}

/// Single-linkage clustering of a descending list: a new cluster starts
/// whenever the gap to the previous value exceeds `gap`.
inline std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& descending, double gap) {
  std::vector<EigenCluster> out;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    if (count > 0 && descending[i - 1] - descending[i] > gap) {
      out.push_back({sum / static_cast<double>(count), count});
      sum = 0.0;
      count = 0;
    }
    sum += descending[i];
    ++count;
  }
  if (count > 0) out.push_back({sum / static_cast<double>(count), count});
  return out;
}

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i pairs with values(i)
};

/// Dense symmetric eigensolver (Householder tridiagonalization followed by
/// implicit symmetric QR). Deterministic; the matrix is scaled by 1/scale
/// before the decomposition and values are scaled back.
inline EigenDecomposition compute_eigenpairs(const PairGraph& graph, bool with_vectors = true) {
  if (graph.vertex_count() > kDenseSpectrumCap)
    throw SizeCapError("dense spectrum limited to " + std::to_string(kDenseSpectrumCap) + " vertices, graph has " +
                       std::to_string(graph.vertex_count()));
  const double scale = spectral_scale(graph);
  const Eigen::MatrixXd a = adjacency_matrix(graph) / scale;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, with_vectors ? Eigen::ComputeEigenvectors
                                                                        : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NonConvergenceError("symmetric eigensolver did not converge on a " +
                              std::to_string(graph.vertex_count()) + "-vertex graph");
  EigenDecomposition out;
  out.values = solver.eigenvalues() * scale;
  if (with_vectors) out.vectors = solver.eigenvectors();
  return out;
}

inline Spectrum compute_spectrum(const PairGraph& graph, double tolerance = kDefaultTolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  Spectrum s;
  s.tolerance = tolerance;
  s.scale = spectral_scale(graph);
  if (graph.vertex_count() == 0) return s;
  const auto dec = compute_eigenpairs(graph, false);
  s.eigenvalues.assign(dec.values.data(), dec.values.data() + dec.values.size());
  std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());
  s.clusters = cluster_eigenvalues(s.eigenvalues, s.merge_gap());
  return s;
}

/// μ± = (|S_H| ± sqrt(|S_H|^2 + 4 Σ_i |S_i|^2)) / 2 with eigenfunction μ± on
/// H and |S_i| on the i-th nontrivial coset. μ− is absent when S_O is empty.
struct TrivialEigenvalues {
  double mu_plus = 0.0;
  std::optional<double> mu_minus;
  std::size_t inner_size = 0;
  std::size_t coset_square_sum = 0;

  /// μ^2 − |S_H| μ − Σ |S_i|^2
  double quadratic_residual(double mu) const {
    return mu * mu - static_cast<double>(inner_size) * mu - static_cast<double>(coset_square_sum);
  }
};

inline TrivialEigenvalues trivial_eigenvalues(const Subgroup&, const GeneratingSet& gen) {
  if (gen.empty()) throw ValidationError("trivial eigenvalues need a nonempty generating set");
  TrivialEigenvalues t;
  t.inner_size = gen.inner.size();
  for (std::size_t i = 1; i < gen.coset_counts.size(); ++i) t.coset_square_sum += gen.coset_counts[i] * gen.coset_counts[i];
  const double sh = static_cast<double>(t.inner_size);
  const double root = std::sqrt(sh * sh + 4.0 * static_cast<double>(t.coset_square_sum));
  t.mu_plus = (sh + root) / 2.0;
  if (!gen.outer.empty()) t.mu_minus = (sh - root) / 2.0;
  return t;
}

/// The eigenfunction f± as a vertex vector.
inline std::vector<double> trivial_eigenfunction(const Subgroup& h, const GeneratingSet& gen, double mu) {
  std::vector<double> f(h.parent().order());
  for (Element x = 0; x < f.size(); ++x) {
    const auto c = h.coset_of(x);
    f[x] = c == 0 ? mu : static_cast<double>(gen.coset_counts[c]);
  }
  return f;
}

/// [H : ⟨H ∩ (S_H ∪ S_O S_O^-1)⟩], the multiplicity of μ+.
inline std::size_t largest_eigenvalue_multiplicity(const Subgroup& h, const GeneratingSet& gen) {
  if (gen.empty() || gen.outer.empty())
    throw ValidationError("largest-eigenvalue multiplicity needs S nonempty with S − H nonempty");
  return h.order() / identity_subgroup(h, gen).size();
}

/// |G| − |H| − min(|∪_{s ∈ S_O} H s|, |H|)
inline std::size_t zero_multiplicity_lower_bound(const Subgroup& h, const GeneratingSet& gen) {
  const std::size_t covered = gen.covered_cosets() * h.order();
  return h.parent().order() - h.order() - std::min(covered, h.order());
}

struct RamanujanVerdict {
  bool ramanujan = false;
  std::size_t k = 0;
  double bound = 0.0;             // 2 sqrt(k - 1)
  double worst_nontrivial = 0.0;  // max |μ| over μ ≠ ±k
  double margin = 0.0;            // bound − worst_nontrivial
};

inline RamanujanVerdict is_ramanujan(const PairGraph& graph, const Spectrum& spectrum) {
  const auto reg = regularity_check(graph);
  if (!reg.regular) throw NotRegularError("Ramanujan test needs a regular graph");
  if (components_bfs(graph).count != 1) throw NotConnectedError("Ramanujan test needs a connected graph");
  RamanujanVerdict v;
  v.k = *reg.degree;
  const double k = static_cast<double>(v.k);
  v.bound = 2.0 * std::sqrt(std::max(0.0, k - 1.0));
  const double tol = spectrum.tolerance * spectrum.scale;
  for (double mu : spectrum.eigenvalues) {
    if (std::abs(std::abs(mu) - k) <= spectrum.merge_gap()) continue;
    v.worst_nontrivial = std::max(v.worst_nontrivial, std::abs(mu));
  }
  v.margin = v.bound - v.worst_nontrivial;
  v.ramanujan = v.worst_nontrivial <= v.bound + tol;
  return v;
}

inline RamanujanVerdict is_ramanujan(const PairGraph& graph, double tolerance = kDefaultTolerance) {
  return is_ramanujan(graph, compute_spectrum(graph, tolerance));
}

namespace detail {

inline void require_index_two_outer(const Subgroup& h, const ElementSet& s, const char* what) {
  if (h.index() != 2) throw ValidationError(std::string(what) + " needs [G:H] = 2");
  for (Element x : s) {
    if (x >= h.parent().order()) throw ValidationError("element " + std::to_string(x) + " out of range");
    if (h.contains(x)) throw ValidationError(std::string(what) + " needs S ⊆ G − H");
  }
}

}  // namespace detail

struct SymmetryReport {
  std::size_t k = 0;  // |S1|
  std::size_t n = 0;  // |H|
  Spectrum first;
  Spectrum second;
  /// max over positions 2..2n−1 of |λ_i − μ_i|
  double max_interior_deviation = 0.0;
  bool extremes_ok = false;
  /// When the S1 graph has c > 1 components, the S2 graph carries ±k with
  /// multiplicity at least c − 1.
  std::size_t first_components = 0;
  bool disconnected_case_ok = true;
  bool holds = false;
};

/// Complementary generating sets S1 ⊔ S2 = G − H at index 2 share every
/// eigenvalue except the extremes ±|S1| and ±|S2|.
inline SymmetryReport verify_spectral_symmetry(const Subgroup& h, const ElementSet& s1, const ElementSet& s2,
                                               double compare_tolerance = 1e-6,
                                               double tolerance = kDefaultTolerance) {
  const ElementSet a = normalize(s1), b = normalize(s2);
  detail::require_index_two_outer(h, a, "spectral symmetry");
  detail::require_index_two_outer(h, b, "spectral symmetry");
  ElementSet both;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (both.size() != a.size() + b.size()) throw ValidationError("S1 and S2 must be disjoint");
  if (both.size() != h.order()) throw ValidationError("S1 ∪ S2 must be all of G − H");
  if (a.empty() || b.empty()) throw ValidationError("both generating sets must be nonempty (0 < k < n)");

  SymmetryReport r;
  r.k = a.size();
  r.n = h.order();
  const PairGraph g1 = build_pair_graph(h, a);
  const PairGraph g2 = build_pair_graph(h, b);
  r.first = compute_spectrum(g1, tolerance);
  r.second = compute_spectrum(g2, tolerance);
  const auto& l = r.first.eigenvalues;
  const auto& m = r.second.eigenvalues;
  for (std::size_t i = 1; i + 1 < l.size(); ++i)
    r.max_interior_deviation = std::max(r.max_interior_deviation, std::abs(l[i] - m[i]));
  const double k = static_cast<double>(r.k), nk = static_cast<double>(r.n - r.k);
  r.extremes_ok = std::abs(l.front() - k) <= compare_tolerance && std::abs(l.back() + k) <= compare_tolerance &&
                  std::abs(m.front() - nk) <= compare_tolerance && std::abs(m.back() + nk) <= compare_tolerance;
  r.first_components = components_bfs(g1).count;
  if (r.first_components > 1) {
    const std::size_t need = r.first_components - 1;
    r.disconnected_case_ok = r.second.count_near(k, compare_tolerance) >= need &&
                             r.second.count_near(-k, compare_tolerance) >= need;
  }
  r.holds = r.max_interior_deviation <= compare_tolerance && r.extremes_ok && r.disconnected_case_ok;
  return r;
}

struct BoundCheck {
  double bound = 0.0;  // n + 2 − 2 sqrt(n)
  std::size_t k = 0;
  bool satisfied = false;
};

/// |S| >= n + 2 − 2 sqrt(n) at index 2 with S ⊆ G − H guarantees a
/// Ramanujan graph whenever the graph is connected.
inline BoundCheck ramanujan_bound_check(const Subgroup& h, const GeneratingSet& gen) {
  detail::require_index_two_outer(h, gen.all, "Ramanujan size bound");
  BoundCheck c;
  const double n = static_cast<double>(h.order());
  c.bound = n + 2.0 - 2.0 * std::sqrt(n);
  c.k = gen.size();
  c.satisfied = static_cast<double>(c.k) >= c.bound;
  return c;
}

}  // namespace pairgraph
