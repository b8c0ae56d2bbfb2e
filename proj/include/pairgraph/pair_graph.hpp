#pragma once

// The group-subgroup pair graph on vertex set G: edges {h, h s} for h in H and
// s in S, where S ∩ H must be symmetric and e is not in S.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

/// A validated generating set split as S_H = S ∩ H and S_O = S − H.
/// `coset_counts[i]` is |S ∩ H x_i|; entry 0 is |S_H|.
struct GeneratingSet {
  ElementSet all;
  ElementSet inner;
  ElementSet outer;
  std::vector<std::size_t> coset_counts;

  static GeneratingSet validate(const Subgroup& h, ElementSet s) {
    const FiniteGroup& g = h.parent();
    s = normalize(std::move(s));
    if (!s.empty() && s.back() >= g.order())
      throw ValidationError("generating set element " + std::to_string(s.back()) + " out of range");
    if (set_contains(s, g.identity())) throw IdentityInSet("the identity may not be in the generating set");
    GeneratingSet out;
    out.coset_counts.assign(h.index(), 0);
    for (Element x : s) {
      (h.contains(x) ? out.inner : out.outer).push_back(x);
      ++out.coset_counts[h.coset_of(x)];
    }
    for (Element x : out.inner)
      if (!set_contains(out.inner, g.inv(x)))
        throw SymmetryViolation("S ∩ H is not symmetric: " + g.label(x) + " is in S but its inverse " +
                                g.label(g.inv(x)) + " is not");
    out.all = std::move(s);
    return out;
  }

  bool empty() const { return all.empty(); }
  std::size_t size() const { return all.size(); }

  /// Cosets (ids >= 1) that contain an element of S.
  std::size_t covered_cosets() const {
    return static_cast<std::size_t>(
        std::count_if(coset_counts.begin() + 1, coset_counts.end(), [](std::size_t c) { return c > 0; }));
  }
};

inline bool is_symmetric_set(const FiniteGroup& g, const ElementSet& s) {
  return std::all_of(s.begin(), s.end(), [&](Element x) { return set_contains(s, g.inv(x)); });
}

class PairGraph {
 public:
  PairGraph(Subgroup h, GeneratingSet gen) : subgroup_(std::move(h)), gen_(std::move(gen)) {
    const FiniteGroup& g = subgroup_.parent();
    neighbors_.resize(g.order());
    for (Element x : subgroup_.elements())
      for (Element s : gen_.all) {
        Element y = g.mul(x, s);
        neighbors_[x].push_back(y);
        neighbors_[y].push_back(x);
      }
    for (auto& n : neighbors_) {
      std::sort(n.begin(), n.end());
      n.erase(std::unique(n.begin(), n.end()), n.end());
      edge_count_ += n.size();
    }
    edge_count_ /= 2;
  }

  const FiniteGroup& group() const { return subgroup_.parent(); }
  const Subgroup& subgroup() const { return subgroup_; }
  const GeneratingSet& generating_set() const { return gen_; }

  std::size_t vertex_count() const { return neighbors_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Element>& neighbors(Element v) const { return neighbors_[v]; }
  std::size_t degree(Element v) const { return neighbors_[v].size(); }
  bool adjacent(Element u, Element v) const { return set_contains(neighbors_[u], v); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(neighbors_.size());
    for (const auto& n : neighbors_) out.push_back(n.size());
    return out;
  }

  /// Sorted (u, v) pairs with u < v.
  std::vector<std::pair<Element, Element>> edges() const {
    std::vector<std::pair<Element, Element>> out;
    out.reserve(edge_count_);
    for (Element u = 0; u < neighbors_.size(); ++u)
      for (Element v : neighbors_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Row-major 0/1 matrix.
  std::vector<std::uint8_t> dense_adjacency() const {
    const std::size_t n = neighbors_.size();
    std::vector<std::uint8_t> a(n * n, 0);
    for (Element u = 0; u < n; ++u)
      for (Element v : neighbors_[u]) a[u * n + v] = 1;
    return a;
  }

 private:
  Subgroup subgroup_;
  GeneratingSet gen_;
  std::vector<std::vector<Element>> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Validation happens before any edge is built.
inline PairGraph build_pair_graph(const Subgroup& h, ElementSet s) {
  auto gen = GeneratingSet::validate(h, std::move(s));
  return PairGraph(h, std::move(gen));
}

/// Cayley graph G(G, S), i.e. the pair graph with H = G.
inline PairGraph build_cayley_graph(const FiniteGroup& g, ElementSet s) {
  return build_pair_graph(builtin_subgroup(g, "whole"), std::move(s));
}

/// The group-subgroup matrix (x_{h_i^-1 g_j}) evaluated at the indicator of
/// S: rows are H in ascending order, columns are all of G. Independent of
/// PairGraph; used to cross-check its H-rows.
inline std::vector<std::vector<std::uint8_t>> adjacency_rows_via_group_matrix(const Subgroup& h,
                                                                              const ElementSet& s) {
  const FiniteGroup& g = h.parent();
  const auto gen = GeneratingSet::validate(h, s);
  std::vector<std::vector<std::uint8_t>> rows;
  for (Element hi : h.elements()) {
    std::vector<std::uint8_t> row(g.order(), 0);
    for (Element gj = 0; gj < g.order(); ++gj) row[gj] = set_contains(gen.all, g.mul(g.inv(hi), gj)) ? 1 : 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CosetDegree {
  std::uint32_t coset;
  std::size_t degree;
  std::size_t size;
};

/// One entry per right coset, read off the built graph at the coset
/// representative.
inline std::vector<CosetDegree> degree_profile(const PairGraph& graph) {
  const Subgroup& h = graph.subgroup();
  std::vector<CosetDegree> out;
  for (std::uint32_t c = 0; c < h.index(); ++c) out.push_back({c, graph.degree(h.coset_rep(c)), h.order()});
  return out;
}

inline ElementSet isolated_vertices(const PairGraph& graph) {
  ElementSet out;
  for (Element v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) == 0) out.push_back(v);
  return out;
}

struct RegularityReport {
  bool regular = false;
  std::optional<std::size_t> degree;
  /// What the index/S_H criterion predicts for a nontrivial graph.
  bool criterion_predicts = false;
  bool agrees = false;
  std::string reason;
};

inline RegularityReport regularity_check(const PairGraph& graph) {
  RegularityReport r;
  const auto deg = graph.degrees();
  r.regular = std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
  if (r.regular) r.degree = deg.front();
  const auto& gen = graph.generating_set();
  const std::size_t index = graph.subgroup().index();
  if (gen.empty()) {
    r.criterion_predicts = true;
    r.reason = "trivial graph (S empty): every vertex has degree 0";
  } else if (index == 1) {
    r.criterion_predicts = true;
    r.reason = "[G:H] = 1: Cayley graph, regular of degree |S|";
  } else if (index == 2 && gen.inner.empty()) {
    r.criterion_predicts = true;
    r.reason = "[G:H] = 2 and S ∩ H empty: regular of degree |S|";
  } else {
    r.criterion_predicts = false;
    r.reason = index == 2 ? "[G:H] = 2 but S ∩ H nonempty: H-vertices have larger degree"
                          : "[G:H] = " + std::to_string(index) + " >= 3: never regular";
  }
  r.agrees = r.criterion_predicts == r.regular;
  return r;
}

/// For [G:H] = 2 and S ⊆ G − H: true iff S is symmetric, in which case the
/// pair graph must coincide with the Cayley graph G(G, S). A mismatch there
/// is an internal error.
inline bool is_cayley_reduction(const PairGraph& graph) {
  const Subgroup& h = graph.subgroup();
  if (h.index() != 2) throw ValidationError("Cayley reduction check needs [G:H] = 2");
  if (!graph.generating_set().inner.empty()) throw ValidationError("Cayley reduction check needs S ⊆ G − H");
  const FiniteGroup& g = graph.group();
  const ElementSet& s = graph.generating_set().all;
  if (!is_symmetric_set(g, s)) return false;
  const PairGraph cayley = build_cayley_graph(g, s);
  for (Element v = 0; v < g.order(); ++v)
    if (cayley.neighbors(v) != graph.neighbors(v))
      throw std::logic_error("symmetric S but pair graph differs from Cayley graph at " + g.label(v));
  return true;
}

}  // namespace pairgraph
